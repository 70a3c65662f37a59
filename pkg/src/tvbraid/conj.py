"""Bar-conjugation algebra on decorated pair generators.

A decorated atom l<i>,<j>:<S> stands for the pair generator conjugated by
the bars named in S.  Conjugation by a single bar g<k> either fixes the
atom (k outside the pair) or toggles k's membership in the decoration;
conjugating by the full ambient symmetric action permutes all indices.
The canonical form keeps i < j with the decoration inside {i, j}, folding
larger-first atoms through the swap identity

    l<i>,<j> == l<j>,<i> conjugated by g<j> g<i>

which turns l<i>,<j>:<S> with i > j into l<j>,<i>:<{i,j} xor S>.
"""

from __future__ import annotations

from .perms import Permutation
from .words import Atom, Word, canonical_key, gamma

_DECORATED = ("l", "x")


def canonicalize_atom(a: Atom) -> Atom:
    """Fold a pair atom to its i < j canonical form via the swap identity."""
    if a.kind not in _DECORATED:
        return a
    if a.i < a.j:
        if any(d not in (a.i, a.j) for d in a.deco):
            raise ValueError(f"decoration {a.deco} not inside pair ({a.i}, {a.j})")
        return a
    pair = {a.i, a.j}
    if any(d not in pair for d in a.deco):
        raise ValueError(f"decoration {a.deco} not inside pair ({a.i}, {a.j})")
    deco = tuple(sorted(pair.symmetric_difference(a.deco)))
    return Atom(a.kind, a.j, a.i, deco, a.sign)


def act_gamma(k: int, a: Atom) -> Atom:
    """Conjugate a canonical decorated atom (or a bar atom) by g<k>."""
    if a.kind == "g":
        return a
    if a.kind not in _DECORATED:
        raise ValueError(f"act_gamma undefined for kind {a.kind!r}")
    a = canonicalize_atom(a)
    if k not in (a.i, a.j):
        return a
    deco = tuple(sorted({k}.symmetric_difference(a.deco)))
    return Atom(a.kind, a.i, a.j, deco, a.sign)


def act_gamma_set(ks, a: Atom) -> Atom:
    for k in ks:
        a = act_gamma(k, a)
    return a


def act_sn(p: Permutation, a: Atom) -> Atom:
    """Push a permutation of the strand indices through an atom; the result
    of a pair atom is re-canonicalized."""
    if a.kind == "g":
        return Atom("g", p(a.i))
    if a.kind not in _DECORATED:
        raise ValueError(f"act_sn undefined for kind {a.kind!r}")
    moved = Atom(a.kind, p(a.i), p(a.j), tuple(sorted(p(d) for d in a.deco)), a.sign)
    return canonicalize_atom(moved)


def normalize_decorated(w: Word) -> Word:
    """Push every bar atom to the right end, absorbing it into decorations.

    Scans left to right with a pending bar set; each decorated atom gets the
    pending conjugators applied, each bar toggles the set.  The result is
    the decorated atoms in order followed by the remaining bars ascending.
    Atom signs survive, since conjugation commutes with inversion.
    """
    pending: set[int] = set()
    out = []
    for a in w.atoms:
        if a.kind == "g":
            pending.symmetric_difference_update({a.i})
        elif a.kind in _DECORATED:
            out.append(act_gamma_set(pending, a))
        else:
            raise ValueError(f"cannot normalize kind {a.kind!r}")
    out.extend(gamma(k) for k in sorted(pending))
    return Word(w.n, out, w.alphabet, check=False)


def conjugate_by_bars(ks, w: Word) -> Word:
    """Conjugate a bar-free decorated word by the bar set, atom by atom."""
    return Word(
        w.n, (act_gamma_set(ks, a) for a in w.atoms), w.alphabet, check=False
    )


def conjugation_orbit(w: Word, n: int) -> list[Word]:
    """All distinct bar conjugates of a bar-free decorated word.

    Runs over every subset of {1..n} in ascending bitmask order and keeps
    one representative per cyclic class, so the output order is
    deterministic.
    """
    seen = {}
    for mask in range(1 << n):
        ks = [k + 1 for k in range(n) if mask >> k & 1]
        cand = conjugate_by_bars(ks, w)
        key = canonical_key(cand)
        if key not in seen:
            seen[key] = cand
    return list(seen.values())


def expand_atom(a: Atom, n: int) -> Word:
    """Decorated atom as a word over the undecorated pair alphabet plus bars:
    descending conjugator bars, the bare pair atom, ascending bars."""
    if a.kind not in _DECORATED:
        raise ValueError(f"expand_atom is for pair atoms, got {a.kind!r}")
    asc = [gamma(k) for k in a.deco]
    base = Atom(a.kind, a.i, a.j, (), a.sign)
    return Word(n, list(reversed(asc)) + [base] + asc, check=False)


def expand_word(w: Word) -> Word:
    out = []
    for a in w.atoms:
        if a.kind in _DECORATED and a.deco:
            out.extend(expand_atom(a, w.n).atoms)
        else:
            out.append(a)
    return Word(w.n, out, w.alphabet, check=False)


def check_generator_identification(n: int, kind: str = "l") -> list[str]:
    """Verify the three larger-first identification identities in canonical
    form for every ordered pair i > j; returns a list of failures."""
    bad = []
    for j in range(1, n + 1):
        for i in range(j + 1, n + 1):
            pair = (i, j)
            cases = [
                (Atom(kind, i, j, (i,)), Atom(kind, j, i, (j,))),
                (Atom(kind, i, j, (j,)), Atom(kind, j, i, (i,))),
                (Atom(kind, i, j, ()), Atom(kind, j, i, (j, i))),
            ]
            for raw, expected in cases:
                got = canonicalize_atom(raw)
                want = canonicalize_atom(expected)
                if got != want:
                    bad.append(f"pair {pair}: {raw} -> {got}, expected {want}")
    return bad
