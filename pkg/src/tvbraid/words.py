"""Words over the generator alphabets of twisted virtual braid groups.

A word is a flat sequence of generator atoms, each an exponent-(+1 or -1)
occurrence of one of five kinds:

    s<i>        classical crossing on strands i, i+1
    r<i>        virtual crossing on strands i, i+1
    g<i>        bar (twist) on strand i
    l<i>,<j>    pure twisted generator on the ordered strand pair (i, j)
    x<i>,<j>    unsigned-flavour pure generator on the ordered pair (i, j)

The l and x kinds may carry a decoration suffix naming a set of bar
conjugators, e.g. ``l1,2:12`` is the pair generator conjugated by g1 g2.
Decoration digits are read one index per character; indices above 9 must be
comma separated (``l10,11:10,11``).  An inverse is written with a trailing
``^-1``.  Atoms are space separated and the empty string is the empty word.

r and g atoms are involutions, so their sign is folded to +1 on
construction; ``r1^-1`` parses but is stored as ``r1``.  Two reduction tiers
exist.  ``free_reduce`` cancels only adjacent inverse pairs of the
sign-carrying kinds (s, l, x) and is what relator bookkeeping uses, since it
keeps squares such as ``g1 g1`` intact.  ``reduce`` additionally cancels
adjacent equal involution atoms and is the normal form for ambient
computation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

KINDS = ("s", "r", "g", "l", "x")

_INVOLUTION = frozenset("rg")
_PAIRED = frozenset("lx")
_KIND_ORDER = {"g": 0, "r": 1, "s": 2, "l": 3, "x": 4}

#: Alphabet tag -> atom kinds the tag admits.
ALPHABETS = {
    "Ambient": frozenset("srg"),
    "PureTwisted": frozenset("lg"),
    "HTwisted": frozenset("xg"),
    "DecoratedPL": frozenset("l"),
    "DecoratedHL": frozenset("x"),
    "Mixed": frozenset("srglx"),
}


class ParseError(ValueError):
    """Malformed word text or a token outside the requested alphabet."""


@dataclass(frozen=True, slots=True)
class Atom:
    """One generator occurrence.

    ``j`` is None except for the paired kinds l and x.  ``deco`` is a
    strictly increasing tuple of bar-conjugator indices (paired kinds only).
    Involution kinds fold their sign to +1.  Index-range checks against a
    rank happen at Word construction, not here.
    """

    kind: str
    i: int
    j: int | None = None
    deco: tuple[int, ...] = ()
    sign: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if self.i < 1:
            raise ValueError(f"strand index must be positive, got {self.i}")
        if self.kind in _PAIRED:
            if self.j is None:
                raise ValueError(f"kind {self.kind!r} needs two strand indices")
            if self.j < 1:
                raise ValueError(f"strand index must be positive, got {self.j}")
            if self.j == self.i:
                raise ValueError("paired generator needs distinct strands")
        else:
            if self.j is not None:
                raise ValueError(f"kind {self.kind!r} takes one strand index")
            if self.deco:
                raise ValueError(f"kind {self.kind!r} cannot carry a decoration")
        if any(b <= a for a, b in zip(self.deco, self.deco[1:])) or any(
            d < 1 for d in self.deco
        ):
            raise ValueError(f"decoration must be strictly increasing, got {self.deco}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.kind in _INVOLUTION and self.sign == -1:
            object.__setattr__(self, "sign", 1)

    def inverse(self) -> "Atom":
        if self.kind in _INVOLUTION:
            return self
        return Atom(self.kind, self.i, self.j, self.deco, -self.sign)

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.i, self.j or 0, self.deco, self.sign)


def sigma(i: int, sign: int = 1) -> Atom:
    return Atom("s", i, sign=sign)


def rho(i: int) -> Atom:
    return Atom("r", i)


def gamma(i: int) -> Atom:
    return Atom("g", i)


def lam(i: int, j: int, deco=(), sign: int = 1, check: bool = True) -> Atom:
    """Pair generator l<i>,<j>, optionally decorated.

    With check=True (the default) the decoration must name a subset of
    {i, j}; check=False admits any indices, which transcriptions of
    externally printed relator tables need.
    """
    deco = tuple(sorted(set(deco)))
    if check and any(d not in (i, j) for d in deco):
        raise ValueError(f"decoration {deco} not a subset of {{{i}, {j}}}")
    return Atom("l", i, j, deco, sign)


def xgen(i: int, j: int, deco=(), sign: int = 1, check: bool = True) -> Atom:
    deco = tuple(sorted(set(deco)))
    if check and any(d not in (i, j) for d in deco):
        raise ValueError(f"decoration {deco} not a subset of {{{i}, {j}}}")
    return Atom("x", i, j, deco, sign)


class Word:
    """Immutable atom sequence with a rank and an alphabet tag.

    Equality and hashing ignore the alphabet tag: the tag is a validation
    gate at construction time, not part of the group element's identity.
    """

    __slots__ = ("n", "atoms", "alphabet")

    def __init__(self, n: int, atoms=(), alphabet: str = "Mixed", check: bool = True):
        if alphabet not in ALPHABETS:
            raise ValueError(f"unknown alphabet tag {alphabet!r}")
        if n < 1:
            raise ValueError(f"rank must be at least 1, got {n}")
        atoms = tuple(atoms)
        kinds = ALPHABETS[alphabet]
        for a in atoms:
            if a.kind not in kinds:
                raise ParseError(f"atom kind {a.kind!r} not in alphabet {alphabet}")
            if a.kind in ("s", "r"):
                if a.i > n - 1:
                    raise ParseError(f"index {a.i} out of range for rank {n}")
            elif a.i > n or (a.j or 0) > n:
                raise ParseError(f"strand index out of range for rank {n}")
            if any(d > n for d in a.deco):
                raise ParseError(f"decoration index out of range for rank {n}")
            if check and a.kind in _PAIRED and any(d not in (a.i, a.j) for d in a.deco):
                raise ParseError(f"decoration {a.deco} not within pair ({a.i}, {a.j})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "alphabet", alphabet)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.atoms)

    def __iter__(self):
        return iter(self.atoms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word) and self.n == other.n and self.atoms == other.atoms
        )

    def __hash__(self) -> int:
        return hash((self.n, self.atoms))

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, n={self.n})"


def join_alphabets(a: str, b: str) -> str:
    if ALPHABETS[b] <= ALPHABETS[a]:
        return a
    if ALPHABETS[a] <= ALPHABETS[b]:
        return b
    return "Mixed"


_TOKEN = re.compile(
    r"(?P<kind>[srglx])(?P<i>\d+)(?:,(?P<j>\d+))?(?::(?P<deco>[\d,]+))?(?:\^(?P<sign>-1))?\Z"
)


def _parse_deco(text: str) -> tuple[int, ...]:
    if "," in text:
        parts = text.split(",")
    else:
        parts = list(text)
    if any(not p.isdigit() for p in parts):
        raise ParseError(f"bad decoration {text!r}")
    return tuple(int(p) for p in parts)


def parse_word(text: str, n: int, alphabet: str = "Mixed", check: bool = True) -> Word:
    """Parse space-separated atom tokens into a Word of the given rank."""
    atoms = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad token {tok!r}")
        kind = m.group("kind")
        i = int(m.group("i"))
        j = int(m.group("j")) if m.group("j") else None
        deco = _parse_deco(m.group("deco")) if m.group("deco") else ()
        sign = -1 if m.group("sign") else 1
        if deco and kind not in _PAIRED:
            raise ParseError(f"kind {kind!r} cannot carry a decoration: {tok!r}")
        try:
            atoms.append(Atom(kind, i, j, tuple(sorted(set(deco))), sign))
        except ValueError as exc:
            raise ParseError(f"bad token {tok!r}: {exc}") from None
    try:
        return Word(n, atoms, alphabet, check=check)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_atom(a: Atom) -> str:
    out = f"{a.kind}{a.i}"
    if a.j is not None:
        out += f",{a.j}"
    if a.deco:
        if all(d <= 9 for d in a.deco):
            out += ":" + "".join(str(d) for d in a.deco)
        else:
            out += ":" + ",".join(str(d) for d in a.deco)
    if a.sign == -1:
        out += "^-1"
    return out


def format_word(w: Word) -> str:
    return " ".join(format_atom(a) for a in w.atoms)


def _is_inverse_pair(a: Atom, b: Atom, involutions: bool) -> bool:
    if a.kind != b.kind:
        return False
    if a.kind in _INVOLUTION:
        return involutions and a == b
    return (a.i, a.j, a.deco) == (b.i, b.j, b.deco) and a.sign == -b.sign


def _cancel(atoms, involutions: bool):
    out = []
    for a in atoms:
        if out and _is_inverse_pair(out[-1], a, involutions):
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs of s, l, x atoms only."""
    return Word(w.n, _cancel(w.atoms, False), w.alphabet, check=False)


def reduce(w: Word) -> Word:
    """Full normal form: free reduction plus cancellation of adjacent equal
    involution atoms (r r, g g), iterated to a fixpoint in one stack pass."""
    return Word(w.n, _cancel(w.atoms, True), w.alphabet, check=False)


def _raw_invert_atoms(atoms) -> tuple:
    return tuple(a.inverse() for a in reversed(atoms))


def invert(w: Word) -> Word:
    """Group inverse: reversed sequence with signs flipped, then reduced."""
    return Word(w.n, _cancel(_raw_invert_atoms(w.atoms), True), w.alphabet, check=False)


def concat(u: Word, v: Word) -> Word:
    if u.n != v.n:
        raise ValueError(f"rank mismatch: {u.n} vs {v.n}")
    return Word(
        u.n, u.atoms + v.atoms, join_alphabets(u.alphabet, v.alphabet), check=False
    )


def conjugate(w: Word, a: Word) -> Word:
    """w conjugated by a, meaning a^-1 w a, reduced."""
    if w.n != a.n:
        raise ValueError(f"rank mismatch: {w.n} vs {a.n}")
    inv = _raw_invert_atoms(a.atoms)
    return Word(
        w.n,
        _cancel(inv + w.atoms + a.atoms, True),
        join_alphabets(w.alphabet, a.alphabet),
        check=False,
    )


def _gamma_runsorted(atoms) -> tuple:
    """Ascending-sort every maximal cyclic run of adjacent g atoms.

    Bar atoms commute with each other and square to the identity in every
    group this package presents, so reordering a run changes nothing.  Runs
    are cyclic: the word is first rotated to start on a non-bar atom, which
    makes the linear runs coincide with the cyclic ones.
    """
    if not atoms:
        return ()
    if all(a.kind == "g" for a in atoms):
        return tuple(sorted(atoms, key=Atom.sort_key))
    p = next(k for k, a in enumerate(atoms) if a.kind != "g")
    out: list[Atom] = []
    run: list[Atom] = []
    for a in atoms[p:] + atoms[:p]:
        if a.kind == "g":
            run.append(a)
        else:
            out.extend(sorted(run, key=Atom.sort_key))
            run = []
            out.append(a)
    out.extend(sorted(run, key=Atom.sort_key))
    return tuple(out)


def canonical_key(w: Word) -> tuple:
    """Cyclic-class key: minimum over all rotations of the word and of its
    inverse, with bar runs pre-sorted.

    Two relators that differ by a cyclic rotation, by inversion, or by the
    order of bars inside a run get the same key.  Example: the derived
    relator ``l2,1^-1 g1 g2 l1,2 g1 g2`` and the registry form
    ``l1,2 g1 g2 l2,1^-1 g2 g1`` are cyclically equal only after the final
    run g2 g1 is sorted to g1 g2; both produce one key.
    """
    best = None
    for base in (w.atoms, _raw_invert_atoms(w.atoms)):
        atoms = _gamma_runsorted(base)
        m = len(atoms)
        if m == 0:
            return ()
        keys = [a.sort_key() for a in atoms]
        for r in range(m):
            cand = tuple(keys[r:] + keys[:r])
            if best is None or cand < best:
                best = cand
    return best
