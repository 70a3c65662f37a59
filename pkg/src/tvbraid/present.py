"""Presentation registry for the braid-like families this package knows.

Families, keyed by short names:

    bn    classical braid group
    vbn   virtual braid group (adds virtual crossings r<i>)
    vpn   virtual pure braid group on pair generators l<k>,<l>
    vhn   the unsigned-flavour analogue on x<k>,<l>
    tvbn  twisted virtual braid group (adds bars g<j>)
    tvpn  kernel of the bar-aware strand-permutation map, on l plus g
    tvhn  kernel of the bar-aware crossing-forgetting map, on x plus g
    tsn   subgroup generated by virtual crossings and bars
    an    elementary abelian bar subgroup
    pln   bar-free kernel inside tvpn, on decorated l generators
    hln   bar-free kernel inside tvhn, on decorated x generators

Relator schemas expand over all admissible index tuples and deduplicate up
to the cyclic class key, so symmetric schemas contribute one relator per
genuine class.  Relators are stored free-reduced only: involution squares
such as ``g1 g1`` are themselves relators and must survive storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .conj import canonicalize_atom, conjugate_by_bars, expand_atom
from .words import (
    Atom,
    Word,
    _raw_invert_atoms,
    canonical_key,
    format_atom,
    format_word,
    free_reduce,
    gamma,
    lam,
    reduce,
    rho,
    sigma,
    xgen,
)

FAMILIES = (
    "bn",
    "vbn",
    "vpn",
    "vhn",
    "tvbn",
    "tvpn",
    "tvhn",
    "tsn",
    "an",
    "pln",
    "hln",
)


@dataclass(frozen=True)
class Relator:
    rid: str
    word: Word


class Presentation:
    __slots__ = ("family", "n", "generators", "relators", "_keys")

    def __init__(self, family: str, n: int, generators, relators):
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", tuple(generators))
        object.__setattr__(self, "relators", tuple(relators))
        object.__setattr__(self, "_keys", None)

    def __setattr__(self, name, value):
        raise AttributeError("Presentation is immutable")

    def relator_keys(self) -> dict:
        """Cyclic class key -> id of the first relator in that class."""
        if self._keys is None:
            keys = {}
            for r in self.relators:
                keys.setdefault(canonical_key(r.word), r.rid)
            object.__setattr__(self, "_keys", keys)
        return self._keys

    def find_matching(self, w: Word) -> str | None:
        w = free_reduce(w)
        if not w.atoms:
            return None
        return self.relator_keys().get(canonical_key(w))

    def matches_relator(self, w: Word) -> bool:
        """True if w is an instance of some relator up to rotation and
        inversion, or collapses to nothing outright."""
        w = free_reduce(w)
        if not w.atoms:
            return True
        return canonical_key(w) in self.relator_keys()

    def __repr__(self) -> str:
        return (
            f"Presentation({self.family!r}, n={self.n}, "
            f"{len(self.generators)} generators, {len(self.relators)} relators)"
        )


def _word(n, atoms) -> Word:
    return Word(n, atoms, check=False)


def _eq(n, lhs, rhs) -> Word:
    """Relator for lhs == rhs, as lhs rhs^-1 without cancellation of
    involution squares."""
    return free_reduce(_word(n, tuple(lhs) + _raw_invert_atoms(tuple(rhs))))


def _comm(n, a, b) -> Word:
    return _eq(n, tuple(a) + tuple(b), tuple(b) + tuple(a))


def _dedup(pairs):
    seen = set()
    out = []
    for rid, w in pairs:
        w = free_reduce(w)
        key = canonical_key(w)
        if key in seen:
            continue
        seen.add(key)
        out.append(Relator(rid, w))
    return out


def _braid_relators(n):
    for i in range(1, n - 1):
        yield f"sigma-braid({i})", _eq(
            n,
            [sigma(i), sigma(i + 1), sigma(i)],
            [sigma(i + 1), sigma(i), sigma(i + 1)],
        )
    for i, j in permutations(range(1, n), 2):
        if abs(i - j) >= 2:
            yield f"sigma-comm({i},{j})", _comm(n, [sigma(i)], [sigma(j)])


def _virtual_relators(n):
    for i in range(1, n):
        yield f"rho-square({i})", _word(n, [rho(i), rho(i)])
    for i in range(1, n - 1):
        yield f"rho-braid({i})", _eq(
            n, [rho(i), rho(i + 1), rho(i)], [rho(i + 1), rho(i), rho(i + 1)]
        )
    for i, j in permutations(range(1, n), 2):
        if abs(i - j) >= 2:
            yield f"rho-comm({i},{j})", _comm(n, [rho(i)], [rho(j)])
    for i, j in permutations(range(1, n), 2):
        if abs(i - j) >= 2:
            yield f"sigma-rho-comm({i},{j})", _comm(n, [sigma(i)], [rho(j)])
    for i in range(1, n - 1):
        yield f"sigma-rho-braid({i})", _eq(
            n, [rho(i), rho(i + 1), sigma(i)], [sigma(i + 1), rho(i), rho(i + 1)]
        )


def _bar_relators(n):
    for i in range(1, n + 1):
        yield f"gamma-square({i})", _word(n, [gamma(i), gamma(i)])
    for i, j in permutations(range(1, n + 1), 2):
        yield f"gamma-comm({i},{j})", _comm(n, [gamma(i)], [gamma(j)])


def _twisted_ambient_relators(n):
    yield from _bar_relators(n)
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                yield f"gamma-rho-comm({j};{i})", _comm(n, [gamma(j)], [rho(i)])
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                yield f"gamma-sigma-comm({j};{i})", _comm(n, [gamma(j)], [sigma(i)])
    for i in range(1, n):
        yield f"gamma-rho-shift({i})", _eq(
            n, [rho(i), gamma(i)], [gamma(i + 1), rho(i)]
        )
    for i in range(1, n):
        yield f"gamma-twist({i})", _eq(
            n,
            [rho(i), sigma(i), rho(i)],
            [gamma(i + 1), gamma(i), sigma(i), gamma(i), gamma(i + 1)],
        )


def _pair_relators(n, make, label):
    for (i, j), (k, l) in permutations(
        [p for p in permutations(range(1, n + 1), 2)], 2
    ):
        if {i, j}.isdisjoint({k, l}):
            yield f"{label}-comm({i},{j};{k},{l})", _comm(
                n, [make(i, j)], [make(k, l)]
            )


def _lambda_triples(n):
    for i, j, k in permutations(range(1, n + 1), 3):
        a, b, c = lam(k, i), lam(k, j), lam(i, j)
        yield f"lambda-triple({k};{i},{j})", _eq(n, [a, b, c], [c, b, a])


def _x_braids(n):
    for i, k, j in permutations(range(1, n + 1), 3):
        a, b = xgen(i, k), xgen(k, j)
        yield f"x-braid({i},{k},{j})", _eq(n, [a, b, a], [b, a, b])


def _lambda_bar_relators(n):
    for i, j in permutations(range(1, n + 1), 2):
        for k in range(1, n + 1):
            if k not in (i, j):
                yield f"lambda-gamma-comm({i},{j};{k})", _comm(
                    n, [lam(i, j)], [gamma(k)]
                )
    for i, j in permutations(range(1, n + 1), 2):
        yield f"lambda-swap({i},{j})", _eq(
            n,
            [lam(i, j)],
            [gamma(i), gamma(j), lam(j, i), gamma(j), gamma(i)],
        )


def _x_bar_relators(n):
    for i, j in permutations(range(1, n + 1), 2):
        for k in range(1, n + 1):
            if k not in (i, j):
                yield f"x-gamma-comm({i},{j};{k})", _comm(n, [xgen(i, j)], [gamma(k)])
    for i, j in permutations(range(1, n + 1), 2):
        yield f"x-swap({i},{j})", _eq(
            n,
            [xgen(i, j)],
            [gamma(i), gamma(j), xgen(j, i), gamma(j), gamma(i)],
        )


def _orbit_relators(n, base_pairs):
    """Expand each base relator into its full bar-conjugation orbit.

    The base words may use larger-first pair atoms; those are folded to
    canonical decorated form first, so every output word is bar-free over
    the decorated alphabet.  Masks run in ascending order per base relator,
    which makes the registry order deterministic.
    """
    for rid, w in base_pairs:
        folded = _word(n, [canonicalize_atom(a) for a in w.atoms])
        for mask in range(1 << n):
            ks = [k + 1 for k in range(n) if mask >> k & 1]
            deco = "".join(str(k) for k in ks)
            yield f"{rid}|S={deco or '0'}", conjugate_by_bars(ks, folded)


def _decorated_generators(n, kind):
    for i, j in combinations(range(1, n + 1), 2):
        for deco in ((), (i,), (j,), (i, j)):
            yield Atom(kind, i, j, deco)


def build_presentation(family: str, n: int) -> Presentation:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError(f"rank must be at least 1, got {n}")
    sig = [sigma(i) for i in range(1, n)]
    vr = [rho(i) for i in range(1, n)]
    bars = [gamma(i) for i in range(1, n + 1)]
    pairs_l = [lam(i, j) for i, j in permutations(range(1, n + 1), 2)]
    pairs_x = [xgen(i, j) for i, j in permutations(range(1, n + 1), 2)]
    if family == "bn":
        gens, rels = sig, _braid_relators(n)
    elif family == "vbn":
        gens = sig + vr
        rels = list(_braid_relators(n)) + list(_virtual_relators(n))
    elif family == "tvbn":
        gens = sig + vr + bars
        rels = (
            list(_braid_relators(n))
            + list(_virtual_relators(n))
            + list(_twisted_ambient_relators(n))
        )
    elif family == "vpn":
        gens = pairs_l
        rels = list(_pair_relators(n, lam, "lambda")) + list(_lambda_triples(n))
    elif family == "vhn":
        gens = pairs_x
        rels = list(_pair_relators(n, xgen, "x")) + list(_x_braids(n))
    elif family == "tvpn":
        gens = pairs_l + bars
        rels = (
            list(_pair_relators(n, lam, "lambda"))
            + list(_lambda_triples(n))
            + list(_bar_relators(n))
            + list(_lambda_bar_relators(n))
        )
    elif family == "tvhn":
        gens = pairs_x + bars
        rels = (
            list(_pair_relators(n, xgen, "x"))
            + list(_x_braids(n))
            + list(_bar_relators(n))
            + list(_x_bar_relators(n))
        )
    elif family == "tsn":
        gens = vr + bars
        rels = list(_virtual_relators_no_sigma(n)) + list(_ts_bar_relators(n))
    elif family == "an":
        gens, rels = bars, _bar_relators(n)
    elif family == "pln":
        gens = list(_decorated_generators(n, "l"))
        base = list(_pair_relators(n, lam, "lambda")) + list(_lambda_triples(n))
        rels = _orbit_relators(n, base)
    else:
        gens = list(_decorated_generators(n, "x"))
        base = list(_pair_relators(n, xgen, "x")) + list(_x_braids(n))
        rels = _orbit_relators(n, base)
    return Presentation(family, n, gens, _dedup(rels))


def _virtual_relators_no_sigma(n):
    for i in range(1, n):
        yield f"rho-square({i})", _word(n, [rho(i), rho(i)])
    for i in range(1, n - 1):
        yield f"rho-braid({i})", _eq(
            n, [rho(i), rho(i + 1), rho(i)], [rho(i + 1), rho(i), rho(i + 1)]
        )
    for i, j in permutations(range(1, n), 2):
        if abs(i - j) >= 2:
            yield f"rho-comm({i},{j})", _comm(n, [rho(i)], [rho(j)])


def _ts_bar_relators(n):
    yield from _bar_relators(n)
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                yield f"gamma-rho-comm({j};{i})", _comm(n, [gamma(j)], [rho(i)])
    for i in range(1, n):
        yield f"gamma-rho-shift({i})", _eq(
            n, [rho(i), gamma(i)], [gamma(i + 1), rho(i)]
        )


_EXPR_STYLE = {
    "tvpn": "signed",
    "pln": "signed",
    "vpn": "unsigned",
    "tvhn": "x",
    "vhn": "x",
    "hln": "x",
}


def generator_expression(a: Atom, n: int, family: str, target: str = "ambient") -> Word:
    """Express a pair generator (possibly decorated) as a word.

    target="ambient" rewrites down to crossings and bars, using the
    convention the family carries: in the signed flavour the adjacent pair
    generator is r<i> s<i>^-1 and its transpose s<i>^-1 r<i>; the unsigned
    virtual-pure convention is r<i> s<i> and s<i> r<i>; the x flavour uses
    s<i> and r<i> s<i> r<i>.  Distant pairs conjugate the adjacent one by a
    descending chain of virtual crossings.  target="mid" only unwraps the
    decoration, leaving the bare pair atom.
    """
    if a.kind == "g":
        return Word(n, [a], "Ambient")
    if a.kind not in ("l", "x"):
        raise ValueError(f"no expression for kind {a.kind!r}")
    style = _EXPR_STYLE.get(family)
    if style is None:
        raise ValueError(f"family {family!r} has no pair-generator convention")
    if (a.kind == "x") != (style == "x"):
        raise ValueError(f"atom kind {a.kind!r} does not belong to family {family!r}")
    if target == "mid":
        return expand_atom(a, n)
    if target != "ambient":
        raise ValueError(f"unknown target {target!r}")
    if a.deco:
        bars = [gamma(k) for k in a.deco]
        core = generator_expression(
            Atom(a.kind, a.i, a.j, (), a.sign), n, family, "ambient"
        )
        return _word(n, tuple(reversed(bars)) + core.atoms + tuple(bars))
    i, j = (a.i, a.j) if a.i < a.j else (a.j, a.i)
    if style == "signed":
        base = [rho(i), sigma(i, -1)] if a.i < a.j else [sigma(i, -1), rho(i)]
    elif style == "unsigned":
        base = [rho(i), sigma(i)] if a.i < a.j else [sigma(i), rho(i)]
    else:
        base = [sigma(i)] if a.i < a.j else [rho(i), sigma(i), rho(i)]
    chain = [rho(m) for m in range(j - 1, i, -1)]
    atoms = tuple(chain) + tuple(base) + tuple(reversed(chain))
    if a.sign == -1:
        atoms = _raw_invert_atoms(atoms)
    return Word(n, atoms, "Ambient")


def standard_removals(pres: Presentation) -> dict[Atom, Word]:
    """Larger-first pair generators with their swap-identity replacements."""
    out = {}
    for g in pres.generators:
        if g.kind in ("l", "x") and g.i > g.j:
            out[g] = expand_atom(canonicalize_atom(g), pres.n)
    return out


def eliminate_generators(pres: Presentation, removals: dict[Atom, Word]) -> Presentation:
    """Tietze elimination: substitute each removed generator everywhere and
    drop relators that become trivial.

    Substituted relators are fully reduced (involution cancellation is
    sound: the square relators stay in the presentation).  Untouched
    relators pass through as stored.
    """
    for g in removals:
        if g not in pres.generators:
            raise ValueError(f"{format_atom(g)} is not a generator")
    gens = [g for g in pres.generators if g not in removals]
    sub = {g: tuple(w.atoms) for g, w in removals.items()}
    inv_sub = {g: _raw_invert_atoms(atoms) for g, atoms in sub.items()}
    out = []
    for r in pres.relators:
        touched = False
        atoms: list[Atom] = []
        for a in r.word.atoms:
            pos = a if a.sign == 1 else Atom(a.kind, a.i, a.j, a.deco, 1)
            if pos in sub:
                touched = True
                atoms.extend(sub[pos] if a.sign == 1 else inv_sub[pos])
            else:
                atoms.append(a)
        if not touched:
            out.append((r.rid, r.word))
            continue
        w = reduce(_word(pres.n, atoms))
        if w.atoms:
            out.append((r.rid, w))
    return Presentation(f"{pres.family}-reduced", pres.n, gens, _dedup(out))


# ---------------------------------------------------------------------------
# Faithful transcription of the externally printed relator table for the
# bar-free kernel on decorated l generators.  Row C6 is reproduced as
# printed even though it breaks the a b c = c b a mirror pattern of every
# other row and places a decoration outside its atom's pair; comparisons
# against mechanically derived relators are expected to flag exactly that
# row rather than silently absorb it.
# ---------------------------------------------------------------------------

_PL_TRIPLE_ROWS = [
    ("A1", ("ij", "ik", "jk"), ("", "", ""), None),
    ("A2", ("ij", "ik", "jk"), ("i", "i", ""), None),
    ("A3", ("ij", "ik", "jk"), ("j", "", "j"), None),
    ("A4", ("ij", "ik", "jk"), ("", "k", "k"), None),
    ("A5", ("ij", "ik", "jk"), ("ij", "i", "j"), None),
    ("A6", ("ij", "ik", "jk"), ("j", "k", "jk"), None),
    ("A7", ("ij", "ik", "jk"), ("i", "ik", "k"), None),
    ("A8", ("ij", "ik", "jk"), ("ij", "ik", "jk"), None),
    ("B1", ("ij", "jk", "ik"), ("ij", "", ""), None),
    ("B2", ("ij", "jk", "ik"), ("j", "", "i"), None),
    ("B3", ("ij", "jk", "ik"), ("i", "j", ""), None),
    ("B4", ("ij", "jk", "ik"), ("", "j", "i"), None),
    ("B5", ("ij", "jk", "ik"), ("ij", "k", "k"), None),
    ("B6", ("ij", "jk", "ik"), ("i", "jk", "k"), None),
    ("B7", ("ij", "jk", "ik"), ("j", "k", "ik"), None),
    ("B8", ("ij", "jk", "ik"), ("", "jk", "ik"), None),
    ("C1", ("ik", "ij", "jk"), ("", "", "jk"), None),
    ("C2", ("ik", "ij", "jk"), ("i", "i", "jk"), None),
    ("C3", ("ik", "ij", "jk"), ("", "j", "k"), None),
    ("C4", ("ik", "ij", "jk"), ("k", "", "j"), None),
    ("C5", ("ik", "ij", "jk"), ("i", "ij", "k"), None),
    # Printed with an unmirrored right side: the final atom repeats the
    # pair ik but carries decoration j.
    ("C6", ("ik", "ij", "jk"), ("k", "j", "jk"), ("jk", "ij", "ik"), ("jk", "j", "j")),
    ("C7", ("ik", "ij", "jk"), ("ik", "i", "j"), None),
    ("C8", ("ik", "ij", "jk"), ("ik", "ij", ""), None),
]

_PL_COMM_DECOS = [
    ("", ""),
    ("i", ""),
    ("j", ""),
    ("", "k"),
    ("", "l"),
    ("ij", ""),
    ("", "kl"),
    ("i", "k"),
    ("i", "l"),
    ("j", "k"),
    ("j", "l"),
    ("ij", "k"),
    ("ij", "l"),
    ("i", "kl"),
    ("j", "kl"),
    ("ij", "kl"),
]


def _table_atom(pair_name, deco_name, env) -> Atom:
    i, j = env[pair_name[0]], env[pair_name[1]]
    deco = tuple(sorted(env[c] for c in deco_name))
    return lam(i, j, deco, check=False)


def transcribed_pl_table(n: int) -> list[tuple[str, Word]]:
    """Instantiate the printed relator table over all index choices.

    Triple rows run over sorted triples i < j < k; commutation rows over
    disjoint sorted pairs.  Words are returned exactly as printed (relator
    form lhs rhs^-1), without dedup, so callers can diff against a derived
    registry and attribute any mismatch to a row id.
    """
    out = []
    for row in _PL_TRIPLE_ROWS:
        if len(row) == 4:
            row_id, order, decos, _ = row
            rhs_row = None
        else:
            row_id, order, decos, rhs_order, rhs_decos = row
            rhs_row = (rhs_order, rhs_decos)
        for i, j, k in combinations(range(1, n + 1), 3):
            env = {"i": i, "j": j, "k": k}
            lhs = [_table_atom(p, d, env) for p, d in zip(order, decos)]
            if rhs_row is None:
                rhs = list(reversed(lhs))
            else:
                rhs = [_table_atom(p, d, env) for p, d in zip(*rhs_row)]
            out.append(
                (f"{row_id}({i},{j},{k})", _eq(n, lhs, rhs))
            )
    for (i, j), (k, l) in combinations(combinations(range(1, n + 1), 2), 2):
        if not {i, j}.isdisjoint({k, l}):
            continue
        env = {"i": i, "j": j, "k": k, "l": l}
        for d1, d2 in _PL_COMM_DECOS:
            a = _table_atom("ij", d1, env)
            b = _table_atom("kl", d2, env)
            out.append(
                (
                    f"comm({i},{j};{k},{l})[{d1 or '0'},{d2 or '0'}]",
                    _comm(n, [a], [b]),
                )
            )
    return out


def presentation_text(pres: Presentation) -> str:
    lines = [f"{pres.family} n={pres.n}"]
    lines.extend(f"gen {format_atom(g)}" for g in pres.generators)
    lines.extend(f"rel {format_word(r.word)}" for r in pres.relators)
    return "\n".join(lines)


def presentation_dict(pres: Presentation) -> dict:
    return {
        "family": pres.family,
        "n": pres.n,
        "generators": [format_atom(g) for g in pres.generators],
        "relators": [
            {"id": r.rid, "word": format_word(r.word)} for r in pres.relators
        ],
    }
