"""Coset-transversal rewriting of kernel words into subgroup generators.

Each context couples an ambient presented group with one of the named
quotient maps and a Schreier transversal of coset representative words
(every prefix of a representative is a representative).  Kernel words are
rewritten letter by letter: the letter at position p, conjugated back by
the representative of the walked prefix, classifies to a named subgroup
generator or to nothing, and the collected atoms form the subgroup word.
Running every ambient relator through the rewrite, conjugated by every
representative, derives a presentation of the kernel.

Context names and their kernels:

    tvp  ambient tvbn via phiP, pair generators l plus bars
    tvh  ambient tvbn via phiH, pair generators x plus bars
    pt   ambient tvbn via phiPT, decorated l generators
    ht   ambient tvbn via phiHT, decorated x generators
    pl   ambient tvpn via psiP, decorated l generators
    hl   ambient tvhn via psiH, decorated x generators
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .conj import act_gamma_set, act_sn, canonicalize_atom
from .homs import Homomorphism, _raw_image, make_hom
from .perms import (
    FlipVector,
    Permutation,
    SignedPermutation,
    format_element,
    strip_sign,
)
from .present import Presentation, build_presentation
from .words import (
    Atom,
    Word,
    _raw_invert_atoms,
    canonical_key,
    format_word,
    free_reduce,
    gamma,
    reduce,
    rho,
)


class ClassifyError(ValueError):
    """No named subgroup generator matches a rewritten column."""


class Transversal:
    """Coset representative words keyed by their quotient image."""

    def __init__(self, name: str, entries):
        self.name = name
        self.table = {}
        self.order = []
        for el, w in entries:
            if el in self.table:
                raise ValueError(
                    f"transversal collision: {format_element(el)} already taken"
                )
            self.table[el] = w
            self.order.append(el)

    def lookup(self, el) -> Word:
        try:
            return self.table[el]
        except KeyError:
            raise ValueError(
                f"element {format_element(el)} has no coset representative"
            ) from None

    def words(self):
        return [self.table[el] for el in self.order]

    def __len__(self) -> int:
        return len(self.table)


def _perm_transversal(n: int) -> Transversal:
    """Representative words in virtual crossings, one per permutation.

    The block for strand k is the descending chain r<k-1> ... r<j> (empty
    when j = k), and a representative is the product of one block per
    strand, k ascending.  Every prefix of such a word is again one.
    """
    entries = []
    for js in product(*[range(k, 0, -1) for k in range(2, n + 1)]):
        atoms = []
        for k, j in zip(range(2, n + 1), js):
            atoms.extend(rho(m) for m in range(k - 1, j - 1, -1))
        el = Permutation.identity(n)
        for a in atoms:
            el = el * Permutation.transposition(n, a.i, a.i + 1)
        entries.append((el, Word(n, atoms, "Ambient")))
    return Transversal("perm", entries)


def _bar_transversal(n: int) -> Transversal:
    entries = []
    for mask in range(1 << n):
        ks = [k + 1 for k in range(n) if mask >> k & 1]
        el = FlipVector(tuple(mask >> k & 1 for k in range(n)), check=False)
        entries.append((el, Word(n, [gamma(k) for k in ks])))
    return Transversal("bars", entries)


def _perm_bar_transversal(n: int) -> Transversal:
    entries = []
    for pel, pw in _perm_transversal(n).table.items():
        for mask in range(1 << n):
            ks = [k + 1 for k in range(n) if mask >> k & 1]
            el = SignedPermutation(pel, FlipVector.identity(n))
            for k in ks:
                el = el * SignedPermutation(
                    Permutation.identity(n), FlipVector.unit(n, k)
                )
            w = Word(n, pw.atoms + tuple(gamma(k) for k in ks), "Ambient")
            entries.append((el, w))
    return Transversal("perm-bars", entries)


#: context -> (ambient family, quotient map, transversal kind,
#:             subgroup alphabet, registry family or None)
KERNEL_TABLE = {
    "tvp": ("tvbn", "phiP", "perm", "PureTwisted", "tvpn"),
    "tvh": ("tvbn", "phiH", "perm", "HTwisted", "tvhn"),
    "pt": ("tvbn", "phiPT", "perm-bars", "DecoratedPL", None),
    "ht": ("tvbn", "phiHT", "perm-bars", "DecoratedHL", None),
    "pl": ("tvpn", "psiP", "bars", "DecoratedPL", "pln"),
    "hl": ("tvhn", "psiH", "bars", "DecoratedHL", "hln"),
}

_BUILDERS = {
    "perm": _perm_transversal,
    "bars": _bar_transversal,
    "perm-bars": _perm_bar_transversal,
}


@dataclass
class RSContext:
    name: str
    n: int
    ambient: Presentation
    hom: Homomorphism
    transversal: Transversal
    sub_alphabet: str
    registry_family: str | None


def make_context(name: str, n: int) -> RSContext:
    if name not in KERNEL_TABLE:
        raise ValueError(f"unknown kernel {name!r}; known: {', '.join(KERNEL_TABLE)}")
    ambient_family, hom_name, tkind, alphabet, registry = KERNEL_TABLE[name]
    return RSContext(
        name,
        n,
        build_presentation(ambient_family, n),
        make_hom(hom_name, n),
        _BUILDERS[tkind](n),
        alphabet,
        registry,
    )


def _perm_part(t: Word, n: int) -> Permutation:
    el = Permutation.identity(n)
    for a in t.atoms:
        if a.kind == "r":
            el = el * Permutation.transposition(n, a.i, a.i + 1)
        elif a.kind != "g":
            raise ValueError(f"unexpected atom {a} in a transversal word")
    return el


def _bar_part(t: Word) -> list[int]:
    return sorted(a.i for a in t.atoms if a.kind == "g")


def representative(ctx: RSContext, w: Word) -> Word:
    """Transversal word for the coset of w."""
    return ctx.transversal.lookup(_raw_image(ctx.hom, w))


def schreier_generator(ctx: RSContext, t: Word, a: Atom) -> Word:
    """The word t a (representative of t a)^-1, fully reduced."""
    ta = Word(ctx.n, t.atoms + (a,), check=False)
    rep = representative(ctx, ta)
    return reduce(Word(ctx.n, ta.atoms + _raw_invert_atoms(rep.atoms), check=False))


def classify(ctx: RSContext, t: Word, a: Atom):
    """Subgroup generator equal to t a (rep of t a)^-1, or None when that
    element is trivial.

    The rule conjugates the base generator for the column a by t^-1: first
    the bar toggles from the bar part of t, then the index action of the
    inverse of its strand permutation.  Triviality of the skipped columns
    is sound because pure crossing/bar words with trivial signed image are
    trivial, and pure bar words with trivial bar-vector image likewise.
    """
    if a.sign != 1:
        raise ValueError("classify takes a positive atom")
    kind = a.kind
    if ctx.name in ("tvp", "tvh"):
        if kind == "r":
            return None
        pinv = _perm_part(t, ctx.n).inverse()
        if kind == "g":
            return gamma(pinv(a.i))
        if kind == "s":
            if ctx.name == "tvp":
                return Atom("l", pinv(a.i), pinv(a.i + 1), (), -1)
            return Atom("x", pinv(a.i), pinv(a.i + 1), (), 1)
    elif ctx.name in ("pt", "ht"):
        if kind in ("r", "g"):
            return None
        if kind == "s":
            base_kind, sign = ("l", -1) if ctx.name == "pt" else ("x", 1)
            base = Atom(base_kind, a.i, a.i + 1, (), sign)
            toggled = act_gamma_set(_bar_part(t), base)
            return act_sn(_perm_part(t, ctx.n).inverse(), toggled)
    else:
        if kind == "g":
            return None
        expected = "l" if ctx.name == "pl" else "x"
        if kind == expected:
            return act_gamma_set(_bar_part(t), canonicalize_atom(a))
    raise ClassifyError(f"no generator for column ({format_word(t)!r}, {a})")


@dataclass
class RewriteResult:
    word: Word
    raw: Word


def rewrite_tau(ctx: RSContext, u: Word) -> RewriteResult:
    """Rewrite a kernel word into subgroup generators.

    Walks u letter by letter, carrying the quotient image of the prefix.
    A positive letter is classified against the representative of the
    prefix before it, a negative letter against the representative of the
    prefix including it, and classified atoms inherit the letter's sign.
    The result keeps the raw atom sequence alongside the freely reduced
    word, so squares of involution generators survive.

    Raises ValueError when u is not in the kernel.
    """
    if u.n != ctx.n:
        raise ValueError(f"rank mismatch: word has {u.n}, context has {ctx.n}")
    img = _raw_image(ctx.hom, u)
    if not img.is_identity():
        raise ValueError(
            f"word is not in the {ctx.name} kernel; quotient image "
            f"{format_element(img)}"
        )
    cur = ctx.hom.identity
    out: list[Atom] = []
    for a in u.atoms:
        step = _raw_image(ctx.hom, Word(ctx.n, (a,), check=False))
        nxt = cur * step
        t = ctx.transversal.lookup(cur if a.sign == 1 else nxt)
        c = classify(ctx, t, strip_sign(a))
        if c is not None:
            out.append(c if a.sign == 1 else c.inverse())
        cur = nxt
    raw = Word(ctx.n, out, ctx.sub_alphabet, check=False)
    return RewriteResult(free_reduce(raw), raw)


@dataclass
class DerivedRelator:
    rid: str
    word: Word
    source_rid: str
    conj: Word

    def line(self) -> str:
        return (
            f"relator {self.rid} from={self.source_rid} "
            f"conj={format_word(self.conj)} word={format_word(self.word)}"
        )


def derive_relators(ctx: RSContext) -> list[DerivedRelator]:
    """Presentation relators of the kernel: every ambient relator,
    conjugated by every representative, rewritten and deduplicated up to
    the cyclic class key.  Empty rewrites are dropped; each survivor keeps
    its ambient relator and conjugator for auditing."""
    out: list[DerivedRelator] = []
    seen = set()
    for r in ctx.ambient.relators:
        for el in ctx.transversal.order:
            t = ctx.transversal.table[el]
            u = Word(
                ctx.n,
                t.atoms + r.word.atoms + _raw_invert_atoms(t.atoms),
                check=False,
            )
            w = rewrite_tau(ctx, u).word
            if not w.atoms:
                continue
            key = canonical_key(w)
            if key in seen:
                continue
            seen.add(key)
            out.append(DerivedRelator(f"d{len(out) + 1}", w, r.rid, t))
    return out


def derived_presentation(ctx: RSContext, derived=None) -> Presentation:
    from .present import Relator, _decorated_generators
    from itertools import permutations

    if derived is None:
        derived = derive_relators(ctx)
    if ctx.name == "tvp":
        gens = [Atom("l", i, j) for i, j in permutations(range(1, ctx.n + 1), 2)]
        gens += [gamma(k) for k in range(1, ctx.n + 1)]
    elif ctx.name == "tvh":
        gens = [Atom("x", i, j) for i, j in permutations(range(1, ctx.n + 1), 2)]
        gens += [gamma(k) for k in range(1, ctx.n + 1)]
    elif ctx.name in ("pt", "pl"):
        gens = list(_decorated_generators(ctx.n, "l"))
    else:
        gens = list(_decorated_generators(ctx.n, "x"))
    return Presentation(
        f"derived-{ctx.name}",
        ctx.n,
        gens,
        [Relator(d.rid, d.word) for d in derived],
    )


def split(ctx: RSContext, w: Word) -> tuple[Word, Word]:
    """Factor w as (kernel word) * (coset representative)."""
    t = representative(ctx, w)
    k = reduce(Word(ctx.n, w.atoms + _raw_invert_atoms(t.atoms), check=False))
    return k, t
