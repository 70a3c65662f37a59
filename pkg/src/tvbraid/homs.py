"""The named quotient maps between the presented families.

Concrete targets are the permutation models from perms; one map rewrites
words of the decorated pair family into the virtual pure family, so its
target is symbolic.  A map constructed by make_hom is unverified until
check_well_defined has run; evaluating through an unverified map runs the
check first and refuses a map whose relator images do not vanish.
"""

from __future__ import annotations

from .conj import expand_word
from .perms import (
    FlipVector,
    Permutation,
    SignedPermutation,
    eval_word,
    format_element,
    strip_sign,
)
from .present import Presentation, build_presentation
from .words import Atom, Word, format_word, free_reduce, gamma, invert, lam, xgen

#: name -> (source family, target family or model kind)
HOM_TABLE = {
    "phiP": ("tvbn", "perm"),
    "phiH": ("tvbn", "perm"),
    "phiPT": ("tvbn", "signed"),
    "phiHT": ("tvbn", "signed"),
    "psiP": ("tvpn", "flip"),
    "psiH": ("tvhn", "flip"),
    "plToVp": ("pln", "vpn"),
}

SOURCE_ALPHABET = {
    "tvbn": "Ambient",
    "tvpn": "PureTwisted",
    "tvhn": "HTwisted",
    "pln": "DecoratedPL",
    "hln": "DecoratedHL",
}


class Homomorphism:
    """A generator-image table with a memoized well-definedness verdict."""

    def __init__(self, name, source_family, n, target, images, identity):
        self.name = name
        self.source_family = source_family
        self.n = n
        self.target = target
        self.images = dict(images)
        self.identity = identity
        self._checked: bool | None = None
        self._source_pres: Presentation | None = None

    @property
    def concrete(self) -> bool:
        return self.target in ("perm", "signed", "flip")

    def source_presentation(self) -> Presentation:
        if self._source_pres is None:
            self._source_pres = build_presentation(self.source_family, self.n)
        return self._source_pres

    def replace_image(self, atom: Atom, value) -> "Homomorphism":
        """Copy with one generator image overridden; the copy is unverified."""
        if strip_sign(atom) not in self.images:
            raise ValueError(f"{atom} is not a generator of {self.source_family}")
        images = dict(self.images)
        images[strip_sign(atom)] = value
        return Homomorphism(
            self.name, self.source_family, self.n, self.target, images, self.identity
        )


def _perm_images(n, sigma_to_transposition):
    ident = Permutation.identity(n)
    images = {}
    for i in range(1, n):
        t = Permutation.transposition(n, i, i + 1)
        images[Atom("s", i)] = t if sigma_to_transposition else ident
        images[Atom("r", i)] = t
    for j in range(1, n + 1):
        images[Atom("g", j)] = ident
    return images, ident


def _signed_images(n, sigma_to_transposition):
    ident = SignedPermutation.identity(n)
    images = {}
    for i in range(1, n):
        t = SignedPermutation(
            Permutation.transposition(n, i, i + 1), FlipVector.identity(n)
        )
        images[Atom("s", i)] = t if sigma_to_transposition else ident
        images[Atom("r", i)] = t
    for j in range(1, n + 1):
        images[Atom("g", j)] = SignedPermutation(
            Permutation.identity(n), FlipVector.unit(n, j)
        )
    return images, ident


def _flip_images(n, pair_kind):
    from itertools import permutations

    ident = FlipVector.identity(n)
    images = {}
    for i, j in permutations(range(1, n + 1), 2):
        images[Atom(pair_kind, i, j)] = ident
    for j in range(1, n + 1):
        images[Atom("g", j)] = FlipVector.unit(n, j)
    return images, ident


def _pl_to_vp_images(n):
    from itertools import combinations

    empty = Word(n, (), "PureTwisted")
    images = {}
    for i, j in combinations(range(1, n + 1), 2):
        images[lam(i, j)] = Word(n, [lam(i, j)], "PureTwisted")
        images[lam(i, j, (i,))] = empty
        images[lam(i, j, (j,))] = empty
        images[lam(i, j, (i, j))] = Word(n, [lam(j, i)], "PureTwisted")
    return images, empty


def make_hom(name: str, n: int) -> Homomorphism:
    if name not in HOM_TABLE:
        raise ValueError(f"unknown homomorphism {name!r}; known: {', '.join(HOM_TABLE)}")
    source, target = HOM_TABLE[name]
    if name in ("phiP", "phiH"):
        images, ident = _perm_images(n, sigma_to_transposition=(name == "phiP"))
    elif name in ("phiPT", "phiHT"):
        images, ident = _signed_images(n, sigma_to_transposition=(name == "phiPT"))
    elif name == "psiP":
        images, ident = _flip_images(n, "l")
    elif name == "psiH":
        images, ident = _flip_images(n, "x")
    else:
        images, ident = _pl_to_vp_images(n)
    return Homomorphism(name, source, n, target, images, ident)


def _eval_symbolic(h: Homomorphism, w: Word) -> Word:
    atoms: list[Atom] = []
    for a in w.atoms:
        try:
            img = h.images[strip_sign(a)]
        except KeyError:
            raise ValueError(
                f"atom {a} is not a generator of {h.source_family}"
            ) from None
        atoms.extend(img.atoms if a.sign == 1 else invert(img).atoms)
    return free_reduce(Word(w.n, atoms, check=False))


def _raw_image(h: Homomorphism, w: Word):
    if w.n != h.n:
        raise ValueError(f"rank mismatch: word has {w.n}, map has {h.n}")
    if h.concrete:
        if h.source_family in ("tvpn", "tvhn"):
            w = expand_word(w)
        try:
            return eval_word(w, h.images, h.identity)
        except KeyError as exc:
            raise ValueError(
                f"atom not in the domain of {h.name}: {exc.args[0]}"
            ) from None
    return _eval_symbolic(h, w)


def check_well_defined(h: Homomorphism):
    """Map every relator of the source presentation and check it vanishes.

    Returns (ok, report) where report rows are (relator id, passed, detail):
    for model targets the detail is the image element, for the symbolic
    target the matched relator id or "empty".  The verdict is memoized on
    the map.
    """
    report = []
    ok = True
    target_pres = None if h.concrete else build_presentation(h.target, h.n)
    for r in h.source_presentation().relators:
        img = _raw_image(h, r.word)
        if h.concrete:
            passed = img.is_identity()
            detail = format_element(img)
        else:
            img = free_reduce(img)
            if not img.atoms:
                passed, detail = True, "empty"
            else:
                rid = target_pres.find_matching(img)
                passed = rid is not None
                detail = rid if passed else format_word(img)
        ok = ok and passed
        report.append((r.rid, passed, detail))
    h._checked = ok
    return ok, report


def _ensure_checked(h: Homomorphism) -> None:
    if h._checked is None:
        check_well_defined(h)
    if not h._checked:
        raise ValueError(f"{h.name} is not well-defined with these images")


def image(h: Homomorphism, w: Word):
    """Image of a word; raises if the map fails its relator check."""
    _ensure_checked(h)
    return _raw_image(h, w)


def in_kernel(h: Homomorphism, w: Word) -> bool:
    if not h.concrete:
        raise ValueError(
            f"kernel membership is only decidable for model targets, not {h.target}"
        )
    _ensure_checked(h)
    return _raw_image(h, w).is_identity()
