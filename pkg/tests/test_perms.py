import random
from math import factorial

import pytest

from tvbraid.homs import make_hom
from tvbraid.perms import (
    FlipVector,
    Permutation,
    SignedPermutation,
    enumerate_closure,
    eval_word,
    format_element,
)
from tvbraid.words import parse_word


def test_composition_order_is_left_to_right():
    a = Permutation.transposition(3, 1, 2)
    b = Permutation.transposition(3, 2, 3)
    assert (a * b).images == (3, 1, 2)
    assert (b * a).images == (2, 3, 1)
    # point action follows the same reading
    assert (a * b)(1) == 3


def test_permutation_inverse():
    rng = random.Random(7)
    for _ in range(200):
        images = list(range(1, 8))
        rng.shuffle(images)
        p = Permutation(tuple(images))
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()


def test_flip_vectors_are_involutions():
    v = FlipVector((1, 0, 1))
    assert (v * v).is_identity()
    assert v.inverse() == v
    assert FlipVector.unit(3, 2).bits == (0, 1, 0)


def test_signed_product_rule():
    # a bar after a crossing lands on the strand the crossing moved
    t = SignedPermutation(Permutation.transposition(2, 1, 2), FlipVector.identity(2))
    g1 = SignedPermutation(Permutation.identity(2), FlipVector.unit(2, 1))
    g2 = SignedPermutation(Permutation.identity(2), FlipVector.unit(2, 2))
    assert t * g1 == g2 * t
    assert (t * g1).flips.bits == (0, 1)


def test_format_element():
    assert format_element(Permutation((2, 1, 3))) == "[2,1,3]"
    assert format_element(FlipVector((0, 1, 0))) == "[0,1,0]"
    signed = SignedPermutation(Permutation((2, 1, 3)), FlipVector((0, 1, 0)))
    assert format_element(signed) == "[2,1,3|0,1,0]"


def test_eval_word_is_a_homomorphism():
    h = make_hom("phiPT", 4)
    rng = random.Random(11)
    kinds = list(h.images)
    for _ in range(300):
        u = [rng.choice(kinds) for _ in range(rng.randint(0, 8))]
        v = [rng.choice(kinds) for _ in range(rng.randint(0, 8))]
        from tvbraid.words import Word

        wu, wv = Word(4, u), Word(4, v)
        assert eval_word(Word(4, u + v), h.images, h.identity) == eval_word(
            wu, h.images, h.identity
        ) * eval_word(wv, h.images, h.identity)


def test_eval_word_respects_signs():
    h = make_hom("phiP", 3)
    w = parse_word("s1 s1^-1", 3)
    assert eval_word(w, h.images, h.identity).is_identity()


def test_closure_of_transpositions_is_full_symmetric():
    for n in range(2, 7):
        gens = [Permutation.transposition(n, i, i + 1) for i in range(1, n)]
        assert len(enumerate_closure(gens)) == factorial(n)


def test_closure_limit():
    gens = [Permutation.transposition(5, i, i + 1) for i in range(1, 5)]
    with pytest.raises(ValueError):
        enumerate_closure(gens, limit=100)


def test_sign_forgetting_fibres():
    # the signed model projects onto permutations with 2^n flips over each
    for n in (2, 3):
        h = make_hom("phiPT", n)
        elements = enumerate_closure(list(h.images.values()))
        by_perm = {}
        for el in elements:
            by_perm.setdefault(el.perm, set()).add(el.flips)
        assert len(by_perm) == factorial(n)
        assert all(len(f) == 2 ** n for f in by_perm.values())
