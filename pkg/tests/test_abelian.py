import random

import pytest

from tvbraid.abelian import (
    AbelianInvariants,
    AbelianizedGroup,
    abelian_invariants,
    invariants_text,
    minor_gcd_invariants,
    relation_matrix,
    same_invariants,
    smith_normal_form,
)
from tvbraid.present import build_presentation
from tvbraid.words import parse_word


def test_frozen_smith_form():
    s = smith_normal_form([[2, 0], [0, 3]])
    assert s.diagonal == [1, 6]
    assert s.rank == 2


def test_smith_form_edge_cases():
    assert smith_normal_form([]).diagonal == []
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == []
    assert smith_normal_form([[4]]).diagonal == [4]
    assert smith_normal_form([[-4]]).diagonal == [4]
    s = smith_normal_form([[2, 4], [4, 8]])
    assert s.diagonal == [2]


def test_divisibility_chain():
    rng = random.Random(5)
    for _ in range(500):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        M = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        d = smith_normal_form(M).diagonal
        assert all(x > 0 for x in d)
        for a, b in zip(d, d[1:]):
            assert b % a == 0, (M, d)


def test_against_minor_gcd_oracle():
    rng = random.Random(12)
    for _ in range(1000):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        M = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        assert smith_normal_form(M).diagonal == minor_gcd_invariants(M), M


def test_permutation_invariance():
    rng = random.Random(19)
    for _ in range(200):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        M = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        d = smith_normal_form(M).diagonal
        P = list(M)
        rng.shuffle(P)
        order = list(range(cols))
        rng.shuffle(order)
        P = [[row[k] for k in order] for row in P]
        assert smith_normal_form(P).diagonal == d


FROZEN_INVARIANTS = {
    ("tvpn", 2): "Z^1 + Z_2^2",
    ("tvpn", 3): "Z^3 + Z_2^3",
    ("tvpn", 4): "Z^6 + Z_2^4",
    ("tvpn", 5): "Z^10 + Z_2^5",
    ("tvhn", 2): "Z^1 + Z_2^2",
    ("tvhn", 3): "Z^1 + Z_2^3",
    ("tvhn", 4): "Z^1 + Z_2^4",
    ("tvhn", 5): "Z^1 + Z_2^5",
    ("tvbn", 2): "Z^1 + Z_2^2",
    ("tvbn", 3): "Z^1 + Z_2^2",
    ("vpn", 3): "Z^6",
    ("vpn", 4): "Z^12",
    ("an", 3): "Z_2^3",
    ("bn", 3): "Z^1",
}


def test_family_invariants():
    for (family, n), expect in FROZEN_INVARIANTS.items():
        inv = abelian_invariants(build_presentation(family, n))
        assert invariants_text(inv) == expect, (family, n)


def test_same_invariants_separates_families():
    for n in range(2, 6):
        a = abelian_invariants(build_presentation("tvpn", n))
        b = abelian_invariants(build_presentation("tvhn", n))
        assert same_invariants(a, b) == (n == 2)


def test_invariants_text():
    assert invariants_text(AbelianInvariants(0, ())) == "0"
    assert invariants_text(AbelianInvariants(2, ())) == "Z^2"
    assert invariants_text(AbelianInvariants(0, (2, 2, 4))) == "Z_2^2 + Z_4^1"
    assert invariants_text(AbelianInvariants(1, (6,))) == "Z^1 + Z_6^1"


def test_relation_matrix_shape():
    pres = build_presentation("tvpn", 2)
    M = relation_matrix(pres)
    assert len(M) == len(pres.relators)
    assert all(len(row) == len(pres.generators) for row in M)
    with pytest.raises(ValueError):
        relation_matrix(
            build_presentation("tvpn", 2).__class__(
                "tvpn",
                2,
                build_presentation("tvpn", 2).generators,
                build_presentation("an", 3).relators,
            )
        )


def test_abelianized_coordinates():
    g = AbelianizedGroup(build_presentation("tvpn", 3))
    # inserting a relator does not move the class
    w = parse_word("l1,2 g1", 3)
    noisy = parse_word("l1,2 g1 g2 g2", 3)
    assert g.equal(w, noisy)
    assert not g.equal(w, parse_word("l1,2 g2", 3))
    # bars have order two in the quotient
    assert g.coordinates(parse_word("g1 g1", 3)) == g.coordinates(parse_word("", 3))
    assert g.coordinates(parse_word("l1,2", 3)) != g.coordinates(parse_word("", 3))
