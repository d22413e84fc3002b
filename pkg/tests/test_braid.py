import random

import pytest

from braidinv.braid import (
    BraidSyntaxError,
    BraidWord,
    Move,
    NotDestabilizable,
    StrandBoundError,
    StrandMismatch,
    artin_automorphism,
    braid_equal,
    conjugate,
    destabilize,
    parse,
    random_markov_orbit,
    replay,
    search_markov_path,
    stabilize,
    wada_automorphism,
)
from braidinv.freegroup import FreeWord, abelianize_matrix, compose, jacobian, wada_abelianization
from braidinv.ring import LaurentPoly
from helpers import linking_number, random_braid


def test_parse_examples():
    assert parse("1^3") == BraidWord(2, (1, 1, 1))
    assert parse("1 -2 1 -2") == BraidWord(3, (1, -2, 1, -2))
    assert parse("", 1) == BraidWord(1)
    assert parse("") == BraidWord(1)
    assert parse("1^3 2^-3") == BraidWord(3, (1, 1, 1, -2, -2, -2))
    assert parse("-1^2") == BraidWord(2, (-1, -1))
    assert parse("1", 4).strands == 4


@pytest.mark.parametrize("text, position", [("1 x", 2), ("1 0", 2), ("2^ 1", 0), ("1^3 -", 4)])
def test_parse_errors_report_position(text, position):
    with pytest.raises(BraidSyntaxError) as info:
        parse(text)
    assert info.value.position == position


def test_parse_strand_bound():
    with pytest.raises(StrandBoundError):
        parse("1 3", 3)


def test_text_round_trip():
    rng = random.Random(0)
    for _ in range(50):
        b = random_braid(rng, 5, 10)
        assert parse(str(b), b.strands) == b


def test_conjugate():
    b = parse("1^3")
    assert conjugate(b, BraidWord(2)) == b
    c = conjugate(b, parse("1"))
    assert c.letters == (-1, 1, 1, 1, 1) and braid_equal(c, b)
    assert conjugate(parse("1", 3), parse("2")).letters == (-2, 1, 2)
    with pytest.raises(StrandMismatch):
        conjugate(parse("1"), parse("2"))


def test_stabilize_destabilize():
    assert stabilize(BraidWord(1), 1) == parse("1")
    assert stabilize(parse("1^3"), 1) == parse("1^3 2")
    assert stabilize(parse("1^3"), -1) == parse("1^3 -2")
    assert destabilize(parse("1^3 2")) == parse("1^3")
    assert destabilize(parse("2", 3)) == BraidWord(2)
    with pytest.raises(NotDestabilizable):
        destabilize(parse("1 2 1"))
    with pytest.raises(NotDestabilizable):
        destabilize(parse("2 1 2"))
    rng = random.Random(1)
    for _ in range(30):
        b = random_braid(rng, 4, 6, min_strands=1)
        for sign in (1, -1):
            assert destabilize(stabilize(b, sign)) == b


def test_artin_automorphism_examples():
    phi = artin_automorphism(parse("1"))
    assert phi.images == (FreeWord((1, 2, -1)), FreeWord((1,)))
    assert artin_automorphism(BraidWord(3)).is_identity()
    assert artin_automorphism(parse("1 -1")).is_identity()


def test_wada_automorphism_examples():
    phi = wada_automorphism(parse("1"))
    assert phi.images == (FreeWord((1, 1, 2)), FreeWord((-2, -1, 2)))
    assert compose(phi, wada_automorphism(parse("-1"))).is_identity()
    assert compose(wada_automorphism(parse("-1")), phi).is_identity()
    assert wada_automorphism(BraidWord(2)).is_identity()


def test_wada_inverse_cell():
    t = LaurentPoly.t()
    cell = abelianize_matrix(jacobian(wada_automorphism(parse("-1"))), wada_abelianization)
    assert cell == ((1 - t, -(t * t)), (LaurentPoly.one(), 1 + t))


def test_braid_equal():
    assert braid_equal(parse("1 2 1"), parse("2 1 2"))
    assert not braid_equal(parse("1"), parse("-1"))
    assert not braid_equal(parse("1", 3), conjugate(parse("1", 3), parse("2", 3)))
    assert braid_equal(parse("1 3", 4), parse("3 1", 4))
    with pytest.raises(StrandMismatch):
        braid_equal(parse("1"), parse("2"))


def _insert_relation(rng, b):
    n = b.strands
    i = rng.randint(1, n - 2)
    pos = rng.randint(0, len(b))
    lhs, rhs = (i, i + 1, i), (i + 1, i, i + 1)
    if rng.random() < 0.5:
        lhs, rhs = tuple(-a for a in lhs), tuple(-a for a in rhs)
    return (
        BraidWord(n, b.letters[:pos] + lhs + b.letters[pos:]),
        BraidWord(n, b.letters[:pos] + rhs + b.letters[pos:]),
    )


def test_braid_relations_are_invisible():
    rng = random.Random(4)
    for _ in range(40):
        b = random_braid(rng, 5, 6, min_strands=3)
        x, y = _insert_relation(rng, b)
        assert braid_equal(x, y)
        if b.strands >= 4:
            i = rng.randint(1, b.strands - 3)
            j = rng.randint(i + 2, b.strands - 1)
            assert braid_equal(b * BraidWord(b.strands, (i, j)), b * BraidWord(b.strands, (j, i)))


def test_automorphism_is_homomorphism():
    rng = random.Random(8)
    for _ in range(30):
        b1 = random_braid(rng, 4, 5)
        b2 = random_braid(rng, b1.strands, 5, min_strands=b1.strands)
        assert artin_automorphism(b1 * b2) == compose(artin_automorphism(b1), artin_automorphism(b2))
        assert wada_automorphism(b1 * b2) == compose(wada_automorphism(b1), wada_automorphism(b2))


def test_moves_text():
    for m in (Move("conjugate", -2), Move("stabilize", 1), Move("stabilize", -1), Move("destabilize")):
        assert Move.parse(str(m)) == m


def test_search_trivial_cases():
    b = parse("1^3")
    assert search_markov_path(b, b, 3, 6, 3) == []
    path = search_markov_path(parse("1"), BraidWord(1), 2, 4, 3)
    assert path == [Move("destabilize")]
    path = search_markov_path(parse("1"), parse("-1"), 3, 6, 4)
    assert path is not None
    assert braid_equal(replay(parse("1"), path), parse("-1"))


def test_search_limit():
    from braidinv.braid import SearchLimitExceeded

    with pytest.raises(SearchLimitExceeded):
        search_markov_path(parse("1^-2"), parse("1^2"), 4, 10, 10, max_nodes=50)


def test_random_orbit_is_deterministic_and_replayable():
    b = parse("1 -2 1 -2")
    o1 = random_markov_orbit(b, 6, random.Random(3), 5)
    o2 = random_markov_orbit(b, 6, random.Random(3), 5)
    assert o1 == o2
    assert replay(b, [m for m, _ in o1]) == o1[-1][1]
    assert random_markov_orbit(b, 0, random.Random(0)) == []


def test_linking_number_is_a_markov_invariant():
    # the obstruction to paths between sigma_1^-2 and sigma_1^2
    rng = random.Random(21)
    for _ in range(40):
        b = random_braid(rng, 4, 6)
        total = sum(linking_number(b).values())
        for _, node in random_markov_orbit(b, 4, rng, 5):
            assert sum(linking_number(node).values()) == total
    assert sum(linking_number(parse("1^2")).values()) == 1
    assert sum(linking_number(parse("1^-2")).values()) == -1
