import random

import pytest

from braidinv.braid import BraidWord, parse, stabilize
from braidinv.matrixring import RingMatrix, determinant
from braidinv.representations import (
    RepresentationKind,
    braid_matrix,
    generator_matrix,
    jacobian_matrix_oracle,
    specialize_s1,
)
from braidinv.ring import BiLaurentPoly, LaurentPoly
from helpers import random_braid

P = LaurentPoly.parse
KINDS = list(RepresentationKind)


def test_generator_cells():
    assert generator_matrix("burau", 1, 1, 2) == RingMatrix.parse([["1 - t", "t"], ["1", "0"]])
    assert generator_matrix("burau", 1, -1, 2) == RingMatrix.parse([["0", "1"], ["t^-1", "1 - t^-1"]])
    assert generator_matrix("wada", 1, 1, 2) == RingMatrix.parse([["1 + t", "t^2"], ["-1", "1 - t"]])
    assert generator_matrix("wada", 1, -1, 2) == RingMatrix.parse([["1 - t", "-t^2"], ["1", "1 + t"]])
    assert generator_matrix("wada", 2, 1, 3) == RingMatrix.parse(
        [["1", "0", "0"], ["0", "1 + t^-1", "t^-2"], ["0", "-1", "1 - t^-1"]]
    )
    assert generator_matrix("twovar", 1, 1, 2) == RingMatrix.parse(
        [["1 - s*t", "t"], ["s", "0"]], BiLaurentPoly
    )
    with pytest.raises(IndexError):
        generator_matrix("burau", 3, 1, 3)


@pytest.mark.parametrize("kind", KINDS)
def test_generator_inverse_pairs(kind):
    for n in (2, 3, 4):
        for i in range(1, n):
            prod = generator_matrix(kind, i, 1, n) @ generator_matrix(kind, i, -1, n)
            assert prod == RingMatrix.identity(n, kind.ring)
            prod = generator_matrix(kind, i, -1, n) @ generator_matrix(kind, i, 1, n)
            assert prod == RingMatrix.identity(n, kind.ring)


def test_twovar_inverse_cell_by_adjugate():
    # inverse of [[a, b], [c, d]] is [[d, -b], [-c, a]] / (ad - bc), with ad - bc = -st a unit
    s, t = BiLaurentPoly.s(), BiLaurentPoly.t()
    a, b, c, d = 1 - s * t, t, s, BiLaurentPoly.zero()
    det_inv = (a * d - b * c).unit_inverse()
    expected = RingMatrix([[d * det_inv, -b * det_inv], [-c * det_inv, a * det_inv]])
    assert generator_matrix("twovar", 1, -1, 2) == expected


@pytest.mark.parametrize("kind", KINDS)
def test_braid_relations(kind):
    assert braid_matrix(kind, parse("1 2 1")) == braid_matrix(kind, parse("2 1 2"))
    assert braid_matrix(kind, parse("-1 -2 -1")) == braid_matrix(kind, parse("-2 -1 -2"))
    assert braid_matrix(kind, parse("1 3", 4)) == braid_matrix(kind, parse("3 1", 4))
    assert braid_matrix(kind, parse("2 3 2", 4)) == braid_matrix(kind, parse("3 2 3", 4))
    assert braid_matrix(kind, BraidWord(3)) == RingMatrix.identity(3, kind.ring)


@pytest.mark.parametrize("kind", KINDS)
def test_homomorphism(kind):
    rng = random.Random(9)
    for _ in range(20):
        b1 = random_braid(rng, 4, 5)
        b2 = random_braid(rng, b1.strands, 5, min_strands=b1.strands)
        assert braid_matrix(kind, b1 * b2) == braid_matrix(kind, b1) @ braid_matrix(kind, b2)


def test_printed_trefoil_matrices():
    right = braid_matrix("burau", parse("1^3")).sub_identity()
    assert right == RingMatrix.parse([["-t^3 + t^2 - t", "t^3 - t^2 + t"], ["t^2 - t + 1", "-t^2 + t - 1"]])
    left = braid_matrix("burau", parse("1^-3")).sub_identity()
    assert left == RingMatrix.parse(
        [["-t^-2 + t^-1 - 1", "t^-2 - t^-1 + 1"], ["t^-3 - t^-2 + t^-1", "-t^-3 + t^-2 - t^-1"]]
    )
    assert braid_matrix("wada", parse("1^3")).sub_identity() == RingMatrix.parse([["3t", "3t^2"], ["-3", "-3t"]])


def test_oracle_small_cases():
    for kind in ("burau", "wada"):
        assert jacobian_matrix_oracle(kind, parse("1")) == braid_matrix(kind, parse("1"))
        assert jacobian_matrix_oracle(kind, BraidWord(3)) == RingMatrix.identity(3)
    with pytest.raises(ValueError):
        jacobian_matrix_oracle("twovar", parse("1"))


def test_burau_row_sums():
    rng = random.Random(12)
    for _ in range(30):
        b = random_braid(rng, 5, 8)
        m = braid_matrix("burau", b)
        for row in m.rows:
            assert sum(row, LaurentPoly.zero()) == 1
        assert determinant(m.sub_identity()) == 0


def test_specialize_s1():
    assert specialize_s1(RingMatrix.identity(3, BiLaurentPoly)) == RingMatrix.identity(3)
    cell = RingMatrix.parse([["1 - s*t", "t"], ["s", "0"]], BiLaurentPoly)
    assert specialize_s1(cell) == RingMatrix.parse([["1 - t", "t"], ["1", "0"]])


def test_wada_stabilization_determinants_small():
    b = parse("1 -2 1 -2")
    base = determinant(braid_matrix("wada", b).sub_identity())
    t = LaurentPoly.t()
    # n = 3 is odd
    assert determinant(braid_matrix("wada", stabilize(b, 1)).sub_identity()) == -t * base
    assert determinant(braid_matrix("wada", stabilize(b, -1)).sub_identity()) == t * base
