"""Burau, Wada and two-variable matrix representations of braid words.

``braid_matrix`` multiplies generator matrices in word order.  The Burau and
Wada matrices can also be obtained by abelianizing Fox Jacobians of the
corresponding automorphisms (``jacobian_matrix_oracle``); both routes agree.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from .braid import BraidWord, artin_automorphism, wada_automorphism
from .freegroup import abelianize_matrix, burau_abelianization, jacobian, wada_abelianization
from .matrixring import RingMatrix
from .ring import BiLaurentPoly, LaurentPoly

__all__ = [
    "RepresentationKind",
    "generator_cell",
    "generator_matrix",
    "braid_matrix",
    "jacobian_matrix_oracle",
    "specialize_s1",
]


class RepresentationKind(enum.Enum):
    BURAU = "burau"
    WADA = "wada"
    TWOVAR = "twovar"

    @property
    def ring(self) -> type:
        return BiLaurentPoly if self is RepresentationKind.TWOVAR else LaurentPoly

    @classmethod
    def coerce(cls, value) -> RepresentationKind:
        return value if isinstance(value, cls) else cls(str(value).lower())


def _cells():
    t, one = LaurentPoly.t(), LaurentPoly.one()
    ti = LaurentPoly.t(-1)
    s2, t2 = BiLaurentPoly.s(), BiLaurentPoly.t()
    si, tii = BiLaurentPoly.s(-1), BiLaurentPoly.t(-1)

    def wada(x):
        # x is t for odd i and t^-1 for even i
        return {
            1: ((one + x, x * x), (LaurentPoly.const(-1), one - x)),
            -1: ((one - x, -(x * x)), (one, one + x)),
        }

    return {
        RepresentationKind.BURAU: {
            1: ((one - t, t), (one, LaurentPoly.zero())),
            -1: ((LaurentPoly.zero(), one), (ti, one - ti)),
        },
        (RepresentationKind.WADA, 1): wada(t),
        (RepresentationKind.WADA, 0): wada(ti),
        RepresentationKind.TWOVAR: {
            1: ((1 - s2 * t2, t2), (s2, BiLaurentPoly.zero())),
            # exact inverse; the cell has unit determinant -st
            -1: ((BiLaurentPoly.zero(), si), (tii, 1 - si * tii)),
        },
    }


_CELLS = _cells()


def generator_cell(kind, i: int, sign: int) -> tuple[tuple, tuple]:
    """The 2x2 block of ``sigma_i^sign`` sitting at rows/columns ``i, i+1``."""
    kind = RepresentationKind.coerce(kind)
    if kind is RepresentationKind.WADA:
        return _CELLS[(kind, i % 2)][sign]
    return _CELLS[kind][sign]


@lru_cache(maxsize=None)
def generator_matrix(kind, i: int, sign: int, n: int) -> RingMatrix:
    kind = RepresentationKind.coerce(kind)
    if not 1 <= i <= n - 1:
        raise IndexError(f"sigma_{i} is not a generator of B_{n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    ring = kind.ring
    rows = [list(r) for r in RingMatrix.identity(n, ring).rows]
    cell = generator_cell(kind, i, sign)
    for a in range(2):
        for b in range(2):
            rows[i - 1 + a][i - 1 + b] = cell[a][b]
    return RingMatrix(rows, ring)


def _apply_generator(rows: list[list], kind, a: int, n: int) -> None:
    # right-multiplication by a generator only mixes columns i and i+1
    i = abs(a)
    (p, q), (r, s) = generator_cell(kind, i, 1 if a > 0 else -1)
    c0, c1 = i - 1, i
    for row in rows:
        x, y = row[c0], row[c1]
        row[c0] = x * p + y * r
        row[c1] = x * q + y * s


def braid_matrix(kind, beta: BraidWord) -> RingMatrix:
    """Product of the generator matrices along the word; ``I`` for the empty word."""
    kind = RepresentationKind.coerce(kind)
    n = beta.strands
    rows = [list(r) for r in RingMatrix.identity(n, kind.ring).rows]
    for a in beta.letters:
        _apply_generator(rows, kind, a, n)
    return RingMatrix(rows, kind.ring)


def jacobian_matrix_oracle(kind, beta: BraidWord) -> RingMatrix:
    """Abelianized Fox Jacobian of the Artin (Burau) or Wada automorphism of ``beta``."""
    kind = RepresentationKind.coerce(kind)
    if kind is RepresentationKind.BURAU:
        phi, alpha = artin_automorphism(beta), burau_abelianization
    elif kind is RepresentationKind.WADA:
        phi, alpha = wada_automorphism(beta), wada_abelianization
    else:
        raise ValueError("the two-variable representation does not come from an automorphism")
    return RingMatrix(abelianize_matrix(jacobian(phi), alpha), LaurentPoly)


def specialize_s1(m: RingMatrix) -> RingMatrix:
    return RingMatrix([[x.specialize_s(1) for x in r] for r in m.rows], LaurentPoly)
