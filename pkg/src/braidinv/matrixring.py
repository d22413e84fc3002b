"""Square matrices over ``Z[t^±1]`` or ``Z[s^±1, t^±1]``: determinants, minors,
elementary ideals.

Minors are computed by Laplace expansion along the first row, memoized on the
``(rows, columns)`` pair, so enumerating every minor of every size shares all
the intermediate determinants.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .ring import (
    BiLaurentPoly,
    LaurentPoly,
    divides,
    gcd_bivariate_many,
    gcd_many,
    normalize,
)

__all__ = [
    "RingMatrix",
    "IdealChain",
    "SizeMismatch",
    "SizeOutOfRange",
    "determinant",
    "minors",
    "ideal_chain",
    "ideal_generators_bivariate",
]

Element = Union[LaurentPoly, BiLaurentPoly]


class SizeMismatch(ValueError):
    pass


class SizeOutOfRange(ValueError):
    pass


class RingMatrix:
    """An immutable square matrix with Laurent-polynomial entries."""

    __slots__ = ("rows", "ring", "_minor_cache")

    def __init__(self, rows: Iterable[Iterable], ring: type | None = None):
        raw = [list(r) for r in rows]
        n = len(raw)
        if any(len(r) != n for r in raw):
            raise SizeMismatch("matrix must be square")
        if ring is None:
            ring = LaurentPoly
            for r in raw:
                for x in r:
                    if isinstance(x, BiLaurentPoly):
                        ring = BiLaurentPoly
        self.ring = ring
        self.rows: tuple[tuple[Element, ...], ...] = tuple(
            tuple(ring.coerce(x) for x in r) for r in raw
        )
        self._minor_cache: dict | None = None

    @classmethod
    def identity(cls, n: int, ring: type = LaurentPoly) -> RingMatrix:
        one, zero = ring.one(), ring.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], ring)

    @classmethod
    def zeros(cls, n: int, ring: type = LaurentPoly) -> RingMatrix:
        return cls([[ring.zero()] * n for _ in range(n)], ring)

    @classmethod
    def parse(cls, rows: Sequence[Sequence[str]], ring: type = LaurentPoly) -> RingMatrix:
        return cls([[ring.parse(x) for x in r] for r in rows], ring)

    @classmethod
    def from_json(cls, text: str, ring: type = LaurentPoly) -> RingMatrix:
        return cls.parse(json.loads(text), ring)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Element:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, RingMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __add__(self, other: RingMatrix) -> RingMatrix:
        self._check_size(other)
        return RingMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ring
        )

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        self._check_size(other)
        return RingMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ring
        )

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        self._check_size(other)
        n = self.n
        cols = list(zip(*other.rows))
        zero = self.ring.zero()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(out, self.ring) if n else self

    def scale(self, c: Element) -> RingMatrix:
        return RingMatrix([[c * x for x in r] for r in self.rows], self.ring)

    def map(self, f) -> RingMatrix:
        return RingMatrix([[f(x) for x in r] for r in self.rows])

    def transpose(self) -> RingMatrix:
        return RingMatrix(list(zip(*self.rows)), self.ring)

    def sub_identity(self) -> RingMatrix:
        return self - RingMatrix.identity(self.n, self.ring)

    def augment(self) -> RingMatrix:
        """Append a bottom row and a right column ``(0 ... 0 1)``."""
        zero, one = self.ring.zero(), self.ring.one()
        rows = [list(r) + [zero] for r in self.rows]
        rows.append([zero] * self.n + [one])
        return RingMatrix(rows, self.ring)

    def _check_size(self, other: RingMatrix) -> None:
        if self.n != other.n:
            raise SizeMismatch(f"sizes {self.n} and {other.n} differ")

    # text forms

    def to_lists(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_lists())

    def __str__(self) -> str:
        body = ",\n ".join("[" + ", ".join(r) + "]" for r in self.to_lists())
        return f"[{body}]"

    def __repr__(self) -> str:
        return f"RingMatrix({self.to_lists()!r})"

    # minors

    def _minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> Element:
        if self._minor_cache is None:
            self._minor_cache = {}
        cache = self._minor_cache
        key = (rows, cols)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if len(rows) == 1:
            value = self.rows[rows[0]][cols[0]]
        else:
            r0, rest = rows[0], rows[1:]
            value = self.ring.zero()
            for k, c in enumerate(cols):
                entry = self.rows[r0][c]
                if not entry:
                    continue
                sub = self._minor(rest, cols[:k] + cols[k + 1 :])
                if sub:
                    value = value + entry * sub if k % 2 == 0 else value - entry * sub
        cache[key] = value
        return value


def determinant(m: RingMatrix) -> Element:
    if m.n == 0:
        return m.ring.one()
    full = tuple(range(m.n))
    return m._minor(full, full)


def minors(m: RingMatrix, k: int) -> list[Element]:
    """All ``k x k`` minors, row subsets outer and column subsets inner, both lexicographic."""
    if not 1 <= k <= m.n:
        raise SizeOutOfRange(f"minor size {k} outside 1..{m.n}")
    subsets = list(itertools.combinations(range(m.n), k))
    return [m._minor(r, c) for r in subsets for c in subsets]


@dataclass(frozen=True)
class IdealChain:
    """Generators ``g_0, ..., g_n`` of the elementary ideals ``E_0 ⊆ ... ⊆ E_n``.

    ``E_k`` is the zero ideal for ``k < 0`` and the whole ring for ``k >= n``.
    """

    generators: tuple[LaurentPoly, ...]

    @property
    def n(self) -> int:
        return len(self.generators) - 1

    def ideal(self, k: int) -> LaurentPoly:
        if k < 0:
            return LaurentPoly.zero()
        if k >= self.n:
            return LaurentPoly.one()
        return self.generators[k]

    def first_nonzero(self) -> tuple[int, LaurentPoly]:
        for k, g in enumerate(self.generators):
            if g:
                return k, g
        raise AssertionError("E_n is the whole ring, so a chain always has a nonzero term")

    def same_ideals(self, other: IdealChain) -> bool:
        """Equality of every ``E_k``, regardless of matrix size."""
        top = max(self.n, other.n)
        return all(self.ideal(k) == other.ideal(k) for k in range(top + 1))

    def is_divisibility_chain(self) -> bool:
        gens = self.generators
        return all(
            divides(gens[k + 1], gens[k])
            for k in range(len(gens) - 1)
            if gens[k] and gens[k + 1]
        )

    def __str__(self) -> str:
        return "[" + ", ".join(str(g) for g in self.generators) + "]"


def ideal_chain(m: RingMatrix) -> IdealChain:
    """Normalized gcd generator of each elementary ideal of a univariate matrix."""
    if m.ring is not LaurentPoly:
        raise TypeError("ideal_chain needs a matrix over Z[t^±1]; use ideal_generators_bivariate")
    n = m.n
    gens = [normalize(gcd_many(minors(m, n - k))) for k in range(n)]
    gens.append(LaurentPoly.one())
    return IdealChain(tuple(gens))


def ideal_generators_bivariate(m: RingMatrix) -> tuple[BiLaurentPoly, list[BiLaurentPoly]]:
    """Nonzero minors of the largest size that has any, and their gcd.

    ``Z[s^±1, t^±1]`` is not a PID, so the gcd need not generate the ideal;
    the full minor list is returned for inspection.  A zero matrix gives
    ``(0, [])``.
    """
    for size in range(m.n, 0, -1):
        found = [x for x in minors(m, size) if x]
        if found:
            return gcd_bivariate_many(found), found
    return BiLaurentPoly.zero(), []


def bivariate_gcd_chain(m: RingMatrix) -> list[BiLaurentPoly]:
    """UFD gcd of the ``(n-k)``-minors for ``k = 0..n-1``, then ``1``."""
    n = m.n
    out = [gcd_bivariate_many(minors(m, n - k)) for k in range(n)]
    out.append(BiLaurentPoly.one())
    return out
