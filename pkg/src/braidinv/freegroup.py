"""Free groups, their integral group rings, and Fox free differential calculus.

Generators of ``F_n`` are the indices ``1..n``; a letter ``-i`` stands for the
inverse of ``x_i``.  Words are stored freely reduced.

Jacobians are indexed with the *image* on the row and the derivative on the
column, ``J[j][i] = d_i(phi(x_j))``.  This is the layout of the generator cells
for the Artin and Wada automorphisms, and with it the chain rule reads

    jacobian(compose(phi, psi)) == apply_entrywise(psi, jacobian(phi)) @ jacobian(psi)

where ``compose(phi, psi)`` applies ``phi`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence, Union

from .ring import LaurentPoly

__all__ = [
    "FreeWord",
    "GroupRingElement",
    "Endomorphism",
    "IndexOutOfRank",
    "RankMismatch",
    "reduce",
    "fox_derivative",
    "jacobian",
    "apply_entrywise",
    "group_ring_matmul",
    "abelianize",
    "abelianize_matrix",
    "burau_abelianization",
    "wada_abelianization",
    "check_representation_condition",
    "alexander_matrix_of_endomorphism",
]


class IndexOutOfRank(IndexError):
    """A letter refers to a generator beyond the rank of the free group."""


class RankMismatch(ValueError):
    """Two endomorphisms of free groups of different ranks were combined."""


def reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a sequence of signed generator indices."""
    out: list[int] = []
    for a in letters:
        if a == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


class FreeWord:
    """A freely reduced word in the generators ``x_1, x_2, ...``."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        self.letters = reduce(letters)

    @classmethod
    def generator(cls, i: int) -> FreeWord:
        return cls((i,))

    @classmethod
    def parse(cls, text: str) -> FreeWord:
        """Parse ``x1 x2^-1 x1`` (``1`` is the empty word)."""
        letters: list[int] = []
        for tok in text.split():
            if tok == "1":
                continue
            if not tok.startswith("x"):
                raise ValueError(f"bad word token {tok!r}")
            base, _, exp = tok[1:].partition("^")
            i, e = int(base), int(exp) if exp else 1
            letters.extend([i if e > 0 else -i] * abs(e))
        return cls(letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(-a for a in reversed(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def max_index(self) -> int:
        return max((abs(a) for a in self.letters), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self.letters == other.letters

    def __lt__(self, other: FreeWord) -> bool:
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __hash__(self) -> int:
        return hash(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in self.letters)

    def __repr__(self) -> str:
        return f"FreeWord('{self}')"


EMPTY = FreeWord()


class GroupRingElement:
    """A finite integer combination of words, i.e. an element of ``Z F_n``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[FreeWord, int] | Iterable[tuple[FreeWord, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[FreeWord, int] = {}
        for w, c in items:
            acc[w] = acc.get(w, 0) + c
        self._terms = {w: c for w, c in acc.items() if c != 0}

    @classmethod
    def of(cls, value: Union[GroupRingElement, FreeWord, int]) -> GroupRingElement:
        if isinstance(value, GroupRingElement):
            return value
        if isinstance(value, FreeWord):
            return cls({value: 1})
        if isinstance(value, int):
            return cls({EMPTY: value})
        raise TypeError(f"cannot interpret {value!r} as a group ring element")

    @property
    def terms(self) -> dict[FreeWord, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other) -> GroupRingElement:
        other = GroupRingElement.of(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, 0) + c
        return GroupRingElement(acc)

    __radd__ = __add__

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> GroupRingElement:
        return self + (-GroupRingElement.of(other))

    def __rsub__(self, other) -> GroupRingElement:
        return GroupRingElement.of(other) - self

    def __mul__(self, other) -> GroupRingElement:
        other = GroupRingElement.of(other)
        acc: dict[FreeWord, int] = {}
        for u, a in self._terms.items():
            for v, b in other._terms.items():
                w = u * v
                acc[w] = acc.get(w, 0) + a * b
        return GroupRingElement(acc)

    def __rmul__(self, other) -> GroupRingElement:
        return GroupRingElement.of(other) * self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, FreeWord)):
            other = GroupRingElement.of(other)
        return isinstance(other, GroupRingElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in sorted(self._terms.items(), key=lambda wc: wc[0]):
            body = str(w)
            if abs(c) != 1:
                body = str(abs(c)) if w == EMPTY else f"{abs(c)}*{body}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return text + "".join(f" {s} {b}" for s, b in parts[1:])

    def __repr__(self) -> str:
        return f"GroupRingElement('{self}')"


@dataclass(frozen=True)
class Endomorphism:
    """An endomorphism of ``F_rank`` given by the images of the generators."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self):
        images = tuple(w if isinstance(w, FreeWord) else FreeWord(w) for w in self.images)
        object.__setattr__(self, "images", images)
        if len(images) != self.rank:
            raise ValueError(f"expected {self.rank} images, got {len(images)}")
        for w in images:
            if w.max_index() > self.rank:
                raise IndexOutOfRank(f"image {w} uses a generator beyond rank {self.rank}")

    @classmethod
    def identity(cls, rank: int) -> Endomorphism:
        return cls(rank, tuple(FreeWord.generator(i) for i in range(1, rank + 1)))

    def image(self, i: int) -> FreeWord:
        return self.images[i - 1]

    def apply(self, w: FreeWord) -> FreeWord:
        """Image of a word; this is a homomorphism of ``F_rank``."""
        out: list[int] = []
        for a in w.letters:
            if abs(a) > self.rank:
                raise IndexOutOfRank(f"x{abs(a)} is outside rank {self.rank}")
            img = self.images[abs(a) - 1].letters
            out.extend(img if a > 0 else [-b for b in reversed(img)])
        return FreeWord(out)

    __call__ = apply

    def apply_ring(self, e: GroupRingElement) -> GroupRingElement:
        acc: dict[FreeWord, int] = {}
        for w, c in e.items():
            img = self.apply(w)
            acc[img] = acc.get(img, 0) + c
        return GroupRingElement(acc)

    def then(self, other: Endomorphism) -> Endomorphism:
        """``x -> other(self(x))``: apply ``self`` first."""
        if self.rank != other.rank:
            raise RankMismatch(f"ranks {self.rank} and {other.rank} differ")
        return Endomorphism(self.rank, tuple(other.apply(w) for w in self.images))

    def is_identity(self) -> bool:
        return self == Endomorphism.identity(self.rank)

    def __str__(self) -> str:
        return ", ".join(f"x{i} -> {w}" for i, w in enumerate(self.images, 1))


def compose(phi: Endomorphism, psi: Endomorphism) -> Endomorphism:
    """The endomorphism ``x -> psi(phi(x))`` (``phi`` acts first)."""
    return phi.then(psi)


def fox_derivative(i: int, e: Union[GroupRingElement, FreeWord]) -> GroupRingElement:
    """Partial Fox derivative with respect to ``x_i``, extended linearly."""
    e = GroupRingElement.of(e)
    acc: dict[FreeWord, int] = {}
    for w, c in e.items():
        prefix: list[int] = []
        for a in w.letters:
            if a == i:
                p = FreeWord(prefix)
                acc[p] = acc.get(p, 0) + c
            prefix.append(a)
            if a == -i:
                p = FreeWord(prefix)
                acc[p] = acc.get(p, 0) - c
    return GroupRingElement(acc)


Matrix = tuple[tuple[GroupRingElement, ...], ...]


def jacobian(phi: Endomorphism) -> Matrix:
    """``J[j][i] = d_i(phi(x_j))`` (0-based in the returned tuples)."""
    n = phi.rank
    return tuple(
        tuple(fox_derivative(i, phi.images[j]) for i in range(1, n + 1)) for j in range(n)
    )


def apply_entrywise(psi: Endomorphism, m: Matrix) -> Matrix:
    return tuple(tuple(psi.apply_ring(e) for e in row) for row in m)


def group_ring_matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[r][x] * b[x][c] for x in range(k)), GroupRingElement()) for c in range(m))
        for r in range(n)
    )


Abelianization = Union[Callable[[int], LaurentPoly], Mapping[int, LaurentPoly], Sequence[LaurentPoly]]


def _alpha_lookup(alpha: Abelianization) -> Callable[[int], LaurentPoly]:
    if callable(alpha):
        return alpha
    if isinstance(alpha, Mapping):
        return alpha.__getitem__
    return lambda i: alpha[i - 1]


def burau_abelianization(i: int) -> LaurentPoly:
    """Every generator goes to ``t``."""
    return LaurentPoly.t()


def wada_abelianization(i: int) -> LaurentPoly:
    """Odd generators go to ``t``, even ones to ``t^-1``."""
    return LaurentPoly.t(1 if i % 2 else -1)


def abelianize(e: Union[GroupRingElement, FreeWord, int], alpha: Abelianization) -> LaurentPoly:
    """Ring homomorphism ``Z F_n -> Z[t^±1]`` extending a generator -> unit map."""
    look = _alpha_lookup(alpha)
    images: dict[int, int] = {}

    def exponent(i: int) -> int:
        if i not in images:
            u = look(i)
            if not (isinstance(u, LaurentPoly) and u.is_unit() and u.coefficient(u.degree) == 1):
                raise ValueError(f"abelianization must send x{i} to a power of t, got {u}")
            images[i] = u.degree
        return images[i]

    acc: dict[int, int] = {}
    for w, c in GroupRingElement.of(e).items():
        k = sum(exponent(abs(a)) * (1 if a > 0 else -1) for a in w.letters)
        acc[k] = acc.get(k, 0) + c
    return LaurentPoly(acc)


def abelianize_matrix(m: Matrix, alpha: Abelianization) -> tuple[tuple[LaurentPoly, ...], ...]:
    return tuple(tuple(abelianize(e, alpha) for e in row) for row in m)


def check_representation_condition(phi: Endomorphism, psi: Endomorphism, alpha: Abelianization) -> bool:
    """Whether applying ``psi`` to the entries of ``J_phi`` is invisible after abelianizing."""
    if phi.rank != psi.rank:
        raise RankMismatch(f"ranks {phi.rank} and {psi.rank} differ")
    j = jacobian(phi)
    return abelianize_matrix(apply_entrywise(psi, j), alpha) == abelianize_matrix(j, alpha)


def alexander_matrix_of_endomorphism(phi: Endomorphism, alpha: Abelianization = burau_abelianization):
    """Abelianized Alexander matrix of ``<x_i, y_i | x_i^-1 y_i>`` with ``y_i = phi(x_i)``.

    Row ``i`` holds the Fox derivatives of the relator ``x_i^-1 phi(x_i)``
    with respect to ``x_1..x_n``.  Returned as a :class:`RingMatrix`.
    """
    from .matrixring import RingMatrix

    n = phi.rank
    rows = []
    for j in range(1, n + 1):
        relator = FreeWord((-j,)) * phi.image(j)
        rows.append([abelianize(fox_derivative(i, relator), alpha) for i in range(1, n + 1)])
    return RingMatrix(rows)
