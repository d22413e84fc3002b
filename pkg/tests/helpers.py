"""Random generators and independent oracles shared by the tests."""

from __future__ import annotations

import itertools
import random

import sympy

from braidinv.braid import BraidWord
from braidinv.freegroup import FreeWord
from braidinv.ring import BiLaurentPoly, LaurentPoly

T, S = sympy.symbols("t s")


def random_braid(rng: random.Random, max_strands: int = 4, max_length: int = 8, min_strands: int = 2) -> BraidWord:
    n = rng.randint(min_strands, max_strands)
    if n == 1:
        return BraidWord(1)
    length = rng.randint(0, max_length)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_word(rng: random.Random, rank: int, max_length: int) -> FreeWord:
    length = rng.randint(0, max_length)
    return FreeWord(rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(length))


def random_laurent(rng: random.Random, terms: int = 3, spread: int = 3, coeff: int = 4) -> LaurentPoly:
    return LaurentPoly(
        {rng.randint(-spread, spread): rng.randint(-coeff, coeff) for _ in range(rng.randint(0, terms))}
    )


def to_sympy(p: LaurentPoly):
    return sum((c * T**k for k, c in p.items()), sympy.Integer(0))


def bi_to_sympy(p: BiLaurentPoly):
    return sum((c * S**i * T**j for (i, j), c in p.items()), sympy.Integer(0))


def from_sympy(expr) -> LaurentPoly:
    poly = sympy.Poly(sympy.expand(expr), T)
    return LaurentPoly({m[0]: int(c) for m, c in poly.terms()})


def bi_from_sympy(expr) -> BiLaurentPoly:
    poly = sympy.Poly(sympy.expand(expr), S, T)
    return BiLaurentPoly({(m[0], m[1]): int(c) for m, c in poly.terms()})


def leibniz_det(rows):
    """Determinant by the permutation expansion."""
    n = len(rows)
    total = rows[0][0] * 0 if n else 1
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        total = total + (-term if inversions % 2 else term)
    return total


def linking_number(beta: BraidWord) -> dict[frozenset, int]:
    """Pairwise linking numbers of the closure's components, keyed by the component pair."""
    n = beta.strands
    at = list(range(n))  # at[p] = start label of the strand now at position p
    signs: list[tuple[int, int, int]] = []
    for a in beta.letters:
        i = abs(a) - 1
        signs.append((at[i], at[i + 1], 1 if a > 0 else -1))
        at[i], at[i + 1] = at[i + 1], at[i]
    end_to_start = {p: at[p] for p in range(n)}
    comp: dict[int, int] = {}
    for start in range(n):
        if start in comp:
            continue
        p = start
        while p not in comp:
            comp[p] = start
            p = end_to_start[p]
    total: dict[frozenset, int] = {}
    for u, v, sgn in signs:
        cu, cv = comp[u], comp[v]
        if cu != cv:
            key = frozenset((cu, cv))
            total[key] = total.get(key, 0) + sgn
    return {k: v // 2 for k, v in total.items()}
