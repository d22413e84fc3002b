"""Link invariants of braid closures read off the elementary ideals of ``J_beta - I``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .braid import BraidWord
from .matrixring import IdealChain, ideal_chain, ideal_generators_bivariate
from .representations import RepresentationKind, braid_matrix
from .ring import (
    BiLaurentPoly,
    LaurentPoly,
    evaluate,
    normalize,
    normalize_bivariate,
    unit_equal_bivariate,
)

__all__ = [
    "LeadingInvariant",
    "TwoVariableInvariant",
    "ConjectureReport",
    "invariant_chain",
    "leading_invariant",
    "wada_polynomial",
    "alexander_polynomial",
    "twovar_invariant",
    "check_wada_conjecture",
    "check_alst_observation",
]


@dataclass(frozen=True)
class LeadingInvariant:
    """Generator of the first nonzero elementary ideal.

    ``raw`` is the gcd as computed; ``value`` is its normalized form.
    ``index`` is ``k`` of the ideal ``E_k`` it generates.
    """

    value: LaurentPoly
    raw: LaurentPoly
    index: int
    chain: IdealChain


@dataclass(frozen=True)
class TwoVariableInvariant:
    gcd: BiLaurentPoly
    generators: tuple[BiLaurentPoly, ...]
    principal_hint: bool


@dataclass(frozen=True)
class ConjectureReport:
    alexander: LaurentPoly
    alexander_at_minus_1: Union[int, Fraction]
    wada: LaurentPoly
    # None when the Wada polynomial is not constant and needs a manual look
    consistent: bool | None


def invariant_chain(kind, beta: BraidWord) -> IdealChain:
    kind = RepresentationKind.coerce(kind)
    if kind is RepresentationKind.TWOVAR:
        raise ValueError("use twovar_invariant for the two-variable representation")
    return ideal_chain(braid_matrix(kind, beta).sub_identity())


def leading_invariant(kind, beta: BraidWord) -> LeadingInvariant:
    chain = invariant_chain(kind, beta)
    k, g = chain.first_nonzero()
    return LeadingInvariant(normalize(g), g, k, chain)


def wada_polynomial(beta: BraidWord) -> LaurentPoly:
    return leading_invariant(RepresentationKind.WADA, beta).value


def alexander_polynomial(beta: BraidWord) -> LaurentPoly:
    """Normalized, so e.g. the Hopf link gives ``t - 1``."""
    return leading_invariant(RepresentationKind.BURAU, beta).value


def twovar_invariant(beta: BraidWord) -> TwoVariableInvariant:
    """UFD gcd of the largest nonzero minors of ``M_beta - I``.

    ``principal_hint`` is a syntactic check: every generator is divisible by
    the gcd (always true) and the gcd itself occurs among the generators up
    to a unit.  When it holds, the ideal is principal; when it fails nothing
    is decided.
    """
    g, gens = ideal_generators_bivariate(braid_matrix(RepresentationKind.TWOVAR, beta).sub_identity())
    if not gens:
        one = BiLaurentPoly.one()
        return TwoVariableInvariant(one, (one,), True)
    hint = any(unit_equal_bivariate(x, g) for x in gens)
    return TwoVariableInvariant(normalize_bivariate(g), tuple(gens), hint)


def check_wada_conjecture(beta: BraidWord) -> ConjectureReport:
    """Compare ``|Alexander(-1)|`` with the Wada polynomial."""
    alex = alexander_polynomial(beta)
    wada = wada_polynomial(beta)
    value = evaluate(alex, -1)
    consistent = abs(value) == wada.constant_value() if wada.is_constant() else None
    return ConjectureReport(alex, value, wada, consistent)


def check_alst_observation(beta: BraidWord) -> bool:
    """Whether the two-variable invariant is the Alexander polynomial at ``t -> s*t``."""
    alex = BiLaurentPoly.from_univariate_in_st(alexander_polynomial(beta))
    return unit_equal_bivariate(twovar_invariant(beta).gcd, alex)
