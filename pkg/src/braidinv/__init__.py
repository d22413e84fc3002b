"""Alexander-type invariants of braid closures from Burau, Wada and two-variable representations."""

from .braid import BraidWord, parse
from .invariants import (
    alexander_polynomial,
    check_alst_observation,
    check_wada_conjecture,
    invariant_chain,
    twovar_invariant,
    wada_polynomial,
)
from .matrixring import IdealChain, RingMatrix, determinant, ideal_chain, minors
from .representations import RepresentationKind, braid_matrix, jacobian_matrix_oracle
from .ring import BiLaurentPoly, LaurentPoly, gcd, normalize, unit_equal

__all__ = [
    "BraidWord",
    "parse",
    "alexander_polynomial",
    "check_alst_observation",
    "check_wada_conjecture",
    "invariant_chain",
    "twovar_invariant",
    "wada_polynomial",
    "IdealChain",
    "RingMatrix",
    "determinant",
    "ideal_chain",
    "minors",
    "RepresentationKind",
    "braid_matrix",
    "jacobian_matrix_oracle",
    "BiLaurentPoly",
    "LaurentPoly",
    "gcd",
    "normalize",
    "unit_equal",
]
