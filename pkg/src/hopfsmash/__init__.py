"""Exact computations with finite-dimensional Hopf algebras, twisted exponents,
Frobenius-Schur indicators and smash coproducts."""

from .exact_math import QQ, ExactMatrix, ExactVector, FieldScalar, FieldSpec, format_scalar, parse_scalar
from .hopf_core import Element, FiniteHopfAlgebra, convolve, dual, verify_hopf_axioms
from .indicators import (
    graded_indicator_check,
    module_indicator,
    regular_twisted_indicator,
    smash_indicator_check,
    twisted_module_indicator,
)
from .integrals import dual_integral, integral_pair, is_semisimple, left_integral, normalized_integral, right_integral
from .powers import (
    ExponentResult,
    HopfAutomorphism,
    coprime_power_experiment,
    exponent,
    hopf_power,
    twisted_exponent,
    twisted_power,
    verify_automorphism,
)
from .representations import Representation, extend_to_smash, regular_rep, verify_representation
from .smash import GroupTable, HopfAction, SmashCoproduct, smash_coproduct, smash_product, verify_action

__version__ = "0.1.0"

__all__ = [
    "QQ", "ExactMatrix", "ExactVector", "FieldScalar", "FieldSpec", "format_scalar", "parse_scalar",
    "Element", "FiniteHopfAlgebra", "convolve", "dual", "verify_hopf_axioms",
    "graded_indicator_check", "module_indicator", "regular_twisted_indicator", "smash_indicator_check",
    "twisted_module_indicator",
    "dual_integral", "integral_pair", "is_semisimple", "left_integral", "normalized_integral", "right_integral",
    "ExponentResult", "HopfAutomorphism", "coprime_power_experiment", "exponent", "hopf_power",
    "twisted_exponent", "twisted_power", "verify_automorphism",
    "Representation", "extend_to_smash", "regular_rep", "verify_representation",
    "GroupTable", "HopfAction", "SmashCoproduct", "smash_coproduct", "smash_product", "verify_action",
]
