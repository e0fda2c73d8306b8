"""Exact-arithmetic toolkit for the Spin(16) hyperdeterminant on the y-Cartan."""

from .polynomial import LinearForm, Polynomial, format_rational, parse_rational
from .roots import generate_e8_roots, verify_factor_set
from .hyperdet import FactoredForm, build_hdet, eval_hdet, restrict_to_4qubit, restrict_to_wedge4
from .invariants import power_sum, verify_power_sum
from .cayley import Tensor222, hdet222_combinatorial, hdet222_explicit
from .fock import FockState, SpinGenerator, cartan_state, spin_action

__all__ = [
    "FactoredForm",
    "FockState",
    "LinearForm",
    "Polynomial",
    "SpinGenerator",
    "Tensor222",
    "build_hdet",
    "cartan_state",
    "eval_hdet",
    "format_rational",
    "generate_e8_roots",
    "hdet222_combinatorial",
    "hdet222_explicit",
    "parse_rational",
    "power_sum",
    "restrict_to_4qubit",
    "restrict_to_wedge4",
    "spin_action",
    "verify_factor_set",
    "verify_power_sum",
]
