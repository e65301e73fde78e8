"""Exact symbolic comparison of Born-Jordan and Weyl operator ordering for
the superintegrable 2D anisotropic harmonic oscillator.

The package builds the oscillator's classical first integrals over an
exact coefficient ring, quantizes them under both monomial ordering
rules, and decides commutation with the quantized Hamiltonian by exact
normal-ordered algebra, cross-checked against an independent
differential-operator action.
"""

from quantlab.coeffring import CoeffMono, Coefficient, Scalar
from quantlab.phasepoly import (
    PhaseMono,
    PhasePoly,
    PhaseVar,
    hamiltonian_flow_apply,
    poisson,
    substitute_uy,
)
from quantlab.generators import (
    OscillatorParams,
    d_poly,
    g_poly,
    hamiltonian,
    k_integral,
    l_integral,
    ladder_integrals,
    p_poly,
)
from quantlab.weylalgebra import (
    OpMono,
    Operator,
    adjoint,
    apply_to_polynomial,
    classical_symbol,
    commutator,
    differential_terms,
    differential_text,
    min_hbar_exponent,
    min_omega_exponent,
    op_mul,
    px_hat,
    py_hat,
    x_hat,
    y_hat,
)
from quantlab.quantizer import Scheme, quantize, quantize_ladder, quantize_monomial
from quantlab.vlab import (
    ParseError,
    UnknownSymbolError,
    VerificationRecord,
    parse,
    parse_polynomial,
    sweep,
    verify_ladder_pair,
    verify_pair,
)

__version__ = "0.1.0"
