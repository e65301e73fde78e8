"""Polynomial quantization maps.

Two monomial ordering rules are implemented for each canonical pair:

    Born-Jordan:  x^r p^s -> 1/(s+1)   sum_k          P^(s-k) X^r P^k
    Weyl:         x^r p^s -> 1/2^s     sum_k C(s, k)  P^(s-k) X^r P^k

Mixed monomials factor across the two commuting pairs, so each factor is
quantized independently and the results multiplied.  Output is always
normal ordered, which makes operator equality a structural check.

The module also provides the direct ladder-operator quantization: the
classical ladder products with momenta replaced by momentum operators.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from quantlab.coeffring import CoeffMono, Coefficient, Scalar
from quantlab.generators import OscillatorParams
from quantlab.phasepoly import PhaseMono, PhasePoly
from quantlab.weylalgebra import (
    OpMono,
    Operator,
    neg_i_hbar_power,
    px_hat,
    py_hat,
    x_hat,
    y_hat,
)


class Scheme(Enum):
    BORN_JORDAN = "bj"
    WEYL = "weyl"


@lru_cache(maxsize=None)
def _pair_rule(scheme: Scheme, r: int, s: int) -> tuple[Fraction, ...]:
    """Normal-ordered image of one canonical pair.

    x^r p^s maps to sum_j rule[j] * (-i hbar)^j * X^(r-j) P^(s-j), where
    rule[j] collapses the ordering sum through the swap identity.
    """
    out = []
    for j in range(min(r, s) + 1):
        if scheme is Scheme.BORN_JORDAN:
            weight_sum = Fraction(sum(comb(s - k, j) for k in range(s + 1)), s + 1)
        else:
            weight_sum = Fraction(
                sum(comb(s, k) * comb(s - k, j) for k in range(s + 1)), 2 ** s
            )
        out.append(factorial(j) * comb(r, j) * weight_sum)
    return tuple(out)


@lru_cache(maxsize=None)
def quantize_monomial(scheme: Scheme, mono: PhaseMono) -> Operator:
    """Quantize a single classical monomial under the given scheme."""
    x_part = Operator(
        {
            OpMono(a=mono.a - j, c=mono.c - j): neg_i_hbar_power(j) * w
            for j, w in enumerate(_pair_rule(scheme, mono.a, mono.c))
        }
    )
    y_part = Operator(
        {
            OpMono(b=mono.b - j, d=mono.d - j): neg_i_hbar_power(j) * w
            for j, w in enumerate(_pair_rule(scheme, mono.b, mono.d))
        }
    )
    return x_part * y_part


def quantize(scheme: Scheme, poly: PhasePoly) -> Operator:
    """Coefficient-linear extension of the monomial rule."""
    out = Operator.zero()
    for mono, coeff in poly.sorted_terms():
        out = out + quantize_monomial(scheme, mono) * coeff
    return out


def quantize_ladder(params: OscillatorParams, which: int) -> Operator:
    """Quantize a ladder integral by direct momentum substitution.

    Builds B1 = Px - i*omega1*X (and friends) as operators and returns
    (B1^n B2*^m + B1*^n B2^m)/2 for which = 1 or
    -(i/2)(B1^n B2*^m - B1*^n B2^m) for which = 2, unnormalized to match
    the classical ladder integrals.  Each summand is a product of powers
    of two fixed commuting factors, so no ordering ambiguity arises.
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    omega1 = Coefficient.term(CoeffMono(w_exp=1, r_exp=1), Scalar(Fraction(1)))
    omega2 = omega1 * Fraction(params.n, params.m)
    i_unit = Coefficient.i()
    b1 = px_hat() - x_hat() * (i_unit * omega1)
    b1_conj = px_hat() + x_hat() * (i_unit * omega1)
    b2 = py_hat() - y_hat() * (i_unit * omega2)
    b2_conj = py_hat() + y_hat() * (i_unit * omega2)
    forward = b1 ** params.n * b2_conj ** params.m
    backward = b1_conj ** params.n * b2 ** params.m
    if which == 1:
        return (forward + backward) * Fraction(1, 2)
    return (forward - backward) * Scalar(Fraction(0), Fraction(-1, 2))
