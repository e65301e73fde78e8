"""Constructors for the oscillator's classical observables.

The anisotropic oscillator with rational frequency ratio carries, besides
the Hamiltonian itself, the separation integral L, a polynomial integral
K built from L's flow, and a pair of ladder-product integrals.  All of
them are returned as exact phase-space polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from quantlab.coeffring import CoeffMono, Coefficient, Scalar
from quantlab.phasepoly import (
    PhaseMono,
    PhasePoly,
    PhaseVar,
    hamiltonian_flow_apply,
    substitute_uy,
)

_X = PhasePoly.variable(PhaseVar.X)
_Y = PhasePoly.variable(PhaseVar.Y)
_PX = PhasePoly.variable(PhaseVar.PX)
_PY = PhasePoly.variable(PhaseVar.PY)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class OscillatorParams:
    """Positive frequency-ratio parameters.

    The axis frequencies are omega1 = sqrt2*omega and
    omega2 = (n/m)*sqrt2*omega, so m*omega2 = n*omega1 identically.
    """

    m: int
    n: int

    def __post_init__(self):
        for name in ("m", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer")


def hamiltonian(params: OscillatorParams) -> PhasePoly:
    """H = (px^2 + py^2)/2 + omega^2 (x^2 + (n/m)^2 y^2)."""
    ratio_sq = Fraction(params.n, params.m) ** 2
    kinetic = (_PX ** 2 + _PY ** 2) * _HALF
    potential = _X ** 2 * Coefficient.omega(2) + _Y ** 2 * (Coefficient.omega(2) * ratio_sq)
    return kinetic + potential


def l_integral() -> PhasePoly:
    """Separation integral L = px^2/2 + omega^2 x^2 of the x axis."""
    return _PX ** 2 * _HALF + _X ** 2 * Coefficient.omega(2)


def g_poly(n: int) -> PhasePoly:
    """G_n = sum_k C(n, 2k+1) (-2 omega^2)^k x^(2k+1) px^(n-2k-1)."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError("n must be a positive integer")
    acc = PhasePoly.zero()
    for k in range((n - 1) // 2 + 1):
        coeff = Coefficient.term(
            CoeffMono(w_exp=2 * k), Scalar(Fraction(comb(n, 2 * k + 1) * (-2) ** k))
        )
        acc = acc + PhasePoly.monomial(PhaseMono(a=2 * k + 1, c=n - 2 * k - 1), coeff)
    return acc


def p_poly(params: OscillatorParams) -> PhasePoly:
    """P factor of the K integral, expanded in (u, pu) and converted to (y, py).

    P = sum_k C(m, 2k) (-(m/n) u)^(2k) pu^(m-2k) (-2 omega^2)^k.
    """
    m, n = params.m, params.n
    ratio = Fraction(m, n)
    acc = PhasePoly.zero()
    for k in range(m // 2 + 1):
        scalar = Scalar(comb(m, 2 * k) * ratio ** (2 * k) * (-2) ** k)
        coeff = Coefficient.term(CoeffMono(w_exp=2 * k), scalar)
        # y slot holds u, py slot holds pu until the substitution below
        acc = acc + PhasePoly.monomial(PhaseMono(b=2 * k, d=m - 2 * k), coeff)
    return substitute_uy(acc, m, n)


def d_poly(params: OscillatorParams) -> PhasePoly:
    """D factor of the K integral, expanded in (u, pu) and converted to (y, py).

    D = (1/n) sum_k C(m, 2k+1) (-(m/n) u)^(2k+1) pu^(m-2k-1) (-2 omega^2)^k.
    For m = 1 the sum collapses to its single term -(1/n^2) u.
    """
    m, n = params.m, params.n
    ratio = Fraction(m, n)
    acc = PhasePoly.zero()
    for k in range((m - 1) // 2 + 1):
        scalar = Scalar(
            Fraction(comb(m, 2 * k + 1), n) * (-(ratio ** (2 * k + 1))) * (-2) ** k
        )
        coeff = Coefficient.term(CoeffMono(w_exp=2 * k), scalar)
        acc = acc + PhasePoly.monomial(PhaseMono(b=2 * k + 1, d=m - 2 * k - 1), coeff)
    return substitute_uy(acc, m, n)


def k_integral(params: OscillatorParams) -> PhasePoly:
    """Polynomial first integral K = P * G_n + D * X_L(G_n) of degree m + n."""
    g = g_poly(params.n)
    return p_poly(params) * g + d_poly(params) * hamiltonian_flow_apply(l_integral(), g)


def ladder_integrals(params: OscillatorParams) -> tuple[PhasePoly, PhasePoly]:
    """Unnormalized ladder-product integrals (F1, F2).

    Built from b1 = px - i*omega1*x and b2 = py - i*omega2*y (and their
    conjugates) as F1 = (b1^n b2*^m + b1*^n b2^m)/2 and
    F2 = -(i/2)(b1^n b2*^m - b1*^n b2^m).  The 1/sqrt(2*omega_j)
    normalizations are dropped: they rescale by an overall constant and
    do not affect first-integral status.
    """
    omega1 = Coefficient.term(CoeffMono(w_exp=1, r_exp=1), Scalar(Fraction(1)))
    omega2 = omega1 * Fraction(params.n, params.m)
    i_unit = Coefficient.i()
    b1 = _PX - _X * (i_unit * omega1)
    b1_conj = _PX + _X * (i_unit * omega1)
    b2 = _PY - _Y * (i_unit * omega2)
    b2_conj = _PY + _Y * (i_unit * omega2)
    forward = b1 ** params.n * b2_conj ** params.m
    backward = b1_conj ** params.n * b2 ** params.m
    f1 = (forward + backward) * _HALF
    f2 = (forward - backward) * Scalar(Fraction(0), Fraction(-1, 2))
    return f1, f2
