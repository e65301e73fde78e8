"""Quantization rules: frozen operator images, scheme comparisons, and a
naive word-sum oracle built on single-swap rewriting."""

from fractions import Fraction
from math import comb
from random import Random

import pytest

from quantlab.coeffring import Coefficient, Scalar
from quantlab.generators import (
    OscillatorParams,
    d_poly,
    hamiltonian,
    k_integral,
    l_integral,
    ladder_integrals,
    p_poly,
)
from quantlab.phasepoly import PhaseMono, PhasePoly, PhaseVar
from quantlab.quantizer import Scheme, quantize, quantize_ladder, quantize_monomial
from quantlab.weylalgebra import (
    OpMono,
    Operator,
    adjoint,
    apply_to_polynomial,
    classical_symbol,
    commutator,
    differential_terms,
    op_mul,
    px_hat,
    x_hat,
)

from randgen import rand_phase_poly
from test_weylalgebra import normal_order_word

W = Scheme.WEYL
BJ = Scheme.BORN_JORDAN

I_HBAR = Coefficient.i() * Coefficient.hbar()
H2 = Coefficient.hbar(2)


def one_pair_oracle(scheme, r, s, x_index=True):
    """Quantize x^r p^s on one index by summing the rule's words directly,
    normal ordering each with the naive swap rewriter."""
    acc: dict = {}
    for k in range(s + 1):
        weight = Fraction(1, s + 1) if scheme is BJ else Fraction(comb(s, k), 2 ** s)
        word = ("p",) * (s - k) + ("x",) * r + ("p",) * k
        for (xr, ps), coeff in normal_order_word(word).items():
            key = (xr, ps)
            acc[key] = acc.get(key, Coefficient.zero()) + coeff * weight
    terms = {}
    for (xr, ps), coeff in acc.items():
        mono = OpMono(a=xr, c=ps) if x_index else OpMono(b=xr, d=ps)
        if not coeff.is_zero():
            terms[mono] = coeff
    return Operator(terms)


def test_monomial_rule_matches_word_sums():
    for r in range(5):
        for s in range(5):
            for scheme in (W, BJ):
                assert quantize_monomial(scheme, PhaseMono(a=r, c=s)) == one_pair_oracle(
                    scheme, r, s, x_index=True
                )
                assert quantize_monomial(scheme, PhaseMono(b=r, d=s)) == one_pair_oracle(
                    scheme, r, s, x_index=False
                )


def test_mixed_monomial_factorizes():
    for scheme in (W, BJ):
        mixed = quantize_monomial(scheme, PhaseMono(a=2, b=1, c=2, d=3))
        assert mixed == op_mul(
            one_pair_oracle(scheme, 2, 2, x_index=True),
            one_pair_oracle(scheme, 1, 3, x_index=False),
        )


def test_xp_coincides_across_schemes():
    expected = Operator.monomial(OpMono(a=1, c=1)) - Operator.constant(
        I_HBAR * Fraction(1, 2)
    )
    assert quantize_monomial(W, PhaseMono(a=1, c=1)) == expected
    assert quantize_monomial(BJ, PhaseMono(a=1, c=1)) == expected


def test_y2py2_under_both_schemes():
    weyl = quantize_monomial(W, PhaseMono(b=2, d=2))
    bj = quantize_monomial(BJ, PhaseMono(b=2, d=2))
    base = Operator.monomial(OpMono(b=2, d=2)) - Operator.monomial(OpMono(b=1, d=1)) * (
        I_HBAR * 2
    )
    assert weyl == base - Operator.constant(H2 * Fraction(1, 2))
    assert bj == base - Operator.constant(H2 * Fraction(2, 3))


def test_schemes_agree_on_low_powers():
    for a in range(4):
        for b in range(4):
            for c in range(4):
                for d in range(4):
                    if min(a, c) <= 1 and min(b, d) <= 1:
                        mono = PhaseMono(a, b, c, d)
                        assert quantize_monomial(W, mono) == quantize_monomial(BJ, mono)


def test_schemes_differ_for_x2px2():
    mono = PhaseMono(a=2, c=2)
    diff = quantize_monomial(BJ, mono) - quantize_monomial(W, mono)
    assert diff == Operator.constant(H2 * Fraction(-1, 6))


def test_quantize_linear():
    rng = Random(424242)
    for _ in range(1_000):
        f = rand_phase_poly(rng, max_terms=3, max_exp=2)
        g = rand_phase_poly(rng, max_terms=3, max_exp=2)
        alpha = Coefficient.hbar() * rng.randint(-3, 3) + Coefficient.of(
            Scalar(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)))
        )
        beta = Coefficient.omega() * rng.randint(-3, 3)
        scheme = W if rng.random() < 0.5 else BJ
        assert quantize(scheme, f * alpha + g * beta) == quantize(scheme, f) * alpha + (
            quantize(scheme, g) * beta
        )


def test_symbol_round_trip():
    # symbol extraction drops every hbar-carrying term, so the round trip
    # is an identity on hbar-free classical inputs
    rng = Random(5050)
    for _ in range(1_000):
        f = rand_phase_poly(rng, max_terms=4, max_exp=3, hbar_free=True)
        assert classical_symbol(quantize(W, f)) == f
        assert classical_symbol(quantize(BJ, f)) == f


def test_hermiticity_surrogate():
    rng = Random(6174)
    for _ in range(1_000):
        f = rand_phase_poly(rng, max_terms=4, max_exp=2, real_only=True)
        for scheme in (W, BJ):
            op = quantize(scheme, f)
            assert adjoint(op) == op


def test_hamiltonian_quantization_scheme_independent():
    for m, n in ((1, 1), (4, 1), (2, 3)):
        params = OscillatorParams(m, n)
        h = hamiltonian(params)
        assert quantize(W, h) == quantize(BJ, h)
    l = l_integral()
    assert quantize(W, l) == quantize(BJ, l)


def test_k11_quantization():
    k11 = k_integral(OscillatorParams(1, 1))
    expected = Operator.monomial(OpMono(a=1, d=1)) - Operator.monomial(OpMono(b=1, c=1))
    assert quantize(W, k11) == expected
    assert quantize(BJ, k11) == expected


def test_k41_scheme_difference():
    k41 = k_integral(OscillatorParams(4, 1))
    diff = quantize(BJ, k41) - quantize(W, k41)
    assert diff == x_hat() * (H2 * Coefficient.omega(2) * 32)


def test_commutator_helper_formula():
    # with K = P*x + D*px and P, D depending only on (y, py), the
    # commutator with H reduces to
    #   [H, K] = px(-i*hbar*P + [H, D]) + x(2*i*hbar*omega^2*D + [H, P])
    params = OscillatorParams(4, 1)
    h_op = quantize(W, hamiltonian(params))
    for scheme in (W, BJ):
        p_op = quantize(scheme, p_poly(params))
        d_op = quantize(scheme, d_poly(params))
        k_op = quantize(scheme, k_integral(params))
        assert k_op == p_op * x_hat() + d_op * px_hat()
        helper = px_hat() * (p_op * (-I_HBAR) + commutator(h_op, d_op)) + x_hat() * (
            d_op * (I_HBAR * Coefficient.omega(2) * 2) + commutator(h_op, p_op)
        )
        assert commutator(h_op, k_op) == helper


def test_bj_commutator_action_on_x():
    # the nonzero commutator acts on x as multiplication by -32 hbar^4 omega^2
    params = OscillatorParams(4, 1)
    h_op = quantize(W, hamiltonian(params))
    comm = commutator(h_op, quantize(BJ, k_integral(params)))
    result = apply_to_polynomial(comm, PhasePoly.variable(PhaseVar.X))
    assert result == PhasePoly.constant(
        Coefficient.hbar(4) * Coefficient.omega(2) * -32
    )


def test_quantize_ladder_validation():
    with pytest.raises(ValueError):
        quantize_ladder(OscillatorParams(1, 1), 3)


def test_ladder_operator_commutes_isotropic():
    params = OscillatorParams(1, 1)
    h_op = quantize(W, hamiltonian(params))
    assert commutator(h_op, quantize_ladder(params, 1)).is_zero()
    assert commutator(h_op, quantize_ladder(params, 2)).is_zero()


def test_ladder_symbol_is_classical_integral():
    for m, n in ((1, 1), (2, 1), (3, 2)):
        params = OscillatorParams(m, n)
        f1, f2 = ladder_integrals(params)
        assert classical_symbol(quantize_ladder(params, 1)) == f1
        assert classical_symbol(quantize_ladder(params, 2)) == f2


def test_ladder_equals_weyl_for_isotropic_f2():
    params = OscillatorParams(1, 1)
    _, f2 = ladder_integrals(params)
    assert quantize_ladder(params, 2) == quantize(W, f2)


def test_proof_intermediates_differential_form():
    h3 = Coefficient.hbar(3)
    hbar = Coefficient.hbar()
    i = Coefficient.i()
    # quantized y^2 py^2: -(hbar^2/2)(2 y^2 d^2 + 4 y d + 1) for Weyl,
    # -(hbar^2/3)(3 y^2 d^2 + 6 y d + 2) for Born-Jordan
    q1_weyl = differential_terms(quantize_monomial(W, PhaseMono(b=2, d=2)))
    assert q1_weyl == {
        OpMono(b=2, d=2): -H2,
        OpMono(b=1, d=1): H2 * -2,
        OpMono(): H2 * Fraction(-1, 2),
    }
    q1_bj = differential_terms(quantize_monomial(BJ, PhaseMono(b=2, d=2)))
    assert q1_bj == {
        OpMono(b=2, d=2): -H2,
        OpMono(b=1, d=1): H2 * -2,
        OpMono(): H2 * Fraction(-2, 3),
    }
    # quantized y py^3: i(hbar^3/2)(2 y d^3 + 3 d^2), both schemes
    q2_expected = {
        OpMono(b=1, d=3): i * h3,
        OpMono(d=2): i * h3 * Fraction(3, 2),
    }
    assert differential_terms(quantize_monomial(W, PhaseMono(b=1, d=3))) == q2_expected
    assert differential_terms(quantize_monomial(BJ, PhaseMono(b=1, d=3))) == q2_expected
    # quantized y^3 py: -i(hbar/2) y^2 (2 y d + 3), both schemes
    q3_expected = {
        OpMono(b=3, d=1): -(i * hbar),
        OpMono(b=2): i * hbar * Fraction(-3, 2),
    }
    assert differential_terms(quantize_monomial(W, PhaseMono(b=3, d=1))) == q3_expected
    assert differential_terms(quantize_monomial(BJ, PhaseMono(b=3, d=1))) == q3_expected
