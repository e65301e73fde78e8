"""Operator algebra: normal ordering, commutators, symbol extraction and
the differential action, cross-checked against a naive swap rewriter."""

from fractions import Fraction
from random import Random

import pytest

from quantlab.coeffring import CoeffMono, Coefficient, Scalar
from quantlab.phasepoly import PhaseMono, PhasePoly, PhaseVar, poisson
from quantlab.quantizer import Scheme, quantize
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

from randgen import rand_operator, rand_phase_poly

I_HBAR = Coefficient.i() * Coefficient.hbar()
MINUS_I_HBAR = -I_HBAR

XPOS = PhasePoly.variable(PhaseVar.X)
YPOS = PhasePoly.variable(PhaseVar.Y)


# --- naive single-swap normal ordering (independent route) ---------------

_swap_cache: dict[tuple, dict] = {}


def normal_order_word(word: tuple) -> dict:
    """Normal order a one-index word of 'x'/'p' letters by repeated single
    swaps p x -> x p + (-i hbar); returns {(r, s): Coefficient}."""
    if word in _swap_cache:
        return _swap_cache[word]
    for idx in range(len(word) - 1):
        if word[idx] == "p" and word[idx + 1] == "x":
            swapped = normal_order_word(word[:idx] + ("x", "p") + word[idx + 2 :])
            dropped = normal_order_word(word[:idx] + word[idx + 2 :])
            out: dict = {}
            for key, coeff in swapped.items():
                out[key] = out.get(key, Coefficient.zero()) + coeff
            for key, coeff in dropped.items():
                out[key] = out.get(key, Coefficient.zero()) + coeff * MINUS_I_HBAR
            out = {k: v for k, v in out.items() if not v.is_zero()}
            break
    else:
        out = {(word.count("x"), word.count("p")): Coefficient.one()}
    _swap_cache[word] = out
    return out


def test_closed_form_matches_iterated_swaps():
    # P^s X^r for r, s <= 6, on both index pairs
    for r in range(7):
        for s in range(7):
            naive = normal_order_word(("p",) * s + ("x",) * r)
            via_x = op_mul(px_hat() ** s, x_hat() ** r)
            expected_x = Operator({OpMono(a=k[0], c=k[1]): v for k, v in naive.items()})
            assert via_x == expected_x
            via_y = op_mul(py_hat() ** s, y_hat() ** r)
            expected_y = Operator({OpMono(b=k[0], d=k[1]): v for k, v in naive.items()})
            assert via_y == expected_y


# --- examples -------------------------------------------------------------


def test_mul_examples():
    assert px_hat() * x_hat() == x_hat() * px_hat() - Operator.constant(I_HBAR)
    expected = (
        x_hat() ** 2 * px_hat() ** 2
        - x_hat() * px_hat() * (I_HBAR * 4)
        - Operator.constant(Coefficient.hbar(2) * 2)
    )
    assert px_hat() ** 2 * x_hat() ** 2 == expected
    assert x_hat() * py_hat() == Operator.monomial(OpMono(a=1, d=1))


def test_commutator_examples():
    assert commutator(x_hat(), px_hat()) == Operator.constant(I_HBAR)
    assert commutator(x_hat(), py_hat()).is_zero()


def test_classical_symbol():
    op = (
        x_hat() ** 2 * px_hat() ** 2
        - x_hat() * px_hat() * (I_HBAR * 4)
        - Operator.constant(Coefficient.hbar(2) * 2)
    )
    assert classical_symbol(op) == PhasePoly.monomial(PhaseMono(a=2, c=2))
    assert classical_symbol(Operator.constant(I_HBAR)).is_zero()


def test_apply_one_derivative():
    result = apply_to_polynomial(px_hat(), XPOS ** 2)
    assert result == XPOS * (MINUS_I_HBAR * 2)


def test_apply_weyl_ordered_square():
    # quantized y^2 py^2 (Weyl) acting on y^2 gives -13/2 hbar^2 y^2
    op = quantize(Scheme.WEYL, PhasePoly.monomial(PhaseMono(b=2, d=2)))
    result = apply_to_polynomial(op, YPOS ** 2)
    assert result == YPOS ** 2 * (Coefficient.hbar(2) * Fraction(-13, 2))


def test_apply_rejects_momentum():
    with pytest.raises(ValueError):
        apply_to_polynomial(x_hat(), PhasePoly.variable(PhaseVar.PX))


def test_mul_properties_random():
    rng = Random(271828)
    for _ in range(1_000):
        a = rand_operator(rng)
        b = rand_operator(rng)
        c = rand_operator(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_commutator_properties_random():
    rng = Random(161803)
    for _ in range(400):
        a = rand_operator(rng, max_terms=2)
        b = rand_operator(rng, max_terms=2)
        c = rand_operator(rng, max_terms=2)
        assert commutator(a, a).is_zero()
        assert commutator(a, b) == -commutator(b, a)
        jacobi = (
            commutator(a, commutator(b, c))
            + commutator(b, commutator(c, a))
            + commutator(c, commutator(a, b))
        )
        assert jacobi.is_zero()


def test_adjoint_reverses_products():
    rng = Random(55)
    for _ in range(300):
        a = rand_operator(rng, max_terms=2)
        b = rand_operator(rng, max_terms=2)
        assert adjoint(a * b) == adjoint(b) * adjoint(a)
        assert adjoint(adjoint(a)) == a


def test_action_determines_operator():
    # an operator of momentum order s and position degree r is pinned by
    # its action on monomials x^i y^j with i + j <= s + r
    rng = Random(8128)
    for _ in range(150):
        a = rand_operator(rng, max_terms=3, max_exp=2)
        b = rand_operator(rng, max_terms=3, max_exp=2)
        if a == b:
            continue
        bound = max(a.momentum_order(), b.momentum_order()) + max(
            a.position_order(), b.position_order()
        )
        seen_difference = False
        for i in range(bound + 1):
            for j in range(bound + 1 - i):
                probe = PhasePoly.monomial(PhaseMono(a=i, b=j))
                if apply_to_polynomial(a, probe) != apply_to_polynomial(b, probe):
                    seen_difference = True
                    break
            if seen_difference:
                break
        assert seen_difference


def test_symbolic_commutator_matches_action_oracle():
    rng = Random(333)
    for _ in range(150):
        a = rand_operator(rng, max_terms=3, max_exp=2)
        b = rand_operator(rng, max_terms=3, max_exp=2)
        comm = commutator(a, b)
        bound = (
            a.momentum_order()
            + b.momentum_order()
            + a.position_order()
            + b.position_order()
        )
        for i in range(bound + 1):
            for j in range(bound + 1 - i):
                probe = PhasePoly.monomial(PhaseMono(a=i, b=j))
                direct = apply_to_polynomial(comm, probe)
                nested = apply_to_polynomial(a, apply_to_polynomial(b, probe)) - (
                    apply_to_polynomial(b, apply_to_polynomial(a, probe))
                )
                assert direct == nested


def test_correspondence_principle():
    # [W(f), W(g)] has only hbar-carrying terms, and its first-order part
    # divided by i*hbar has classical symbol {f, g}
    rng = Random(1729)
    for _ in range(100):
        f = rand_phase_poly(rng, max_terms=3, max_exp=2, hbar_free=True)
        g = rand_phase_poly(rng, max_terms=3, max_exp=2, hbar_free=True)
        comm = commutator(quantize(Scheme.WEYL, f), quantize(Scheme.WEYL, g))
        if comm.is_zero():
            assert poisson(f, g).is_zero()
            continue
        assert min_hbar_exponent(comm) >= 1
        first_order = {}
        for mono, coeff in comm.terms.items():
            # divide the hbar^1 slice by i*hbar: drop one hbar, multiply by -i
            sliced = Coefficient(
                {
                    CoeffMono(0, cm.w_exp, cm.r_exp): scalar * Scalar(Fraction(0), Fraction(-1))
                    for cm, scalar in coeff.terms.items()
                    if cm.h_exp == 1
                }
            )
            if sliced:
                first_order[mono] = sliced
        rebuilt = classical_symbol(Operator(first_order))
        assert rebuilt == poisson(f, g)


def test_min_exponent_helpers():
    assert min_hbar_exponent(Operator.zero()) == 0
    assert min_omega_exponent(Operator.zero()) == 0
    op = Operator.constant(Coefficient.hbar(3) * Coefficient.omega(2)) + x_hat() * (
        Coefficient.hbar(2) * Coefficient.omega(5)
    )
    assert min_hbar_exponent(op) == 2
    assert min_omega_exponent(op) == 2


def test_differential_form():
    op = px_hat() * (Coefficient.i() * Coefficient.hbar(3) * Coefficient.omega(2) * -32)
    terms = differential_terms(op)
    assert terms == {OpMono(c=1): Coefficient.hbar(4) * Coefficient.omega(2) * -32}
    assert differential_text(op) == "-32 * hbar^4 * omega^2 * d/dx"


def test_operator_text():
    op = x_hat() * px_hat() - Operator.constant(I_HBAR * Fraction(1, 2))
    assert op.text() == "x * px - 1/2 * i * hbar"
