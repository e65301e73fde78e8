"""Noncommutative operator algebra over the coefficient ring.

Operators are stored in normal order: position factors to the left of
momentum factors within each canonical pair, different pairs commuting
freely.  Products are re-normalized with the closed-form swap identity

    P^s X^r = sum_k k! C(s,k) C(r,k) (-i hbar)^k X^(r-k) P^(s-k),

which matches iterated single swaps exactly.  A separate differential
action on position polynomials (momentum realized as -i*hbar times the
coordinate derivative) provides an independent route to the same algebra
for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, perm

from quantlab.coeffring import (
    CoeffMono,
    Coefficient,
    Scalar,
    render_terms,
    render_terms_latex,
)
from quantlab.phasepoly import PhaseMono, PhasePoly

# (-i)^k for k mod 4
_NEG_I_POW = (
    Scalar(Fraction(1)),
    Scalar(Fraction(0), Fraction(-1)),
    Scalar(Fraction(-1)),
    Scalar(Fraction(0), Fraction(1)),
)


@lru_cache(maxsize=None)
def neg_i_hbar_power(k: int) -> Coefficient:
    """(-i*hbar)^k as a Coefficient."""
    return Coefficient.term(CoeffMono(h_exp=k), _NEG_I_POW[k % 4])


@lru_cache(maxsize=None)
def _swap_weights(s: int, r: int) -> tuple[int, ...]:
    """Integer weights k! C(s,k) C(r,k) of the P^s X^r normal-ordering identity."""
    return tuple(factorial(k) * comb(s, k) * comb(r, k) for k in range(min(r, s) + 1))


@dataclass(frozen=True)
class OpMono:
    """Normal-ordered word X^a Y^b Px^c Py^d (hatted operators)."""

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("exponents must be nonnegative")

    def degree(self) -> int:
        return self.a + self.b + self.c + self.d

    def momentum_degree(self) -> int:
        return self.c + self.d

    def position_degree(self) -> int:
        return self.a + self.b

    def exponents(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def sort_key(self):
        return (self.degree(), self.a, self.b, self.c, self.d)

    def factors(self) -> list[str]:
        out = []
        for name, exp in zip(("x", "y", "px", "py"), self.exponents()):
            if exp == 1:
                out.append(name)
            elif exp > 1:
                out.append(f"{name}^{exp}")
        return out

    def latex_factors(self) -> list[str]:
        out = []
        for name, exp in zip(
            (r"\hat{x}", r"\hat{y}", r"\hat{p}_x", r"\hat{p}_y"), self.exponents()
        ):
            if exp == 1:
                out.append(name)
            elif exp > 1:
                out.append("%s^{%d}" % (name, exp))
        return out

    def derivative_factor(self) -> str | None:
        """Rendered d^n/dx^c dy^d factor when the word is read as derivatives."""
        order = self.c + self.d
        if order == 0:
            return None
        dens = []
        if self.c:
            dens.append("dx" if self.c == 1 else f"dx^{self.c}")
        if self.d:
            dens.append("dy" if self.d == 1 else f"dy^{self.d}")
        head = "d" if order == 1 else f"d^{order}"
        return f"{head}/{' '.join(dens)}"


class Operator:
    """Sparse normal-ordered operator with Coefficient coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[OpMono, Coefficient] | None = None):
        clean: dict[OpMono, Coefficient] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Coefficient.of(coeff)
                if coeff:
                    clean[mono] = coeff
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Operator":
        return cls()

    @classmethod
    def one(cls) -> "Operator":
        return cls.constant(1)

    @classmethod
    def constant(cls, value) -> "Operator":
        return cls({OpMono(): Coefficient.of(value)})

    @classmethod
    def monomial(cls, mono: OpMono, coeff=1) -> "Operator":
        return cls({mono: Coefficient.of(coeff)})

    # -- queries ------------------------------------------------------------

    @property
    def terms(self) -> dict[OpMono, Coefficient]:
        """Underlying term map; treat as read-only."""
        return self._terms

    def sorted_terms(self) -> list[tuple[OpMono, Coefficient]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key(), reverse=True)

    def coefficient(self, mono: OpMono) -> Coefficient:
        return self._terms.get(mono, Coefficient.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def momentum_order(self) -> int:
        return max((m.momentum_degree() for m in self._terms), default=0)

    def position_order(self) -> int:
        return max((m.position_degree() for m in self._terms), default=0)

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other) -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            prev = acc.get(mono)
            total = coeff if prev is None else prev + coeff
            if total:
                acc[mono] = total
            else:
                acc.pop(mono, None)
        return Operator(acc)

    def __sub__(self, other) -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Operator":
        return Operator({m: -c for m, c in self._terms.items()})

    def __mul__(self, other) -> "Operator":
        if isinstance(other, Operator):
            return op_mul(self, other)
        if isinstance(other, (Coefficient, CoeffMono, Scalar, int, Fraction)):
            return self._scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "Operator":
        # scalars commute with every operator
        if isinstance(other, (Coefficient, CoeffMono, Scalar, int, Fraction)):
            return self._scale(other)
        return NotImplemented

    def _scale(self, value) -> "Operator":
        coeff = Coefficient.of(value)
        return Operator({m: c * coeff for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "Operator":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Operator.one()
        for _ in range(exponent):
            out = op_mul(out, self)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Operator):
            return NotImplemented
        return self._terms == other._terms

    # -- rendering ----------------------------------------------------------------

    def text(self) -> str:
        return render_terms(self.sorted_terms(), OpMono.factors)

    def latex(self) -> str:
        return render_terms_latex(self.sorted_terms(), OpMono.latex_factors)

    def __repr__(self) -> str:
        return f"Operator({self.text()})"

    def __str__(self) -> str:
        return self.text()


def x_hat() -> Operator:
    return Operator.monomial(OpMono(a=1))


def y_hat() -> Operator:
    return Operator.monomial(OpMono(b=1))


def px_hat() -> Operator:
    return Operator.monomial(OpMono(c=1))


def py_hat() -> Operator:
    return Operator.monomial(OpMono(d=1))


def op_mul(left: Operator, right: Operator) -> Operator:
    """Exact noncommutative product, re-expressed in normal order.

    Only same-index pairs produce correction terms; the x and y families
    commute with each other.
    """
    acc: dict[OpMono, Coefficient] = {}
    for m1, c1 in left.terms.items():
        for m2, c2 in right.terms.items():
            base = c1 * c2
            x_weights = _swap_weights(m1.c, m2.a)
            y_weights = _swap_weights(m1.d, m2.b)
            for k1, w1 in enumerate(x_weights):
                for k2, w2 in enumerate(y_weights):
                    mono = OpMono(
                        m1.a + m2.a - k1,
                        m1.b + m2.b - k2,
                        m1.c + m2.c - k1,
                        m1.d + m2.d - k2,
                    )
                    coeff = base * (w1 * w2) * neg_i_hbar_power(k1 + k2)
                    prev = acc.get(mono)
                    total = coeff if prev is None else prev + coeff
                    if total:
                        acc[mono] = total
                    else:
                        acc.pop(mono, None)
    return Operator(acc)


def commutator(left: Operator, right: Operator) -> Operator:
    """[left, right] = left*right - right*left in canonical form."""
    return op_mul(left, right) - op_mul(right, left)


def classical_symbol(op: Operator) -> PhasePoly:
    """hbar -> 0 limit with momenta read as classical variables."""
    acc: dict[PhaseMono, Coefficient] = {}
    for mono, coeff in op.terms.items():
        part = coeff.hbar_free_part()
        if part:
            acc[PhaseMono(mono.a, mono.b, mono.c, mono.d)] = part
    return PhasePoly(acc)


def apply_to_polynomial(op: Operator, poly: PhasePoly) -> PhasePoly:
    """Act on a position polynomial as a differential operator.

    Momenta are realized as -i*hbar times the coordinate derivative and
    hbar stays symbolic.  Rejects polynomials containing px or py.
    """
    if not poly.is_position_only():
        raise ValueError("operators act on position polynomials (no px or py)")
    acc: dict[PhaseMono, Coefficient] = {}
    for omono, ocoeff in op.terms.items():
        scale = ocoeff * neg_i_hbar_power(omono.c + omono.d)
        for pmono, pcoeff in poly.terms.items():
            if omono.c > pmono.a or omono.d > pmono.b:
                continue
            mult = perm(pmono.a, omono.c) * perm(pmono.b, omono.d)
            coeff = scale * pcoeff * mult
            mono = PhaseMono(
                omono.a + pmono.a - omono.c, omono.b + pmono.b - omono.d, 0, 0
            )
            prev = acc.get(mono)
            total = coeff if prev is None else prev + coeff
            if total:
                acc[mono] = total
            else:
                acc.pop(mono, None)
    return PhasePoly(acc)


def adjoint(op: Operator) -> Operator:
    """Formal adjoint: reverse each word and conjugate its coefficient."""
    out = Operator.zero()
    for mono, coeff in op.terms.items():
        reversed_word = op_mul(
            Operator.monomial(OpMono(c=mono.c, d=mono.d)),
            Operator.monomial(OpMono(a=mono.a, b=mono.b)),
        )
        out = out + reversed_word * coeff.conjugate()
    return out


def min_hbar_exponent(op: Operator) -> int:
    """Smallest hbar exponent over all terms; 0 for the zero operator."""
    exps = [m.h_exp for coeff in op.terms.values() for m in coeff.terms]
    return min(exps) if exps else 0


def min_omega_exponent(op: Operator) -> int:
    """Smallest omega exponent over all terms; 0 for the zero operator."""
    exps = [m.w_exp for coeff in op.terms.values() for m in coeff.terms]
    return min(exps) if exps else 0


def differential_terms(op: Operator) -> dict[OpMono, Coefficient]:
    """Coefficients of the operator written as x^a y^b d^c/dx^c d^d/dy^d.

    The returned monomials reuse OpMono with (c, d) read as derivative
    orders; each coefficient absorbs the (-i*hbar)^(c+d) factor of the
    momentum realization.
    """
    return {
        mono: coeff * neg_i_hbar_power(mono.momentum_degree())
        for mono, coeff in op.terms.items()
    }


def _differential_factors(mono: OpMono) -> list[str]:
    out = []
    for name, exp in zip(("x", "y"), (mono.a, mono.b)):
        if exp == 1:
            out.append(name)
        elif exp > 1:
            out.append(f"{name}^{exp}")
    deriv = mono.derivative_factor()
    if deriv:
        out.append(deriv)
    return out


def _differential_latex_factors(mono: OpMono) -> list[str]:
    out = []
    for name, exp in zip(("x", "y"), (mono.a, mono.b)):
        if exp == 1:
            out.append(name)
        elif exp > 1:
            out.append("%s^{%d}" % (name, exp))
    order = mono.c + mono.d
    if order:
        dens = []
        if mono.c:
            dens.append(r"\partial x" if mono.c == 1 else r"\partial x^{%d}" % mono.c)
        if mono.d:
            dens.append(r"\partial y" if mono.d == 1 else r"\partial y^{%d}" % mono.d)
        head = r"\partial" if order == 1 else r"\partial^{%d}" % order
        out.append(r"\frac{%s}{%s}" % (head, r" \, ".join(dens)))
    return out


def _sorted_differential_terms(op: Operator) -> list[tuple[OpMono, Coefficient]]:
    return sorted(
        differential_terms(op).items(), key=lambda kv: kv[0].sort_key(), reverse=True
    )


def differential_text(op: Operator) -> str:
    """Plain-text rendering in derivative form."""
    return render_terms(_sorted_differential_terms(op), _differential_factors)


def differential_latex(op: Operator) -> str:
    return render_terms_latex(_sorted_differential_terms(op), _differential_latex_factors)
