"""Commutative phase-space polynomials in (x, y, px, py) over Coefficient.

Polynomials are sparse maps from exponent quadruples to coefficients,
stored canonically (no zero coefficients, graded-lex term order), so
equality is structural.  The module supplies partial derivatives, the
canonical Poisson bracket, and the linear substitution that eliminates
the auxiliary pair (u, pu) in favor of Cartesian (y, py).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from quantlab.coeffring import (
    CoeffMono,
    Coefficient,
    Scalar,
    render_terms,
    render_terms_latex,
)


class PhaseVar(Enum):
    X = "x"
    Y = "y"
    PX = "px"
    PY = "py"


# slot index of each variable in the exponent quadruple (a, b, c, d)
_VAR_SLOT = {PhaseVar.X: 0, PhaseVar.Y: 1, PhaseVar.PX: 2, PhaseVar.PY: 3}

# conjugate momentum slot for each position slot, used by the bracket
_CANONICAL_PAIRS = ((PhaseVar.X, PhaseVar.PX), (PhaseVar.Y, PhaseVar.PY))


@dataclass(frozen=True)
class PhaseMono:
    """Monomial x^a y^b px^c py^d."""

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("exponents must be nonnegative")

    def degree(self) -> int:
        return self.a + self.b + self.c + self.d

    def exponents(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def sort_key(self):
        return (self.degree(), self.a, self.b, self.c, self.d)

    def __mul__(self, other: "PhaseMono") -> "PhaseMono":
        return PhaseMono(self.a + other.a, self.b + other.b,
                         self.c + other.c, self.d + other.d)

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
        for name, exp in zip(("x", "y", "p_x", "p_y"), self.exponents()):
            if exp == 1:
                out.append(name)
            elif exp > 1:
                out.append("%s^{%d}" % (name, exp))
        return out


class PhasePoly:
    """Sparse commutative polynomial with Coefficient coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[PhaseMono, Coefficient] | None = None):
        clean: dict[PhaseMono, Coefficient] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Coefficient.of(coeff)
                if coeff:
                    clean[mono] = coeff
        self._terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "PhasePoly":
        return cls()

    @classmethod
    def one(cls) -> "PhasePoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value) -> "PhasePoly":
        return cls({PhaseMono(): Coefficient.of(value)})

    @classmethod
    def variable(cls, var: PhaseVar) -> "PhasePoly":
        exps = [0, 0, 0, 0]
        exps[_VAR_SLOT[var]] = 1
        return cls({PhaseMono(*exps): Coefficient.one()})

    @classmethod
    def monomial(cls, mono: PhaseMono, coeff=1) -> "PhasePoly":
        return cls({mono: Coefficient.of(coeff)})

    # -- queries ----------------------------------------------------------

    @property
    def terms(self) -> dict[PhaseMono, Coefficient]:
        """Underlying term map; treat as read-only."""
        return self._terms

    def sorted_terms(self) -> list[tuple[PhaseMono, Coefficient]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key(), reverse=True)

    def coefficient(self, mono: PhaseMono) -> Coefficient:
        return self._terms.get(mono, Coefficient.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def total_degree(self) -> int:
        return max((m.degree() for m in self._terms), default=0)

    def is_position_only(self) -> bool:
        return all(m.c == 0 and m.d == 0 for m in self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "PhasePoly":
        if not isinstance(other, PhasePoly):
            return NotImplemented
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            prev = acc.get(mono)
            total = coeff if prev is None else prev + coeff
            if total:
                acc[mono] = total
            else:
                acc.pop(mono, None)
        return PhasePoly(acc)

    def __sub__(self, other) -> "PhasePoly":
        if not isinstance(other, PhasePoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "PhasePoly":
        return PhasePoly({m: -c for m, c in self._terms.items()})

    def __mul__(self, other) -> "PhasePoly":
        if isinstance(other, PhasePoly):
            acc: dict[PhaseMono, Coefficient] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    mono = m1 * m2
                    prod = c1 * c2
                    prev = acc.get(mono)
                    total = prod if prev is None else prev + prod
                    if total:
                        acc[mono] = total
                    else:
                        acc.pop(mono, None)
            return PhasePoly(acc)
        if isinstance(other, (Coefficient, CoeffMono, Scalar, int, Fraction)):
            return self._scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "PhasePoly":
        if isinstance(other, (Coefficient, CoeffMono, Scalar, int, Fraction)):
            return self._scale(other)
        return NotImplemented

    def _scale(self, value) -> "PhasePoly":
        coeff = Coefficient.of(value)
        return PhasePoly({m: c * coeff for m, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "PhasePoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = PhasePoly.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, PhasePoly):
            return NotImplemented
        return self._terms == other._terms

    # -- calculus -------------------------------------------------------------

    def partial(self, var: PhaseVar) -> "PhasePoly":
        """Formal partial derivative with respect to one phase variable."""
        slot = _VAR_SLOT[var]
        acc: dict[PhaseMono, Coefficient] = {}
        for mono, coeff in self._terms.items():
            exps = list(mono.exponents())
            exp = exps[slot]
            if exp == 0:
                continue
            exps[slot] = exp - 1
            acc[PhaseMono(*exps)] = coeff * exp
        return PhasePoly(acc)

    # -- rendering -------------------------------------------------------------

    def text(self) -> str:
        return render_terms(self.sorted_terms(), PhaseMono.factors)

    def latex(self) -> str:
        return render_terms_latex(self.sorted_terms(), PhaseMono.latex_factors)

    def __repr__(self) -> str:
        return f"PhasePoly({self.text()})"

    def __str__(self) -> str:
        return self.text()


def poisson(f: PhasePoly, g: PhasePoly) -> PhasePoly:
    """Canonical Poisson bracket {f, g}.

    Convention: {f, g} = sum over canonical pairs of
    df/dq * dg/dp - df/dp * dg/dq, so that {x, px} = 1.
    """
    out = PhasePoly.zero()
    for pos, mom in _CANONICAL_PAIRS:
        out = out + f.partial(pos) * g.partial(mom) - f.partial(mom) * g.partial(pos)
    return out


def hamiltonian_flow_apply(flow_hamiltonian: PhasePoly, observable: PhasePoly) -> PhasePoly:
    """Apply the Hamiltonian vector field of `flow_hamiltonian` to `observable`.

    The sign is fixed so that the field of px^2/2 + omega^2 x^2 applied
    to x yields px, i.e. the result is {observable, flow_hamiltonian}.
    """
    return poisson(observable, flow_hamiltonian)


def substitute_uy(poly: PhasePoly, m: int, n: int) -> PhasePoly:
    """Eliminate the auxiliary pair: u -> (n/m) y and pu -> (m/n) py.

    `poly` is read with its y slot holding u and its py slot holding pu;
    the result is a genuine (x, y, px, py) polynomial.  Both substitutions
    are linear rescalings, so this is a ring homomorphism.
    """
    if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
        raise ValueError("m and n must be positive integers")
    ratio = Fraction(n, m)
    acc = {}
    for mono, coeff in poly.terms.items():
        acc[mono] = coeff * ratio ** (mono.b - mono.d)
    return PhasePoly(acc)
