"""Exact arithmetic in the coefficient ring Q(i)[sqrt2][hbar, omega].

Every constant produced by the oscillator constructions lives in this
ring: Gaussian rationals carry the imaginary unit of the ladder factors
and of the momentum operator, hbar and omega are formal parameters, and
sqrt2 is a ring generator subject to the single reduction
sqrt2 * sqrt2 = 2, the only irrationality the constructions need.
Keeping hbar and omega symbolic makes claims such as "every commutator
term carries hbar^2 and omega" checkable as exact exponent bounds.

Values are immutable and operations are pure, so sharing between
concurrent tasks is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"expected int or Fraction, got {type(value).__name__}")
    return Fraction(value)


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_fraction_latex(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return sign + r"\frac{%d}{%d}" % (abs(q.numerator), q.denominator)


@dataclass(frozen=True)
class Scalar:
    """Gaussian rational re + im*i with exact Fraction components."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if type(self.re) is not Fraction:
            object.__setattr__(self, "re", _as_fraction(self.re))
        if type(self.im) is not Fraction:
            object.__setattr__(self, "im", _as_fraction(self.im))

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: "Scalar") -> "Scalar":
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def text(self) -> str:
        if self.im == 0:
            return format_fraction(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{format_fraction(self.im)}*i"
        sign = " + " if self.im > 0 else " - "
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{format_fraction(mag)}*i"
        return f"{format_fraction(self.re)}{sign}{imag}"

    def latex(self) -> str:
        if self.im == 0:
            return format_fraction_latex(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{format_fraction_latex(self.im)} i"
        sign = " + " if self.im > 0 else " - "
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{format_fraction_latex(mag)} i"
        return f"{format_fraction_latex(self.re)}{sign}{imag}"

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class CoeffMono:
    """Parameter monomial hbar^h_exp * omega^w_exp * sqrt2^r_exp."""

    h_exp: int = 0
    w_exp: int = 0
    r_exp: int = 0

    def __post_init__(self):
        if self.h_exp < 0 or self.w_exp < 0:
            raise ValueError("hbar and omega exponents must be nonnegative")
        if self.r_exp not in (0, 1):
            raise ValueError("sqrt2 exponent must be reduced to 0 or 1")

    def sort_key(self) -> tuple[int, int, int]:
        return (self.h_exp, self.w_exp, self.r_exp)

    def factors(self) -> list[str]:
        out = []
        if self.h_exp:
            out.append("hbar" if self.h_exp == 1 else f"hbar^{self.h_exp}")
        if self.w_exp:
            out.append("omega" if self.w_exp == 1 else f"omega^{self.w_exp}")
        if self.r_exp:
            out.append("sqrt2")
        return out

    def latex_factors(self) -> list[str]:
        out = []
        if self.h_exp:
            out.append(r"\hbar" if self.h_exp == 1 else r"\hbar^{%d}" % self.h_exp)
        if self.w_exp:
            out.append(r"\omega" if self.w_exp == 1 else r"\omega^{%d}" % self.w_exp)
        if self.r_exp:
            out.append(r"\sqrt{2}")
        return out


_UNIT = CoeffMono()
_TWO = Scalar(Fraction(2))


class Coefficient:
    """Finite Scalar-weighted sum of parameter monomials, kept canonical.

    Canonical form stores no zero scalars, so equality is structural and
    a - b == Coefficient.zero() exactly when a equals b.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[CoeffMono, Scalar] | None = None):
        clean: dict[CoeffMono, Scalar] = {}
        if terms:
            for mono, scalar in terms.items():
                if scalar:
                    clean[mono] = scalar
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Coefficient":
        return cls()

    @classmethod
    def of(cls, value) -> "Coefficient":
        """Coerce an int, Fraction, Scalar, CoeffMono or Coefficient."""
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, CoeffMono):
            return cls({value: Scalar(Fraction(1))})
        if isinstance(value, Scalar):
            return cls({_UNIT: value})
        return cls({_UNIT: Scalar(_as_fraction(value))})

    @classmethod
    def one(cls) -> "Coefficient":
        return cls.of(1)

    @classmethod
    def i(cls) -> "Coefficient":
        return cls.of(Scalar(Fraction(0), Fraction(1)))

    @classmethod
    def hbar(cls, exp: int = 1) -> "Coefficient":
        return cls({CoeffMono(h_exp=exp): Scalar(Fraction(1))})

    @classmethod
    def omega(cls, exp: int = 1) -> "Coefficient":
        return cls({CoeffMono(w_exp=exp): Scalar(Fraction(1))})

    @classmethod
    def sqrt2(cls) -> "Coefficient":
        return cls({CoeffMono(r_exp=1): Scalar(Fraction(1))})

    @classmethod
    def term(cls, mono: CoeffMono, scalar: Scalar) -> "Coefficient":
        return cls({mono: scalar})

    # -- queries -------------------------------------------------------

    @property
    def terms(self) -> dict[CoeffMono, Scalar]:
        """Underlying term map; treat as read-only."""
        return self._terms

    def sorted_terms(self) -> list[tuple[CoeffMono, Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def is_real(self) -> bool:
        return all(s.is_real() for s in self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def hbar_free_part(self) -> "Coefficient":
        return Coefficient({m: s for m, s in self._terms.items() if m.h_exp == 0})

    # -- ring operations -----------------------------------------------

    def __add__(self, other) -> "Coefficient":
        if not isinstance(other, (Coefficient, CoeffMono, Scalar, int, Fraction)):
            return NotImplemented
        other = Coefficient.of(other)
        acc = dict(self._terms)
        for mono, scalar in other._terms.items():
            prev = acc.get(mono)
            total = scalar if prev is None else prev + scalar
            if total:
                acc[mono] = total
            else:
                acc.pop(mono, None)
        return Coefficient(acc)

    __radd__ = __add__

    def __sub__(self, other) -> "Coefficient":
        if not isinstance(other, (Coefficient, CoeffMono, Scalar, int, Fraction)):
            return NotImplemented
        return self + (-Coefficient.of(other))

    def __rsub__(self, other) -> "Coefficient":
        if not isinstance(other, (Coefficient, CoeffMono, Scalar, int, Fraction)):
            return NotImplemented
        return Coefficient.of(other) + (-self)

    def __neg__(self) -> "Coefficient":
        return Coefficient({m: -s for m, s in self._terms.items()})

    def __mul__(self, other) -> "Coefficient":
        if not isinstance(other, (Coefficient, CoeffMono, Scalar, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            # rational scaling never merges monomials
            if other == 0:
                return Coefficient.zero()
            return Coefficient(
                {m: Scalar(s.re * other, s.im * other) for m, s in self._terms.items()}
            )
        other = Coefficient.of(other)
        acc: dict[CoeffMono, Scalar] = {}
        for m1, s1 in self._terms.items():
            for m2, s2 in other._terms.items():
                scalar = s1 * s2
                r = m1.r_exp + m2.r_exp
                if r == 2:
                    scalar = scalar * _TWO
                    r = 0
                mono = CoeffMono(m1.h_exp + m2.h_exp, m1.w_exp + m2.w_exp, r)
                prev = acc.get(mono)
                total = scalar if prev is None else prev + scalar
                if total:
                    acc[mono] = total
                else:
                    acc.pop(mono, None)
        return Coefficient(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Coefficient":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Coefficient.one()
        for _ in range(exponent):
            out = out * self
        return out

    def conjugate(self) -> "Coefficient":
        """Map i to -i; hbar, omega and sqrt2 are fixed."""
        return Coefficient({m: s.conjugate() for m, s in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Scalar, CoeffMono)):
            other = Coefficient.of(other)
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self._terms == other._terms

    # -- rendering -------------------------------------------------------

    def text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, scalar in self.sorted_terms():
            parts.append(" * ".join(term_factors(scalar, mono.factors())))
        return join_signed_terms(parts)

    def latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, scalar in self.sorted_terms():
            parts.append(" ".join(term_factors_latex(scalar, mono.latex_factors())))
        return join_signed_terms(parts)

    def __repr__(self) -> str:
        return f"Coefficient({self.text()})"

    def __str__(self) -> str:
        return self.text()


def term_factors(scalar: Scalar, tail: list[str]) -> list[str]:
    """Factor strings for scalar * <tail>, folding unit scalars into the tail.

    A -1 folds onto the first factor only when that factor carries no
    exponent: the grammar binds '^' after unary minus, so "-hbar^2" would
    read back as (-hbar)^2.
    """
    tail = list(tail)
    if scalar.im == 0:
        if scalar.re == 1 and tail:
            head = []
        elif scalar.re == -1 and tail and "^" not in tail[0]:
            head = []
            tail[0] = "-" + tail[0]
        else:
            head = [format_fraction(scalar.re)]
    elif scalar.re == 0:
        if scalar.im == 1:
            head = ["i"]
        elif scalar.im == -1:
            head = ["-i"]
        else:
            head = [format_fraction(scalar.im), "i"]
    else:
        head = ["(" + scalar.text() + ")"]
    return (head + tail) or ["1"]


def term_factors_latex(scalar: Scalar, tail: list[str]) -> list[str]:
    tail = list(tail)
    if scalar.im == 0:
        if scalar.re == 1 and tail:
            head = []
        elif scalar.re == -1 and tail:
            # in display math the minus is read as negating the product
            head = []
            tail[0] = "-" + tail[0]
        else:
            head = [format_fraction_latex(scalar.re)]
    elif scalar.re == 0:
        if scalar.im == 1:
            head = ["i"]
        elif scalar.im == -1:
            head = ["-i"]
        else:
            head = [format_fraction_latex(scalar.im), "i"]
    else:
        head = [r"\left(" + scalar.latex() + r"\right)"]
    return (head + tail) or ["1"]


def coefficient_factors(coeff: Coefficient, tail=()) -> list[str]:
    """Factor list for coeff * <tail factors>, parenthesizing sums."""
    items = coeff.sorted_terms()
    tail = list(tail)
    if not items:
        return ["0"] + tail
    if len(items) == 1:
        mono, scalar = items[0]
        return term_factors(scalar, mono.factors() + tail)
    return ["(" + coeff.text() + ")"] + tail


def coefficient_factors_latex(coeff: Coefficient, tail=()) -> list[str]:
    items = coeff.sorted_terms()
    tail = list(tail)
    if not items:
        return ["0"] + tail
    if len(items) == 1:
        mono, scalar = items[0]
        return term_factors_latex(scalar, mono.latex_factors() + tail)
    return [r"\left(" + coeff.latex() + r"\right)"] + tail


def join_signed_terms(terms: list[str]) -> str:
    """Join rendered terms with binary +/- so negations read naturally."""
    parts = []
    for term in terms:
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(" - " + term[1:])
        else:
            parts.append(" + " + term)
    return "".join(parts)


def render_terms(sorted_items, mono_factors) -> str:
    """Plain-text rendering of (monomial, Coefficient) pairs."""
    if not sorted_items:
        return "0"
    parts = []
    for mono, coeff in sorted_items:
        parts.append(" * ".join(coefficient_factors(coeff, mono_factors(mono))))
    return join_signed_terms(parts)


def render_terms_latex(sorted_items, mono_factors) -> str:
    if not sorted_items:
        return "0"
    parts = []
    for mono, coeff in sorted_items:
        parts.append(" ".join(coefficient_factors_latex(coeff, mono_factors(mono))))
    return join_signed_terms(parts)
