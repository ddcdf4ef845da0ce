"""Exact polynomials in the multiplicity parameters (k, k').

A :class:`ScalarPoly` is a bivariate polynomial with :class:`~fractions.Fraction`
coefficients.  Linear forms (residue eigenvalues, relative exponents) are the
degree <= 1 case and are built with :func:`linform`.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly; anything else raises ValueError."""
    token = text.strip()
    if not _RATIONAL_RE.fullmatch(token):
        raise ValueError(f"malformed rational: {text!r}")
    return Fraction(token)


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class ScalarPoly:
    """Polynomial sum c_ij k^i k'^j with rational coefficients (immutable)."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[(int(mono[0]), int(mono[1]))] = coeff
        self._terms = clean

    @classmethod
    def const(cls, value) -> ScalarPoly:
        return cls({(0, 0): value})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def __call__(self, k, kp=0):
        return self.evaluate(k, kp)

    def evaluate(self, k, kp=0):
        """Evaluate at numbers (exact for rationals) or at other ScalarPolys."""
        total = 0
        for (i, j), c in self._terms.items():
            total = total + c * (k ** i) * (kp ** j)
        return total

    def linear_coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        """(const, k, kp) of a linear form; raises if the degree exceeds 1."""
        if self.degree > 1:
            raise ValueError(f"{self} is not linear")
        return self.coeff(0, 0), self.coeff(1, 0), self.coeff(0, 1)

    def to_json(self) -> dict:
        const, k, kp = self.linear_coeffs()
        return {"const": format_rational(const), "k": format_rational(k),
                "kp": format_rational(kp)}

    def _coerce(self, other):
        if isinstance(other, ScalarPoly):
            return other
        if isinstance(other, (int, Rational)):
            return ScalarPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, 0) + c
        return ScalarPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return ScalarPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for (i, j), a in self._terms.items():
            for (r, s), b in other._terms.items():
                mono = (i + r, j + s)
                terms[mono] = terms.get(mono, 0) + a * b
        return ScalarPoly(terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * ScalarPoly.const(1 / Fraction(other))
        if isinstance(other, ScalarPoly) and other.degree == 0 and not other.is_zero():
            return self / other.coeff(0, 0)
        return NotImplemented

    def __pow__(self, exponent: int):
        result = ScalarPoly.const(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"ScalarPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = {(0, 0): "", (1, 0): "k", (0, 1): "kp", (2, 0): "k^2",
                 (1, 1): "k*kp", (0, 2): "kp^2"}
        parts = []
        for mono in sorted(self._terms, key=lambda m: (m[0] + m[1], -m[0])):
            c = self._terms[mono]
            name = names.get(mono, f"k^{mono[0]}*kp^{mono[1]}")
            if not name:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{format_rational(c)}*{name}")
        return " + ".join(parts).replace("+ -", "- ")


K = ScalarPoly({(1, 0): 1})
KP = ScalarPoly({(0, 1): 1})


def linform(const=0, k=0, kp=0) -> ScalarPoly:
    return ScalarPoly({(0, 0): const, (1, 0): k, (0, 1): kp})


def linform_from_json(data: dict) -> ScalarPoly:
    return linform(parse_rational(data["const"]), parse_rational(data["k"]),
                   parse_rational(data["kp"]))
