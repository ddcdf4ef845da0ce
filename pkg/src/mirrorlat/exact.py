"""Small exact linear algebra over Q on numpy object arrays of Fractions."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np
import sympy
from sympy.polys.matrices import DomainMatrix

from .errors import SpectralInconsistency


def fraction_array(rows) -> np.ndarray:
    arr = np.array(rows, dtype=object)
    flat = arr.reshape(-1)
    for idx, value in enumerate(flat):
        flat[idx] = Fraction(value)
    return arr


def zeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(0))
    return arr


def identity(n: int) -> np.ndarray:
    arr = zeros((n, n))
    for i in range(n):
        arr[i, i] = Fraction(1)
    return arr


def _to_sympy(mat: np.ndarray) -> sympy.Matrix:
    return sympy.Matrix(mat.shape[0], mat.shape[1],
                        [sympy.Rational(x.numerator, x.denominator) for x in mat.reshape(-1)])


def _from_sympy_rational(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def inverse(mat: np.ndarray) -> np.ndarray:
    inv = _to_sympy(mat).inv()
    return fraction_array([[_from_sympy_rational(inv[i, j]) for j in range(inv.cols)]
                           for i in range(inv.rows)])


def eigenvalues(mat: np.ndarray) -> dict[Fraction, int]:
    """Exact eigenvalues with algebraic multiplicities of a rational matrix.

    Raises SpectralInconsistency when the characteristic polynomial has an
    irreducible factor of degree > 1 (an irrational eigenvalue).
    """
    qq = sympy.QQ
    rows = [[qq(int(x.numerator), int(x.denominator)) for x in row] for row in mat.tolist()]
    coeffs = DomainMatrix(rows, mat.shape, qq).charpoly()
    _, factors = sympy.Poly(coeffs, sympy.Symbol("lam"), domain=qq).factor_list()
    spectrum: dict[Fraction, int] = {}
    for poly, mult in factors:
        if poly.degree() != 1:
            raise SpectralInconsistency(f"irrational eigenvalues: factor {poly.as_expr()}")
        a, b = poly.all_coeffs()
        root = _from_sympy_rational(-b / a)
        spectrum[root] = spectrum.get(root, 0) + int(mult)
    return spectrum


def common_denominator(values) -> int:
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    return den


def integerize(arr: np.ndarray, den: int | None = None) -> tuple[np.ndarray, int]:
    """Scale a Fraction array to integers; returns (int64 array, denominator)."""
    flat = arr.reshape(-1)
    if den is None:
        den = common_denominator(flat)
    scaled = [int(Fraction(v) * den) for v in flat]
    bound = max((abs(v) for v in scaled), default=0)
    dtype = np.int64 if bound < 2 ** 40 else object
    return np.array(scaled, dtype=dtype).reshape(arr.shape), den


def is_zero(arr: np.ndarray) -> bool:
    return all(x == 0 for x in arr.reshape(-1))
