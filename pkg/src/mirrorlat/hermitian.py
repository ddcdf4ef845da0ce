"""Hermitian Gram form of the affine reflection representation.

Nodes are 0..n with node 0 the negative highest root.  The form is
h(x, y) = sum_ij x_i h_ij conj(y_j); generators T_j act on column vectors.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .connection import MultiplicityParam
from .errors import SingularForm, SpecializationDomain
from .rootsystem import RootSystemData

RELATION_TOL = 1e-9
ZERO_THRESHOLD = 1e-8


def node_parameters(rs: RootSystemData, kappa: MultiplicityParam) -> list[Fraction]:
    """k_j for nodes 0..n; for type A every node carries k."""
    if rs.family == "A":
        return [kappa.k] * (rs.rank + 1)
    pick = {"first": kappa.k, "second": kappa.k_prime}
    return [pick[rs.orbit_tag(rs.highest_root)]] + [pick[tag] for tag in rs.simple_tags]


def in_restricted_domain(rs: RootSystemData, kappa: MultiplicityParam) -> tuple[bool, str]:
    """Exact membership test for the restricted parameter space K'."""
    half = Fraction(1, 2)
    if rs.family == "A":
        for name, value in (("k", kappa.k), ("k'", kappa.k_prime)):
            if not -half < value < half:
                return False, f"{name} = {value} not in (-1/2, 1/2)"
        return True, ""
    if rs.family in "DE" and kappa.k_prime != 0:
        return False, f"{rs.name} has a single multiplicity; k' must be 0"
    ks = node_parameters(rs, kappa)
    for j, value in enumerate(ks):
        if not -half < value < half:
            return False, f"k_{j} = {value} not in (-1/2, 1/2)"
    M = rs.affine_coxeter_matrix
    for i, j in itertools.combinations(range(len(ks)), 2):
        m = int(M[i, j])
        if m >= 4 and m % 2 == 0 and not abs(ks[i] - ks[j]) < 1 - Fraction(2, m):
            return False, f"|k_{i} - k_{j}| = {abs(ks[i] - ks[j])} not < {1 - Fraction(2, m)}"
    return True, ""


@dataclass
class HermitianGram:
    n_plus_1: int
    entries: np.ndarray
    kappa: MultiplicityParam
    q_half: np.ndarray
    s_offdiag: np.ndarray
    coxeter: np.ndarray = field(repr=False)

    def to_json(self) -> dict:
        return {
            "n_plus_1": self.n_plus_1,
            "entries": [[[float(z.real), float(z.imag)] for z in row] for row in self.entries],
            "q_half": [[float(z.real), float(z.imag)] for z in self.q_half],
        }


def gram(rs: RootSystemData, kappa: MultiplicityParam, *, q_prime_half: complex | None = None
         ) -> HermitianGram:
    """Specialized Gram matrix h(kappa); raises SpecializationDomain outside K'.

    For type A, ``q_prime_half`` overrides exp(-pi i k') by any unit complex number.
    """
    ok, reason = in_restricted_domain(rs, kappa)
    if not ok:
        raise SpecializationDomain(f"{rs.name}, kappa=({kappa.k}, {kappa.k_prime}): {reason}")
    ks = [float(k) for k in node_parameters(rs, kappa)]
    size = rs.rank + 1
    q_half = np.exp(-1j * math.pi * np.array(ks))
    M = rs.affine_coxeter_matrix
    s = np.zeros((size, size), dtype=complex)
    if rs.family == "A":
        if q_prime_half is None:
            q_prime_half = cmath.exp(-1j * math.pi * float(kappa.k_prime))
        elif abs(abs(q_prime_half) - 1) > 1e-12:
            raise SpecializationDomain("q'^(1/2) must lie on the unit circle")
        for i in range(size):
            s[i, (i + 1) % size] = 1 / q_prime_half
            s[(i + 1) % size, i] = q_prime_half
    else:
        for i, j in itertools.permutations(range(size), 2):
            m = int(M[i, j])
            if m == 3:
                s[i, j] = 1
            elif m >= 4:
                s[i, j] = math.sqrt(2 * math.cos(math.pi * (ks[i] - ks[j])) + 2 * math.cos(2 * math.pi / m))
    h = -s
    h[np.diag_indices(size)] = 2 * np.cos(math.pi * np.array(ks))
    return HermitianGram(size, h, kappa, q_half, s, M)


@dataclass
class ReflectionRep:
    generators: list
    gram: HermitianGram

    def q(self, j: int) -> complex:
        return self.gram.q_half[j] ** 2


def reflection_matrices(g: HermitianGram) -> ReflectionRep:
    """T_j(e_i) = e_i - q_j^(1/2) h_ij e_j, so T_j e_j = -q_j e_j."""
    size = g.n_plus_1
    gens = []
    for j in range(size):
        t = np.eye(size, dtype=complex)
        t[j, :] -= g.q_half[j] * g.entries[:, j]
        gens.append(t)
    return ReflectionRep(gens, g)


def _alternating(a: np.ndarray, b: np.ndarray, length: int) -> np.ndarray:
    out = np.eye(a.shape[0], dtype=complex)
    for r in range(length):
        out = out @ (a if r % 2 == 0 else b)
    return out


@dataclass
class RelationReport:
    braid: dict  # (i, j) -> max-norm residual
    quadratic: list
    invariance: list
    tol: float = RELATION_TOL

    @property
    def max_braid(self) -> float:
        return max(self.braid.values(), default=0.0)

    @property
    def all_hold(self) -> bool:
        return max(self.max_braid, max(self.quadratic), max(self.invariance)) < self.tol

    def to_json(self) -> dict:
        return {"max_braid": self.max_braid, "max_quadratic": max(self.quadratic),
                "max_invariance": max(self.invariance), "all_hold": self.all_hold}


def relation_checks(rep: ReflectionRep, tol: float = RELATION_TOL) -> RelationReport:
    """Braid, quadratic and invariance residuals (max-norm) of the generators."""
    T, h = rep.generators, rep.gram.entries
    size = len(T)
    ident = np.eye(size)
    braid = {}
    for i, j in itertools.combinations(range(size), 2):
        m = int(rep.gram.coxeter[i, j])
        braid[(i, j)] = float(np.abs(_alternating(T[i], T[j], m) - _alternating(T[j], T[i], m)).max())
    quadratic = [float(np.abs((T[j] - ident) @ (T[j] + rep.q(j) * ident)).max()) for j in range(size)]
    invariance = [float(np.abs(t.T @ h @ t.conj() - h).max()) for t in T]
    return RelationReport(braid, quadratic, invariance, tol)


def braid_holds_2x2(q1: complex, q2: complex, d1: complex, d2: complex, m: int,
                    tol: float = 1e-9) -> bool:
    """Direct check of the length-m braid relation for the two standard 2x2 reflections."""
    s1 = np.array([[-q1, d1], [0, 1]], dtype=complex)
    s2 = np.array([[1, 0], [d2, -q2]], dtype=complex)
    return float(np.abs(_alternating(s1, s2, m) - _alternating(s2, s1, m)).max()) < tol


def braid_criterion_2x2(q1: complex, q2: complex, d1: complex, d2: complex, m: int,
                        tol: float = 1e-9) -> bool:
    """Closed-form criterion for the same braid relation in terms of (q, d) and m-th roots of unity."""
    if m == 2:
        return abs(d1) < tol and abs(d2) < tol
    roots = [cmath.exp(2j * math.pi * r / m) for r in range(1, m)]
    if m % 2 == 1:
        if abs(q1 - q2) >= tol:
            return False
        return any(abs(d1 * d2 - (2 + xi + 1 / xi) * q1) < tol for xi in roots)
    root_q = cmath.sqrt(q1) * cmath.sqrt(q2)
    return any(abs(d1 * d2 - (q1 + q2 + (xi + 1 / xi) * root_q)) < tol
               for xi in roots if abs(xi * xi - 1) >= tol)


def hyperbolic_xy(rs: RootSystemData, kappa: MultiplicityParam) -> tuple[Fraction, Fraction] | None:
    """The pair (x, y) entering the ABCFG determinant; None for D and E."""
    n, k, kp = rs.rank, kappa.k, kappa.k_prime
    return {
        "A": lambda: (Fraction(n + 1, 2) * (k + kp), Fraction(n + 1, 2) * (k - kp)),
        "B": lambda: ((n - 2) * k + kp, 2 * k),
        "C": lambda: ((n - 2) * k + 2 * kp, k),
        "F": lambda: (k + kp, 2 * k + kp),
        "G": lambda: ((k + 3 * kp) / 2, (k + kp) / 2),
    }.get(rs.family, lambda: None)()


def det_closed_form(rs: RootSystemData, kappa: MultiplicityParam) -> float:
    xy = hyperbolic_xy(rs, kappa)
    if xy is not None:
        x, y = xy
        return -4 * math.sin(math.pi * x) * math.sin(math.pi * y)
    coxeter, exponents = rs.de_exponents
    ck = math.cos(math.pi * kappa.k)
    return 2.0 ** (rs.rank + 1) * math.prod(ck - math.cos(math.pi * m / coxeter) for m in exponents)


def det_compare(rs: RootSystemData, kappa: MultiplicityParam) -> float:
    numeric = np.linalg.det(gram(rs, kappa).entries)
    return abs(complex(numeric) - det_closed_form(rs, kappa))


def hyperbolic_bound(rs: RootSystemData) -> Fraction | None:
    """Upper end of the k-interval for D and E; None for the other families."""
    return {"D": Fraction(1, rs.rank - 2), "E": Fraction(1, rs.rank - 3)}.get(rs.family)


def in_hyperbolic_region(rs: RootSystemData, kappa: MultiplicityParam) -> bool:
    """Exact test of kappa in K'_hyp."""
    if not in_restricted_domain(rs, kappa)[0]:
        return False
    xy = hyperbolic_xy(rs, kappa)
    if xy is None:
        return 0 < kappa.k < hyperbolic_bound(rs)
    x, y = xy
    return 0 < x < 1 and 0 < y < 1


def _entries(g) -> np.ndarray:
    return g.entries if isinstance(g, HermitianGram) else np.asarray(g, dtype=complex)


def signature(g) -> tuple[int, int, int]:
    """(n_pos, n_neg, n_zero) with zero threshold 1e-8 * ||h||."""
    h = _entries(g)
    if np.abs(h - h.conj().T).max() > 1e-12 * max(1.0, np.abs(h).max()):
        raise ValueError("matrix is not Hermitian")
    eig = np.linalg.eigvalsh(h)
    cut = ZERO_THRESHOLD * max(np.abs(eig).max(), 1e-300)
    return int((eig > cut).sum()), int((eig < -cut).sum()), int((np.abs(eig) <= cut).sum())


def dual_form(g) -> np.ndarray:
    """h* = det(h) h^(-1); raises SingularForm when h is numerically singular."""
    h = _entries(g)
    if signature(h)[2]:
        raise SingularForm("Gram matrix is singular; dual form undefined")
    dual = np.linalg.det(h) * np.linalg.inv(h)
    return (dual + dual.conj().T) / 2


def dual_form_signature(g) -> tuple[int, int, int]:
    return signature(dual_form(g))
