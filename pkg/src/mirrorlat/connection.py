"""Dunkl-type connection data and flatness verification.

Endomorphisms of the Cartan subalgebra are matrices in the basis of simple
coroots.  For a positive root alpha the rank one map ``P_alpha = alpha_vee (x) alpha``
sends x to alpha(x) alpha_vee, so ``u_alpha = k_alpha P_alpha``.

Exact checks run in rational arithmetic.  Because every quantity in the
flatness conditions is polynomial in (k, k'), the commutators are tabulated
once per root system as integer/rational coefficient arrays and then evaluated
exactly at each multiplicity parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import exact
from .errors import DomainViolation, SingularPoint
from .polys import KP, K, ScalarPoly
from .rootsystem import RootSystemData, build, dot, rank2_positive_subsystems

REGULARITY_MARGIN = 1e-8


@dataclass(frozen=True)
class MultiplicityParam:
    """The pair (k, k'); entries are Fractions or, in symbolic mode, ScalarPolys."""

    k: object = Fraction(0)
    k_prime: object = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.k, ScalarPoly):
            object.__setattr__(self, "k", Fraction(self.k))
        if not isinstance(self.k_prime, ScalarPoly):
            object.__setattr__(self, "k_prime", Fraction(self.k_prime))

    @classmethod
    def symbolic(cls) -> MultiplicityParam:
        return cls(K, KP)

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.k, ScalarPoly)

    def validate(self, rs: RootSystemData) -> MultiplicityParam:
        if rs.family in "DE" and not self.is_symbolic and self.k_prime != 0:
            raise DomainViolation(f"{rs.name} has a single multiplicity; k' must be 0")
        return self


def root_weights(rs: RootSystemData, kappa: MultiplicityParam) -> list:
    """k_alpha for each positive root (k' only acts through b for type A)."""
    if rs.family == "A":
        return [kappa.k] * len(rs.positive_roots)
    return [kappa.k_prime if tag == "second" else kappa.k for tag in rs.orbit_tags]


def a_form(rs: RootSystemData, kappa: MultiplicityParam):
    """Scalar c with a(u, v) = c (u, v) making the extended connection flat."""
    n, k, kp = rs.rank, kappa.k, kappa.k_prime
    fam = rs.family
    if fam == "A":
        return Fraction(n + 1, 4) * (k * k - kp * kp)
    if fam == "B":
        return (n - 2) * k * k + k * kp
    if fam == "C":
        return (n - 2) * k * k + 2 * k * kp
    if fam == "D":
        return (n - 2) * k * k
    if fam == "E":
        return {6: 6, 7: 12, 8: 30}[n] * k * k
    if fam == "F":
        return (k + kp) * (2 * k + kp)
    return Fraction(3, 4) * (k + 3 * kp) * (k + kp)


@lru_cache(maxsize=None)
def gamma_r(family: str, rank: int) -> Fraction:
    """gamma with sum_{alpha>0} alpha(u) alpha(v) = gamma (u, v), found by brute force."""
    rs = build(family, rank)
    rows = exact.fraction_array(rs.root_rows.tolist())
    lhs = rows.T @ rows
    gram = rs.coroot_gram
    gamma = lhs[0, 0] / gram[0, 0]
    if not exact.is_zero(lhs - gamma * gram):
        raise ArithmeticError(f"{rs.name}: quadratic form is not a multiple of (,)")
    return gamma


@dataclass(frozen=True)
class ConnectionData:
    rs: RootSystemData
    a_coeff: object
    c_kappa: object
    has_b: bool


def connection_data(rs: RootSystemData, kappa: MultiplicityParam) -> ConnectionData:
    a = a_form(rs, kappa)
    return ConnectionData(rs=rs, a_coeff=a, c_kappa=a / gamma_r(rs.family, rs.rank),
                          has_b=rs.family == "A")


@lru_cache(maxsize=None)
def _alpha_prime(family: str, rank: int) -> np.ndarray:
    """Coroot coordinates of alpha' = e_i + e_j - 2/(n+1) sum e_l for A_n (zeros otherwise)."""
    rs = build(family, rank)
    out = exact.zeros((len(rs.positive_roots), rs.rank))
    if family != "A":
        return out
    shift = Fraction(2, rank + 1)
    for idx, root in enumerate(rs.positive_roots):
        vec = [Fraction(1) - shift if x != 0 else -shift for x in root]
        out[idx, :] = rs.to_coords(tuple(vec))
    return out


def _as_coords(rs: RootSystemData, vec) -> np.ndarray:
    return exact.fraction_array(list(vec)).reshape(rs.rank)


def _b_vanishes(rs: RootSystemData, kappa: MultiplicityParam) -> bool:
    return rs.family != "A" or kappa.k_prime == 0


def b_map(rs: RootSystemData, u, v, kappa: MultiplicityParam) -> np.ndarray:
    """b(u, v) in simple-coroot coordinates; u, v given in the same coordinates."""
    u, v = _as_coords(rs, u), _as_coords(rs, v)
    if _b_vanishes(rs, kappa):
        return exact.zeros(rs.rank)
    rows = exact.fraction_array(rs.root_rows.tolist())
    weights = (rows @ u) * (rows @ v)
    total = weights @ _alpha_prime(rs.family, rs.rank)
    return np.array([Fraction(1, 2) * kappa.k_prime * x for x in total], dtype=object)


def projector(rs: RootSystemData, index: int) -> np.ndarray:
    """P_alpha for the positive root with the given index (integer matrix)."""
    return np.outer(rs.coroot_coords[index], rs.root_rows[index])


def u_matrix(rs: RootSystemData, index: int, kappa: MultiplicityParam) -> np.ndarray:
    k_alpha = root_weights(rs, kappa)[index]
    return np.array(projector(rs, index).tolist(), dtype=object) * k_alpha


def _scaled(int_matrix: np.ndarray, coeff) -> np.ndarray:
    """Object matrix int_matrix * coeff, with coeff a Fraction or ScalarPoly."""
    out = np.empty(int_matrix.shape, dtype=object)
    for idx, value in np.ndenumerate(int_matrix):
        out[idx] = Fraction(int(value)) * coeff
    return out


def U_matrix(rs: RootSystemData, x, kappa: MultiplicityParam) -> np.ndarray:
    """U_x = -1/4 sum_{alpha in R} |alpha(x)| u_alpha, summed per orbit in integers."""
    xi, den = exact.integerize(_as_coords(rs, x))
    rows = rs.root_rows.astype(np.int64)
    cors = np.array(rs.coroot_coords.tolist(), dtype=np.int64)
    values = np.abs(rows @ xi)
    tags = np.array(["first"] * len(rows) if rs.family == "A" else rs.orbit_tags)
    out = exact.zeros((rs.rank, rs.rank))
    for tag, weight in (("first", kappa.k), ("second", kappa.k_prime)):
        mask = tags == tag
        total = cors[mask].T @ (values[mask, None] * rows[mask])
        if total.any():
            out = out + _scaled(total, weight * Fraction(-1, 2 * den))
    return out


def b_matrix(rs: RootSystemData, x, kappa: MultiplicityParam) -> np.ndarray:
    """Matrix of w -> b(x, w)."""
    if _b_vanishes(rs, kappa):
        return exact.zeros((rs.rank, rs.rank))
    xi, den = exact.integerize(_as_coords(rs, x))
    rows = rs.root_rows.astype(np.int64)
    n1 = rs.rank + 1
    prime, _ = exact.integerize(_alpha_prime(rs.family, rs.rank) * n1, 1)
    total = prime.T @ ((rows @ xi)[:, None] * rows)
    return _scaled(total, kappa.k_prime * Fraction(1, 2 * den * n1))


def a_matrix(rs: RootSystemData, kappa: MultiplicityParam, a_coeff=None) -> np.ndarray:
    a = a_form(rs, kappa) if a_coeff is None else a_coeff
    return rs.coroot_gram * a


@dataclass
class DunklEndomorphisms:
    u: list
    U: np.ndarray
    b: np.ndarray


def dunkl_endomorphisms(rs: RootSystemData, kappa: MultiplicityParam, p) -> DunklEndomorphisms:
    """(u_alpha for alpha > 0, U_p, b_p); p in simple-coroot coordinates."""
    return DunklEndomorphisms(
        u=[u_matrix(rs, i, kappa) for i in range(len(rs.positive_roots))],
        U=U_matrix(rs, p, kappa),
        b=b_matrix(rs, p, kappa),
    )


# ---------------------------------------------------------------------------
# Exact flatness conditions


@dataclass
class ConditionResult:
    holds: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness}


@dataclass
class ConditionReport:
    family: str
    rank: int
    kappa: MultiplicityParam
    conditions: dict = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.conditions.values())

    def to_json(self) -> dict:
        return {name: c.to_json() for name, c in self.conditions.items()}


def _commutator(x, y):
    return x @ y - y @ x


class _FlatnessTables:
    """kappa-independent pieces of the flatness conditions for one root system.

    All tables are integer matrices.  Scales: U_p = -1/2 (k Ut1_p + k' Ut2_p),
    b_p = k' Bt_p / bscale, G = Gt / gscale, p (x) a_q - q (x) a_p = a Wt / wscale.
    """

    def __init__(self, rs: RootSystemData):
        self.rs = rs
        n = rs.rank
        count = len(rs.positive_roots)
        self.P = np.stack([projector(rs, i) for i in range(count)])
        second = np.array([t == "second" for t in rs.orbit_tags])
        if rs.family == "A":
            second[:] = False
        coeffs = rs.coefficients
        first = ~second

        # (1): [sum_{alpha in L} k_alpha P_alpha, P_beta] split by orbit.
        items, c1, c2 = [], [], []
        zero = np.zeros((n, n), np.int64)
        for members in rank2_positive_subsystems(rs):
            idx = np.array(members)
            s1 = self.P[idx[first[idx]]].sum(axis=0) if np.any(first[idx]) else zero
            s2 = self.P[idx[second[idx]]].sum(axis=0) if np.any(second[idx]) else zero
            for beta in members:
                items.append((members, beta))
                c1.append(_commutator(s1, self.P[beta]))
                c2.append(_commutator(s2, self.P[beta]))
        self.cond1_items = items
        self.cond1 = (np.stack(c1), np.stack(c2))

        self.Ut1 = np.einsum("am,aij->mij", coeffs * first[:, None], self.P)
        self.Ut2 = np.einsum("am,aij->mij", coeffs * second[:, None], self.P)

        # (2): P_alpha^T G - G P_alpha.
        gt, self.gscale = exact.integerize(rs.coroot_gram)
        gt = gt.astype(np.int64)
        sym = np.einsum("aji,jk->aik", self.P, gt) - np.einsum("ij,ajk->aik", gt, self.P)
        self.cond2_zero = [not np.any(sym[a]) for a in range(count)]

        # (4a): [P_alpha, Ut_p] for alpha(p) = 0.
        items, x1, x2 = [], [], []
        for m in range(n):
            for a in np.flatnonzero(coeffs[:, m] == 0):
                items.append((m, int(a)))
                x1.append(_commutator(self.P[a], self.Ut1[m]))
                x2.append(_commutator(self.P[a], self.Ut2[m]))
        self.cond4_items = items
        self.cond4a = (np.stack(x1), np.stack(x2)) if items else None

        self.has_b = rs.family == "A"
        if self.has_b:
            aprime, den = exact.integerize(_alpha_prime(rs.family, rs.rank))
            aprime = aprime.astype(np.int64)
            self.bscale = 2 * den
            self.Bt = np.einsum("am,ai,aj->mij", coeffs, aprime, rs.root_rows)
            self.cond4b_zero = [not np.any(_commutator(self.P[a], self.Bt[m]))
                                for m, a in self.cond4_items]
            # (3): T[i, j, l] proportional to a(b(e_i, e_j), e_l)
            tensor = np.einsum("ai,aj,al->ijl", rs.root_rows, rs.root_rows, aprime @ gt)
            self.cond3_sym = all(not np.any(tensor - tensor.transpose(perm))
                                 for perm in [(1, 0, 2), (0, 2, 1), (2, 1, 0)])
        else:
            self.bscale = 1
            self.Bt = np.zeros((n, n, n), np.int64)

        # (5a)/(5b) pair tables, integer with Python ints to rule out overflow.
        cw, self.wscale = exact.integerize(rs.coweight_coords)
        cw = cw.astype(object)
        gt_obj = gt.astype(object)
        Ut1, Ut2, Bt = (x.astype(object) for x in (self.Ut1, self.Ut2, self.Bt))
        self.wscale = self.wscale ** 2 * self.gscale
        self.pairs = []
        for p in range(n):
            for q in range(p + 1, n):
                self.pairs.append((p, q, {
                    "kk": _commutator(Ut1[p], Ut1[q]),
                    "kkp": _commutator(Ut1[p], Ut2[q]) + _commutator(Ut2[p], Ut1[q]),
                    "kpkp": _commutator(Ut2[p], Ut2[q]),
                    "bb": _commutator(Bt[p], Bt[q]),
                    "W": np.outer(cw[p], gt_obj @ cw[q]) - np.outer(cw[q], gt_obj @ cw[p]),
                    "5a_k": _commutator(Ut1[p], Bt[q]) - _commutator(Ut1[q], Bt[p]),
                    "5a_kp": _commutator(Ut2[p], Bt[q]) - _commutator(Ut2[q], Bt[p]),
                }))


@lru_cache(maxsize=None)
def _tables(family: str, rank: int) -> _FlatnessTables:
    return _FlatnessTables(build(family, rank))


def _root_label(rs: RootSystemData, index: int) -> list[int]:
    return [int(c) for c in rs.coefficients[index]]


def _nonzero_items(stacks, k: Fraction, kp: Fraction) -> np.ndarray:
    """Indices where k*A + k'*B is nonzero, for integer stacks (A, B), exactly."""
    stack_k, stack_kp = stacks
    den = exact.common_denominator([k, kp])
    values = int(k * den) * stack_k + int(kp * den) * stack_kp
    return np.flatnonzero(np.any(values.reshape(len(values), -1) != 0, axis=1))


def flatness_conditions_check(rs: RootSystemData, kappa: MultiplicityParam,
                              a_coeff=None) -> ConditionReport:
    """Evaluate the five algebraic flatness conditions exactly at rational kappa.

    ``a_coeff`` overrides the scalar of a(u, v) = c (u, v) (negative controls).
    """
    kappa.validate(rs)
    tab = _tables(rs.family, rs.rank)
    k, kp = kappa.k, kappa.k_prime
    weights = root_weights(rs, kappa)
    a = a_form(rs, kappa) if a_coeff is None else Fraction(a_coeff)
    report = ConditionReport(rs.family, rs.rank, kappa)

    # (1) the terms of sum_{R cap L} u_alpha commute with the sum
    witness = None
    for idx in _nonzero_items(tab.cond1, k, kp):
        members, beta = tab.cond1_items[idx]
        if weights[beta] != 0:
            witness = {"subsystem": [_root_label(rs, m) for m in members],
                       "root": _root_label(rs, beta)}
            break
    report.conditions["1"] = ConditionResult(witness is None, witness)

    # (2) u_alpha self-adjoint for a
    witness = None
    for idx, zero in enumerate(tab.cond2_zero):
        if not zero and weights[idx] * a != 0:
            witness = {"root": _root_label(rs, idx)}
            break
    report.conditions["2"] = ConditionResult(witness is None, witness)

    # (3) a(b(z1, z2), z3) symmetric
    holds3 = (not tab.has_b) or a * kp == 0 or tab.cond3_sym
    report.conditions["3"] = ConditionResult(holds3, None if holds3 else {"tensor": "a(b(.,.),.)"})

    # (4a) [u_alpha, U_p] = 0 when alpha(p) = 0
    witness = None
    if tab.cond4a is not None:
        for idx in _nonzero_items(tab.cond4a, k, kp):
            m, alpha = tab.cond4_items[idx]
            if weights[alpha] != 0:
                witness = {"coweight": m + 1, "root": _root_label(rs, alpha)}
                break
    report.conditions["4a"] = ConditionResult(witness is None, witness)

    # (4b) [u_alpha, b_p] = 0 when alpha(p) = 0
    witness = None
    if tab.has_b and kp != 0:
        for (m, alpha), zero in zip(tab.cond4_items, tab.cond4b_zero):
            if not zero and weights[alpha] != 0:
                witness = {"coweight": m + 1, "root": _root_label(rs, alpha)}
                break
    report.conditions["4b"] = ConditionResult(witness is None, witness)

    # (5a) [U_p, b_q] = [U_q, b_p];  (5b) [U_p,U_q] + [b_p,b_q] = p (x) a_q - q (x) a_p
    # With k = ki/D, k' = kpi/D, (5b) times 4 bscale^2 D^2 becomes an integer identity.
    den = exact.common_denominator([k, kp])
    ki, kpi = int(k * den), int(kp * den)
    bs = tab.bscale
    rhs_scale = a.numerator * 4 * bs * bs * den * den
    witness_a = witness_b = None
    for p, q, entry in tab.pairs:
        if tab.has_b and kpi and witness_a is None:
            if np.any(ki * entry["5a_k"] + kpi * entry["5a_kp"]):
                witness_a = {"coweights": [p + 1, q + 1]}
        if witness_b is None:
            lhs = bs * bs * (ki * ki * entry["kk"] + ki * kpi * entry["kkp"]
                             + kpi * kpi * entry["kpkp"]) + 4 * kpi * kpi * entry["bb"]
            if np.any(lhs * (tab.wscale * a.denominator) - entry["W"] * rhs_scale):
                witness_b = {"coweights": [p + 1, q + 1]}
    report.conditions["5a"] = ConditionResult(witness_a is None, witness_a)
    report.conditions["5b"] = ConditionResult(witness_b is None, witness_b)
    return report


# ---------------------------------------------------------------------------
# Numeric evaluation at points of the torus


def _point_values(rs: RootSystemData, point) -> tuple[np.ndarray, np.ndarray]:
    """(log coordinates w_i, e^alpha for positive roots); rejects points near mirrors."""
    z = np.asarray(point, dtype=complex).reshape(rs.rank)
    if np.any(z == 0):
        raise SingularPoint("torus coordinates must be nonzero")
    logs = np.log(z)
    ealpha = np.exp(rs.coefficients.astype(float) @ logs)
    near = np.flatnonzero(np.abs(ealpha - 1) < REGULARITY_MARGIN)
    if len(near):
        raise SingularPoint(f"point lies on the mirror of root {_root_label(rs, int(near[0]))}")
    return logs, ealpha


def random_regular_point(rs: RootSystemData, rng: np.random.Generator) -> np.ndarray:
    while True:
        z = np.exp(rng.uniform(-0.7, 0.7, rs.rank) + 1j * rng.uniform(-math.pi, math.pi, rs.rank))
        try:
            _point_values(rs, z)
        except SingularPoint:
            continue
        return z


def _float(x) -> float:
    return float(x)


def christoffel(rs: RootSystemData, kappa: MultiplicityParam, point, *, a_coeff=None,
                mixed_sign: int = -1, with_derivative: bool = False):
    """Coefficients G[k, i, j] of the extended connection at a point.

    Coordinates are z^i = alpha_i (i < n) and z^n = log t, so the index n is the
    t d/dt direction.  ``mixed_sign`` is the coefficient of zeta (x) dt/t.
    With ``with_derivative`` also returns dG[l, k, i, j] = d_l G[k, i, j].
    """
    kappa.validate(rs)
    n = rs.rank
    _, ealpha = _point_values(rs, point)
    coeffs = rs.coefficients.astype(float)
    weights = np.array([_float(w) for w in root_weights(rs, kappa)])
    pair_k = (rs.coroot_coords @ rs.cartan).astype(float)  # alpha_k(alpha_vee)
    f = (ealpha + 1) / (ealpha - 1)
    fprime = -2 * ealpha / (ealpha - 1) ** 2

    a = a_form(rs, kappa) if a_coeff is None else Fraction(a_coeff)
    c_kappa = _float(a / gamma_r(rs.family, rs.rank))

    gamma = np.zeros((n + 1, n + 1, n + 1), dtype=complex)
    gamma[:n, :n, :n] = 0.5 * np.einsum("a,a,ai,aj,ak->kij", weights, f, coeffs, coeffs, pair_k)
    if rs.family == "A" and kappa.k_prime != 0:
        aprime = np.array([[_float(dot(rs.simple_roots[kk], _ambient_alpha_prime(root, n)))
                            for kk in range(n)] for root in rs.positive_roots])
        gamma[:n, :n, :n] += 0.5 * _float(kappa.k_prime) * np.einsum(
            "ai,aj,ak->kij", coeffs, coeffs, aprime)
    gamma[n, :n, :n] = c_kappa * coeffs.T @ coeffs
    for kk in range(n):
        gamma[kk, kk, n] = mixed_sign
        gamma[kk, n, kk] = -1
    gamma[n, n, n] = -1
    if not with_derivative:
        return gamma
    dgamma = np.zeros((n + 1,) * 4, dtype=complex)
    dgamma[:n, :n, :n, :n] = 0.5 * np.einsum("a,a,al,ai,aj,ak->lkij", weights, fprime,
                                             coeffs, coeffs, coeffs, pair_k)
    return gamma, dgamma


def _ambient_alpha_prime(root, n: int) -> tuple:
    shift = Fraction(2, n + 1)
    return tuple(Fraction(1) - shift if x != 0 else -shift for x in root)


def _curvature(gamma: np.ndarray, dgamma: np.ndarray) -> np.ndarray:
    """R[k, l, i, j] = d_i G^k_lj - d_j G^k_li + G^k_mi G^m_lj - G^k_mj G^m_li."""
    deriv = np.einsum("iklj->klij", dgamma)
    quad = np.einsum("kmi,mlj->klij", gamma, gamma)
    return deriv - deriv.transpose(0, 1, 3, 2) + quad - quad.transpose(0, 1, 3, 2)


def curvature_check(rs: RootSystemData, kappa: MultiplicityParam, point, t=1.0, *,
                    a_coeff=None) -> float:
    """Max |entry| of the curvature of the extended connection at (point, t).

    The coefficients do not depend on t (only dt/t occurs); t is validated only.
    """
    if t == 0:
        raise SingularPoint("t must be nonzero")
    gamma, dgamma = christoffel(rs, kappa, point, a_coeff=a_coeff, with_derivative=True)
    return float(np.max(np.abs(_curvature(gamma, dgamma))))


def projective_curvature_residual(rs: RootSystemData, kappa: MultiplicityParam, point, *,
                                  a_coeff=None) -> float:
    """Residual of nabla nabla (zeta) = -zeta ^ A for the connection on the torus alone.

    With the component formula used in :func:`_curvature` (ordered index pairs,
    connection acting on 1-forms) the identity reads
    R^k_lij = delta^k_i A_jl - delta^k_j A_il; the maximum violation is returned.
    """
    n = rs.rank
    gamma, dgamma = christoffel(rs, kappa, point, a_coeff=a_coeff, with_derivative=True)
    curv = _curvature(gamma[:n, :n, :n], dgamma[:n, :n, :n, :n])
    amat = gamma[n, :n, :n]
    delta = np.eye(n)
    target = np.einsum("ki,jl->klij", delta, amat) - np.einsum("kj,il->klij", delta, amat)
    return float(np.max(np.abs(curv - target)))


def wronskian_check(rs: RootSystemData, kappa: MultiplicityParam, point, direction,
                    step: float = 1e-6) -> float:
    """Relative error between a central difference of log J and its closed form."""
    logs, ealpha = _point_values(rs, point)
    coeffs = rs.coefficients.astype(float)
    weights = np.array([_float(w) for w in root_weights(rs, kappa)])
    xi = np.asarray(direction, dtype=complex).reshape(rs.rank)
    alpha_x = coeffs @ logs
    alpha_xi = rs.root_rows.astype(float) @ xi
    closed = -np.sum(weights * (ealpha + 1) / (ealpha - 1) * alpha_xi)

    def factor(s):
        return np.exp((alpha_x + s * alpha_xi) / 2) - np.exp(-(alpha_x + s * alpha_xi) / 2)

    ratio = factor(step) / factor(-step)
    numeric = np.sum(-2 * weights * np.log(ratio)) / (2 * step)
    scale = max(abs(closed), 1e-300)
    if closed == 0:
        return float(abs(numeric))
    return float(abs(numeric - closed) / scale)


def dilatation_check(rs: RootSystemData, kappa: MultiplicityParam, point, t=1.0, *,
                     mixed_sign: int = -1, tol: float = 1e-12) -> bool:
    """Check nabla_v(t d/dt) = v on the coordinate basis, using the dual connection."""
    if t == 0:
        raise SingularPoint("t must be nonzero")
    gamma = christoffel(rs, kappa, point, mixed_sign=mixed_sign)
    n = rs.rank
    for i in range(n + 1):
        image = -gamma[:, i, n]  # sum_k of -G^k_{i,n} e_k
        target = np.zeros(n + 1)
        target[i] = 1
        if np.max(np.abs(image - target)) > tol:
            return False
    return True


def log_wronskian(rs: RootSystemData, kappa: MultiplicityParam, point) -> complex:
    logs, _ = _point_values(rs, point)
    alpha_x = rs.coefficients.astype(float) @ logs
    weights = np.array([_float(w) for w in root_weights(rs, kappa)])
    return complex(np.sum(-2 * weights * np.log(2 * np.sinh(alpha_x / 2))))


__all__ = [
    "MultiplicityParam", "ConnectionData", "ConditionReport", "ConditionResult",
    "DunklEndomorphisms", "a_form", "gamma_r", "connection_data", "b_map", "root_weights",
    "u_matrix", "U_matrix", "b_matrix", "a_matrix", "projector", "dunkl_endomorphisms",
    "flatness_conditions_check", "christoffel", "curvature_check",
    "projective_curvature_residual", "wronskian_check", "dilatation_check",
    "random_regular_point", "log_wronskian",
]
