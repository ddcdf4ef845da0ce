"""Relative exponents, Schwarz conditions and the ball-quotient parameter search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .connection import MultiplicityParam, root_weights
from .errors import DomainViolation
from .hermitian import in_hyperbolic_region
from .polys import K, KP, ScalarPoly, linform
from .rootsystem import RootSystemData, build

HALF = Fraction(1, 2)
DEFAULT_BOUND = 100


@dataclass(frozen=True)
class ExponentRecord:
    toric: tuple
    mirror: tuple
    identity: object

    def values(self) -> list:
        return [*self.toric, *self.mirror, self.identity]

    def evaluate(self, kappa: MultiplicityParam) -> ExponentRecord:
        ev = lambda form: form(kappa.k, kappa.k_prime)  # noqa: E731
        return ExponentRecord(tuple(map(ev, self.toric)), tuple(map(ev, self.mirror)), ev(self.identity))

    def to_json(self) -> dict:
        enc = lambda v: v.to_json() if isinstance(v, ScalarPoly) else str(v)  # noqa: E731
        return {"toric": [enc(v) for v in self.toric], "mirror": [enc(v) for v in self.mirror],
                "identity": enc(self.identity)}


def exponent_forms(rs: RootSystemData) -> ExponentRecord:
    """Relative exponents of toric strata, mirrors and the identity element as linear forms."""
    n, fam = rs.rank, rs.family
    mirror_k = HALF - K
    mirror_kp = HALF - KP
    if fam == "A":
        return ExponentRecord(
            (Fraction(n - 1, 2) * K - Fraction(n + 1, 2) * KP, Fraction(n - 1, 2) * K + Fraction(n + 1, 2) * KP),
            (mirror_k,), ((n + 1) * K - 1) / 2)
    if fam == "B":
        return ExponentRecord(((n - 3) * K + KP, 2 * K - KP), (mirror_k, mirror_kp),
                              (2 * (n - 1) * K + 2 * KP - 1) / 2)
    if fam == "C":
        return ExponentRecord(((n - 3) * K + 2 * KP, K - KP), (mirror_k, mirror_kp),
                              (2 * (n - 1) * K + 2 * KP - 1) / 2)
    if fam == "D":
        return ExponentRecord(((n - 3) * K, K), (mirror_k,), (2 * (n - 1) * K - 1) / 2)
    if fam == "E":
        return ExponentRecord((K, 2 * K, (n - 4) * K), (mirror_k,), (rs.coxeter_number * K - 1) / 2)
    if fam == "F":
        return ExponentRecord((KP, 2 * K), (mirror_k, mirror_kp), (6 * (K + KP) - 1) / 2)
    return ExponentRecord((-K / 2 + Fraction(3, 2) * KP, K / 2 - KP / 2), (mirror_k, mirror_kp),
                          (3 * (K + KP) - 1) / 2)


def identity_exponent(rs: RootSystemData) -> ScalarPoly:
    """(1/n) sum_{alpha>0} k_alpha - 1/2, summed root by root."""
    total = sum(root_weights(rs, MultiplicityParam.symbolic()), linform())
    return total / rs.rank - HALF


def relative_exponents(rs: RootSystemData, kappa: MultiplicityParam) -> ExponentRecord:
    return exponent_forms(rs).evaluate(kappa)


def is_unit_fraction(value: Fraction) -> bool:
    return value > 0 and value.numerator == 1


def schwarz_satisfied(rs: RootSystemData, kappa: MultiplicityParam) -> tuple[bool, list]:
    """True iff every strictly positive relative exponent lies in {1/m : m >= 1}."""
    detail = []
    for value in relative_exponents(rs, kappa).values():
        ok = value <= 0 or is_unit_fraction(value)
        detail.append({"value": value, "constrained": value > 0, "ok": ok})
    return all(d["ok"] for d in detail), detail


@dataclass(frozen=True)
class BallQuotientEntry:
    family: str
    rank: int
    k: Fraction
    p: int
    kp: Fraction | None = None
    p_prime: int | None = None

    @property
    def kappa(self) -> MultiplicityParam:
        return MultiplicityParam(self.k, self.kp or 0)

    def sort_key(self):
        return (self.p, self.kp if self.kp is not None else 0)

    def to_json(self) -> dict:
        out = {"family": self.family, "rank": self.rank, "k": str(self.k), "p": self.p}
        if self.kp is not None:
            out["kp"] = str(self.kp)
        if self.p_prime is not None:
            out["p_prime"] = self.p_prime
        return out


def _a_type_kprime_candidates(n: int, k: Fraction) -> set[Fraction]:
    """k' solving the toric unit-fraction conditions with e_(+/-) = (n-1)k/2 +/- (n+1)k'/2."""
    total = (n - 1) * k
    scale = Fraction(2, n + 1)
    out = set()
    if total <= 0:
        return out
    # both exponents positive: 1/q1 + 1/q2 = total with total/2 <= 1/q1 < total
    for q1 in range(math.floor(1 / total) + 1, math.floor(2 / total) + 1):
        u = Fraction(1, q1)
        if is_unit_fraction(total - u):
            out.update({(u - total / 2) * scale, -(u - total / 2) * scale})
    # one exponent 1/q >= total, the other <= 0
    q = 1
    while Fraction(1, q) >= total:
        shift = (Fraction(1, q) - total / 2) * scale
        out.update({shift, -shift})
        q += 1
    return out


def _integer_forms(rs: RootSystemData) -> tuple[int, list]:
    """Exponent forms scaled by a common denominator D to integer triples (const, k, kp)."""
    coeffs = [f.linear_coeffs() for f in exponent_forms(rs).values()]
    den = math.lcm(*(c.denominator for triple in coeffs for c in triple))
    return den, [tuple(int(c * den) for c in triple) for triple in coeffs]


def _schwarz_pq(den: int, forms: list, p: int, pp: int) -> bool:
    """Schwarz test at k = 1/2 - 1/p, k' = 1/2 - 1/pp in integer arithmetic.

    With k = (p-2)/(2p) each exponent equals N/M, M = 2 den p pp; N/M is in 1/N iff N > 0 divides M.
    """
    total = 2 * den * p * pp
    for c0, ck, ckp in forms:
        num = 2 * p * pp * c0 + ck * (p - 2) * pp + ckp * (pp - 2) * p
        if num > 0 and total % num:
            return False
    return True


def enumerate_ball_quotients(family: str, rank: int, bound: int = DEFAULT_BOUND
                             ) -> list[BallQuotientEntry]:
    """All (k, k') with k = 1/2 - 1/p (p >= 3) in K'_hyp satisfying the Schwarz conditions.

    For B, C, F, G both p and p' are scanned up to ``bound``; for A the admissible k' are
    solved exactly from the toric conditions.
    """
    rs = build(family, rank)
    fam = rs.family
    den, forms = _integer_forms(rs)
    found = []
    for p in range(3, bound + 1):
        k = HALF - Fraction(1, p)
        if fam == "A":
            cands = [(kp, None) for kp in _a_type_kprime_candidates(rank, k)]
            cands = [(kp, pp) for kp, pp in cands if schwarz_satisfied(rs, MultiplicityParam(k, kp))[0]]
        elif fam in "DE":
            cands = [(None, None)] if _schwarz_pq(den, forms, p, 2) else []
        else:
            cands = [(HALF - Fraction(1, pp), pp) for pp in range(3, bound + 1)
                     if _schwarz_pq(den, forms, p, pp)]
        for kp, pp in cands:
            if in_hyperbolic_region(rs, MultiplicityParam(k, kp or 0)):
                found.append(BallQuotientEntry(fam, rank, k, p, kp, pp))
    return sorted(found, key=BallQuotientEntry.sort_key)


# Printed ball-quotient list: A maps p -> nonnegative k' (each nonzero value stands for +/-),
# B/C/F/G map p -> p', D/E list the values of k.
REFERENCE_TABLE3 = {
    ("A", 2): {3: ["0", "1/90", "1/54", "1/36", "5/126", "1/18", "7/90", "1/9"],
               4: ["0", "1/36", "1/20", "1/12", "5/36"], 5: ["1/30", "1/15", "11/90", "7/30"],
               6: ["0", "1/18", "1/9", "2/9"], 7: ["13/126", "3/14"], 8: ["1/24", "7/72", "5/24"],
               9: ["5/54", "11/54"], 10: ["0", "4/45", "1/5"], 12: ["1/36", "1/12", "7/36"],
               14: ["4/21"], 18: ["2/27", "5/27"], 30: ["8/45"]},
    ("A", 3): {3: ["0", "1/24", "1/12"], 4: ["0", "1/24", "1/8"], 5: ["1/10"], 6: ["0", "1/12"],
               8: ["1/16"], 12: ["1/24"]},
    ("A", 4): {3: ["0", "1/30", "1/10"], 4: ["1/20"], 6: ["0"]},
    ("A", 5): {3: ["0", "1/18"], 4: ["0"]},
    ("A", 6): {3: ["1/42"]},
    ("A", 7): {3: ["0"]},
    ("A", 9): {3: ["1/15"]},
    ("B", 2): {3: [3, 4, 6, 12], 4: [3, 4, 5, 6, 8, 12, 20], 5: [10], 6: [3, 6, 12], 8: [4], 9: [18],
               10: [5], 12: [6], 18: [9]},
    ("B", 3): {3: [3, 4, 6], 4: [3, 4, 6], 6: [3, 6], 8: [4]},
    ("B", 4): {3: [3, 6], 4: [4]},
    ("B", 5): {3: [3]},
    ("C", 2): {3: [3, 4, 6], 4: [3, 4, 8], 5: [4, 10], 6: [3, 4, 6, 12], 8: [4], 9: [18], 10: [5],
               12: [3, 4, 6], 18: [9], 20: [4]},
    ("C", 3): {3: [3, 4], 4: [3, 4], 6: [3], 8: [4], 12: [3]},
    ("C", 4): {3: [3]},
    ("C", 5): {3: [6]},
    ("D", 4): ["1/6", "1/4", "1/2"],
    ("D", 5): ["1/6", "1/4"],
    ("D", 6): ["1/6"],
    ("E", 6): ["1/6", "1/4"],
    ("E", 7): ["1/6"],
    ("F", 4): {3: [3, 6], 4: [4]},
    ("G", 2): {3: [3, 9], 4: [3, 4, 12], 5: [3], 6: [3, 6], 9: [3], 12: [4]},
}

KNOWN_DISCREPANCIES = {("D", 4)}


def reference_set(family: str, rank: int) -> set:
    """Printed parameters as a set of (k, k') pairs; types absent from the table give the empty set."""
    data = REFERENCE_TABLE3.get((family, rank))
    if data is None:
        return set()
    if family in "DE":
        return {(Fraction(k), Fraction(0)) for k in data}
    out = set()
    for p, values in data.items():
        k = HALF - Fraction(1, p)
        for v in values:
            if family == "A":
                out.update({(k, Fraction(v)), (k, -Fraction(v))})
            else:
                out.add((k, HALF - Fraction(1, v)))
    return out


def computed_set(entries) -> set:
    return {(e.k, e.kp if e.kp is not None else Fraction(0)) for e in entries}


def compare_with_reference(family: str, rank: int, bound: int = DEFAULT_BOUND) -> dict:
    """Status 'match', 'known_discrepancy' or 'mismatch' for one (family, rank) cell."""
    got = computed_set(enumerate_ball_quotients(family, rank, bound))
    want = reference_set(family, rank)
    if got == want:
        status = "match"
    elif (family, rank) in KNOWN_DISCREPANCIES:
        status = "known_discrepancy"
    else:
        status = "mismatch"
    return {"family": family, "rank": rank, "status": status,
            "missing": sorted(want - got), "extra": sorted(got - want)}


def completeness_guard(family: str, rank: int, bound: int = DEFAULT_BOUND) -> bool:
    """Doubling the p (and p') scan bound adds no entries."""
    return (computed_set(enumerate_ball_quotients(family, rank, 2 * bound))
            == computed_set(enumerate_ball_quotients(family, rank, bound)))


def _in_dual(value: Fraction, numerator: int) -> bool:
    """value in numerator/N, i.e. numerator/value is a positive integer."""
    return value > 0 and (numerator / value).denominator == 1


def deligne_mostow_check(rank: int, k) -> dict:
    """Compare the type-A exponents with the half-integrality data of mu = (mu_0, k, ..., k, mu_0)."""
    n, k = rank, Fraction(k)
    mu0 = (2 - (n + 1) * k) / 2
    mu = [mu0] + [k] * (n + 1) + [mu0]
    if not all(0 < m < 1 for m in mu):
        raise DomainViolation(f"mu = {[str(m) for m in mu]} not in (0, 1)")
    identities = {
        "toric": Fraction(n - 1, 2) * k == 1 - mu[0] - mu[1],
        "mirror": (1 - 2 * k) / 2 == (1 - mu[1] - mu[n + 1]) / 2,
        "identity": ((n + 1) * k - 1) / 2 == (1 - mu[0] - mu[n + 2]) / 2,
    }
    half_integral = True
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            if mu[i] + mu[j] < 1:
                ok = _in_dual(1 - mu[i] - mu[j], 1 if mu[i] != mu[j] else 2)
                half_integral = half_integral and ok
    return {"mu": mu, "sum": sum(mu), "identities": identities,
            "identities_hold": all(identities.values()), "half_integral": half_integral}


def extremal_nodes(rs: RootSystemData) -> list[int]:
    """End nodes (degree one) of the Dynkin diagram, numbered from 1."""
    cartan = rs.cartan
    return [i + 1 for i in range(rs.rank)
            if sum(1 for j in range(rs.rank) if j != i and cartan[i][j] != 0) == 1]


def table2_cross_check(rs: RootSystemData) -> dict:
    """Match each toric exponent with an eigenvalue gap at an end node, and recompute the identity entry."""
    from .residues import boundary_spectrum

    gaps = {}
    for m in extremal_nodes(rs):
        eig = [lam for lam, _ in boundary_spectrum(rs, m).eigenvalues]
        gaps[m] = eig[0] - eig[1] if len(eig) == 2 else linform()
    forms = exponent_forms(rs)
    toric = []
    for form in forms.toric:
        node = next((m for m, gap in gaps.items() if gap == form or gap == -form), None)
        toric.append({"form": form, "node": node})
    identity_ok = identity_exponent(rs) == forms.identity
    return {"toric": toric, "identity_matches": identity_ok,
            "holds": identity_ok and all(t["node"] is not None for t in toric)}
