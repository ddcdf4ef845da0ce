"""Residues of the extended connection and their spectra.

Endomorphisms of h + C are (n+1)x(n+1) matrices in the basis
(alpha_1^vee, ..., alpha_n^vee, t d/dt).  Spectra along toric boundary divisors
are found exactly at a few rational parameters and interpolated to linear
forms in (k, k').
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact
from .connection import MultiplicityParam, U_matrix, a_form, b_matrix, projector, root_weights
from .errors import InvalidFamily, SpectralInconsistency
from .polys import ScalarPoly, linform
from .rootsystem import RootSystemData

SAMPLES = ((Fraction(1, 5), Fraction(1, 7)), (Fraction(1, 3), Fraction(1, 11)),
           (Fraction(2, 7), Fraction(1, 13)))
VERIFY_SAMPLE = (Fraction(3, 11), Fraction(2, 15))
# used only when a preferred sample makes two eigenvalue forms coincide
FALLBACK_SAMPLES = ((Fraction(3, 13), Fraction(1, 17)), (Fraction(5, 19), Fraction(2, 23)),
                    (Fraction(4, 17), Fraction(1, 19)), (Fraction(7, 29), Fraction(3, 31)))


@dataclass(frozen=True)
class Divisor:
    kind: str  # "mirror", "boundary", "t=0", "t=inf"
    label: tuple = ()

    def to_json(self):
        return {"kind": self.kind, "label": list(self.label)}


@dataclass
class ResidueSpectrum:
    divisor: Divisor
    eigenvalues: list  # [(ScalarPoly linear form, multiplicity)]
    phi: ScalarPoly | None = None
    app: ScalarPoly | None = None

    def as_set(self) -> set:
        return set(self.eigenvalues)

    def to_json(self) -> dict:
        out = {
            "divisor": self.divisor.to_json(),
            "eigenvalues": [{"value": lam.to_json(), "multiplicity": m}
                            for lam, m in self.eigenvalues],
        }
        if self.phi is not None:
            out["phi"] = self.phi.to_json()
            out["a_pp"] = {f"k^{i}*kp^{j}": str(c) for (i, j), c in sorted(self.app.terms.items())}
        return out


def _coweight(rs: RootSystemData, m: int) -> np.ndarray:
    if not 1 <= m <= rs.rank:
        raise ValueError(f"coweight index {m} out of range 1..{rs.rank}")
    return rs.coweight_coords[m - 1]


def boundary_residue_matrix(rs: RootSystemData, m: int, kappa: MultiplicityParam) -> np.ndarray:
    """sigma = U_p + b_p + t d/dt (x) a_p - p (x) dt/t for p the m-th fundamental coweight."""
    kappa.validate(rs)
    n = rs.rank
    p = _coweight(rs, m)
    block = U_matrix(rs, p, kappa) + b_matrix(rs, p, kappa)
    a = a_form(rs, kappa)
    sigma = exact.zeros((n + 1, n + 1))
    sigma[:n, :n] = block
    sigma[:n, n] = -p
    sigma[n, :n] = (rs.coroot_gram @ p) * a
    return sigma


def t_residue(rs: RootSystemData, at: str) -> np.ndarray:
    """Residue at t = 0 ('0') is -Id, at t = infinity ('inf') +Id."""
    sign = {"0": -1, "inf": 1}[at]
    return exact.identity(rs.rank + 1) * sign


def mirror_residue_matrix(rs: RootSystemData, alpha, kappa: MultiplicityParam) -> np.ndarray:
    index, _ = rs.root_index(alpha)
    n = rs.rank
    out = exact.zeros((n + 1, n + 1))
    out[:n, :n] = np.array(projector(rs, index).tolist(), dtype=object) * root_weights(rs, kappa)[index]
    return out


def _merge(pairs) -> list:
    merged: dict = {}
    for lam, mult in pairs:
        merged[lam] = merged.get(lam, 0) + mult
    return sorted(merged.items(), key=lambda item: (item[1], str(item[0])))


def mirror_spectrum(rs: RootSystemData, alpha, kappa: MultiplicityParam) -> ResidueSpectrum:
    """Spectrum of u_alpha on h + C: {2 k_alpha : 1, 0 : n}; raises InvalidRoot for non-roots."""
    index, _ = rs.root_index(alpha)
    k_alpha = root_weights(rs, kappa)[index]
    n = rs.rank
    shape = exact.zeros((n + 1, n + 1))
    shape[:n, :n] = np.array(projector(rs, index).tolist(), dtype=object)
    pairs = [(_as_poly(lam * k_alpha), mult) for lam, mult in exact.eigenvalues(shape).items()]
    return ResidueSpectrum(Divisor("mirror", tuple(int(c) for c in rs.coefficients[index])),
                           _merge(pairs))


def _as_poly(value) -> ScalarPoly:
    return value if isinstance(value, ScalarPoly) else ScalarPoly.const(value)


def _sample_points(rs: RootSystemData, fallback: bool = False):
    points = SAMPLES + (VERIFY_SAMPLE,) + (FALLBACK_SAMPLES if fallback else ())
    if rs.family in "DE":
        return [(k, Fraction(0)) for k, _ in points]
    return list(points)


def _solve_forms(points, values, two_param: bool) -> ScalarPoly:
    if two_param:
        mat = exact.fraction_array([[1, k, kp] for k, kp in points[:3]])
        c = exact.inverse(mat) @ exact.fraction_array(values[:3])
        return linform(c[0], c[1], c[2])
    (k1, _), (k2, _) = points[:2]
    slope = (values[1] - values[0]) / (k2 - k1)
    return linform(values[0] - slope * k1, slope, 0)


def _interpolate(points, spectra, two_param: bool) -> list:
    """Match eigenvalues across samples into linear forms, verified at every sample.

    Forms are fitted through the samples with the most distinct eigenvalues, so a
    sample where two forms happen to coincide only takes part in verification.
    """
    needed = 3 if two_param else 2
    most = max(len(spec) for spec in spectra)
    generic = [i for i, spec in enumerate(spectra) if len(spec) == most]
    if len(generic) <= needed:
        raise SpectralInconsistency("too few generic samples to interpolate")
    g_points = [points[i] for i in generic]
    g_spectra = [spectra[i] for i in generic]
    options = []
    for lam, mult in g_spectra[0].items():
        pools = [[v for v, m in spec.items() if m == mult] for spec in g_spectra[1:needed]]
        forms = []
        for combo in itertools.product(*pools):
            form = _solve_forms(g_points, [lam, *combo], two_param)
            if all(spec.get(form(*pt)) == mult for pt, spec in zip(g_points, g_spectra)):
                forms.append(form)
        options.append((mult, forms))
    for choice in itertools.product(*[forms for _, forms in options]):
        pairs = list(zip(choice, [mult for mult, _ in options]))
        if all(dict(_merge((f(*pt), m) for f, m in pairs)) == spec
               for pt, spec in zip(points, spectra)):
            return _merge(pairs)
    raise SpectralInconsistency("sampled spectra are not linear in (k, k')")


def _sampled_forms(rs: RootSystemData, m: int) -> list:
    def attempt(fallback: bool) -> list:
        points = _sample_points(rs, fallback)
        spectra = [exact.eigenvalues(boundary_residue_matrix(rs, m, MultiplicityParam(k, kp)))
                   for k, kp in points]
        return _interpolate(points, spectra, rs.family not in "DE")

    try:
        return attempt(False)
    except SpectralInconsistency:
        return attempt(True)


def phi_and_app(rs: RootSystemData, m: int) -> tuple[ScalarPoly, ScalarPoly]:
    """phi (eigenvalue of U_p + b_p on C p) and a(p, p), as polynomials."""
    sym = MultiplicityParam.symbolic()
    p = _coweight(rs, m)
    image = (U_matrix(rs, p, sym) + b_matrix(rs, p, sym)) @ p
    i = next(idx for idx, x in enumerate(p) if x != 0)
    phi = _as_poly(image[i]) / p[i]
    for idx, x in enumerate(p):
        if _as_poly(image[idx]) != phi * x:
            raise SpectralInconsistency(f"coweight {m} is not an eigenvector of U_p + b_p")
    app = a_form(rs, sym) * (p @ rs.coroot_gram @ p)
    return phi, app


def boundary_spectrum(rs: RootSystemData, m: int) -> ResidueSpectrum:
    """Eigenvalues of the boundary residue at the m-th coweight as linear forms."""
    eigen = _sampled_forms(rs, m)
    phi, app = phi_and_app(rs, m)
    if len(eigen) > 2:
        raise SpectralInconsistency(f"{len(eigen)} distinct eigenvalues at coweight {m}")
    for lam, _ in eigen:
        if lam * lam - phi * lam + app != 0:
            raise SpectralInconsistency(f"eigenvalue {lam} violates the quadratic relation")
    if len(eigen) == 2:
        (l1, _), (l2, _) = eigen
        if l1 + l2 != phi or l1 * l2 != app:
            raise SpectralInconsistency("eigenvalue sum/product disagree with phi, a(p,p)")
    if sum(mult for _, mult in eigen) != rs.rank + 1:
        raise SpectralInconsistency("multiplicities do not add up to n+1")
    return ResidueSpectrum(Divisor("boundary", (m,)), eigen, phi, app)


def quadratic_identity_residual(rs: RootSystemData, m: int) -> np.ndarray:
    """sigma^2 - phi sigma + a(p,p) Id with polynomial entries; zero when the relation holds."""
    sigma = boundary_residue_matrix(rs, m, MultiplicityParam.symbolic())
    sigma = np.vectorize(_as_poly, otypes=[object])(sigma)
    phi, app = phi_and_app(rs, m)
    return sigma @ sigma - sigma * phi + exact.identity(rs.rank + 1) * app


def quadratic_identity_holds(rs: RootSystemData, m: int) -> bool:
    return all(_as_poly(x).is_zero() for x in quadratic_identity_residual(rs, m).reshape(-1))


def e_table(rs: RootSystemData) -> list[tuple[int, list]]:
    """(node, [(eigenvalue, multiplicity), ...]) for every fundamental coweight of E_n."""
    if rs.family != "E":
        raise InvalidFamily(f"eigenvalue table is defined for type E only, not {rs.name}")
    return [(m, boundary_spectrum(rs, m).eigenvalues) for m in range(1, rs.rank + 1)]


def all_boundary_spectra(rs: RootSystemData) -> list[ResidueSpectrum]:
    return [boundary_spectrum(rs, m) for m in range(1, rs.rank + 1)]
