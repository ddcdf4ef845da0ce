from fractions import Fraction

import numpy as np
import pytest

from mirrorlat import exact
from mirrorlat.connection import MultiplicityParam, U_matrix, a_form, b_matrix
from mirrorlat.errors import InvalidFamily, InvalidRoot
from mirrorlat.polys import K, linform
from mirrorlat.residues import (boundary_residue_matrix, boundary_spectrum, e_table, mirror_residue_matrix,
                                mirror_spectrum, quadratic_identity_holds, t_residue)
from mirrorlat.rootsystem import build, supported_types

F = Fraction


def L(k=0, kp=0, c=0):
    return linform(F(c), F(k), F(kp))


def merged(*pairs):
    out = {}
    for lam, mult in pairs:
        out[lam] = out.get(lam, 0) + mult
    return out


def spectrum_dict(rs, m):
    return dict(boundary_spectrum(rs, m).eigenvalues)


# closed forms per family, with multiplicities where they are printed
def expected_a(n, m):
    return merged((L(-F(n + 1 - m, 2), F(n + 1 - m, 2)), m), (L(-F(m, 2), -F(m, 2)), n + 1 - m))


def expected_b(n, m):
    return merged((L(-(n - 2), -1), m), (L(-m), n + 1 - m))


def expected_c(n, m):
    if m < n:
        return merged((L(-(n - 2), -2), m), (L(-m), n + 1 - m))
    return merged((L(-F(n - 2, 2), -1), n), (L(-F(n, 2)), 1))


def expected_d(n, m):
    if m <= n - 2:
        return merged((L(-(n - 2)), m), (L(-m), n + 1 - m))
    return merged((L(-F(n - 2, 2)), n), (L(-F(n, 2)), 1))


CLASSICAL = {"A": expected_a, "B": expected_b, "C": expected_c, "D": expected_d}


@pytest.mark.parametrize("family,rank", [t for t in supported_types() if t[0] in "ABCD" and t[1] <= 7])
def test_classical_spectra(family, rank):
    rs = build(family, rank)
    for m in range(1, rank + 1):
        assert spectrum_dict(rs, m) == CLASSICAL[family](rank, m), m


def test_f4_spectra():
    rs = build("F", 4)
    for m in (1, 2, 3):
        assert set(spectrum_dict(rs, m)) == {L(-(m + 1), -(m + 1)), L(-2 * m, -m)}
    assert set(spectrum_dict(rs, 4)) == {L(-2, -2), L(-4, -2)}
    assert all(sum(spectrum_dict(rs, m).values()) == 5 for m in range(1, 5))


def test_g2_spectra():
    rs = build("G", 2)
    assert set(spectrum_dict(rs, 1)) == {L(-1, -3), L(-F(3, 2), -F(3, 2))}
    assert set(spectrum_dict(rs, 2)) == {L(-F(1, 2), -F(3, 2)), L(-1, -1)}


# printed eigenvalue table for type E: node -> ((coefficient of k, multiplicity), ...)
TABLE1 = {
    6: {1: ((-4, 1), (-2, 6)), 2: ((-4, 1), (-3, 6)), 3: ((-5, 2), (-4, 5)), 4: ((-6, 7),),
        5: ((-5, 2), (-4, 5)), 6: ((-4, 1), (-2, 6))},
    7: {1: ((-6, 1), (-4, 7)), 2: ((-7, 1), (-6, 7)), 3: ((-9, 2), (-8, 6)), 4: ((-12, 8),),
        5: ((-9, 5), (-10, 3)), 6: ((-6, 6), (-8, 2)), 7: ((-3, 7), (-6, 1))},
    8: {1: ((-12, 1), (-10, 8)), 2: ((-16, 1), (-15, 8)), 3: ((-21, 2), (-20, 7)), 4: ((-30, 9),),
        5: ((-24, 5), (-25, 4)), 6: ((-18, 6), (-20, 3)), 7: ((-12, 7), (-15, 2)),
        8: ((-6, 8), (-10, 1))},
}


@pytest.mark.parametrize("rank", [6, 7, 8])
def test_e_table(rank):
    rows = dict(e_table(build("E", rank)))
    for node, printed in TABLE1[rank].items():
        assert dict(rows[node]) == {L(c): mult for c, mult in printed}, node


def test_e7_node4_app():
    spec = boundary_spectrum(build("E", 7), 4)
    assert spec.eigenvalues == [(L(-12), 8)]
    assert spec.app == 144 * K * K
    assert spec.phi == L(-24)


def test_e_table_rejects_other_families():
    with pytest.raises(InvalidFamily):
        e_table(build("D", 5))


def test_residue_matrix_action(rng):
    rs = build("A", 3)
    kappa = MultiplicityParam(F(1, 5), F(1, 7))
    a = a_form(rs, kappa)
    for m in (1, 2):
        sigma = boundary_residue_matrix(rs, m, kappa)
        p = rs.coweight_coords[m - 1]
        w = exact.fraction_array([int(x) for x in rng.integers(-5, 6, 3)])
        c = F(int(rng.integers(-5, 6)))
        image = sigma @ np.append(w, c)
        block = (U_matrix(rs, p, kappa) + b_matrix(rs, p, kappa)) @ w - p * c
        assert exact.is_zero(image[:3] - block)
        assert image[3] == a * (p @ rs.coroot_gram @ w)
    zero = boundary_residue_matrix(rs, 1, MultiplicityParam(0, 0))
    assert exact.is_zero(zero[:3, :3]) and zero[3, 3] == 0


def test_t_residues():
    rs = build("B", 3)
    assert exact.is_zero(t_residue(rs, "0") + exact.identity(4))
    assert exact.is_zero(t_residue(rs, "inf") - exact.identity(4))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2)])
def test_mirror_spectrum(family, rank):
    rs = build(family, rank)
    kappa = MultiplicityParam(F(1, 5), F(1, 7))
    for idx, alpha in enumerate(rs.positive_roots):
        spec = dict(mirror_spectrum(rs, alpha, kappa).eigenvalues)
        k_alpha = kappa.k if family == "A" or rs.orbit_tags[idx] == "first" else kappa.k_prime
        assert spec == {linform(2 * k_alpha, 0, 0): 1, linform(0, 0, 0): rank}
        res = mirror_residue_matrix(rs, alpha, kappa)
        cor = np.append(rs.coroot_coords[idx], 0)
        assert exact.is_zero(res @ cor - cor * (2 * k_alpha))
        assert exact.is_zero(res[:, rank])
    zero = mirror_spectrum(rs, rs.positive_roots[0], MultiplicityParam(0, 0))
    assert dict(zero.eigenvalues) == {linform(0, 0, 0): rank + 1}


def test_mirror_spectrum_invalid_root():
    rs = build("A", 2)
    with pytest.raises(InvalidRoot):
        mirror_spectrum(rs, (1, 1, 1), MultiplicityParam(F(1, 5), 0))


@pytest.mark.parametrize("family,rank", [t for t in supported_types() if t[1] <= 8])
def test_quadratic_identity(family, rank):
    rs = build(family, rank)
    assert all(quadratic_identity_holds(rs, m) for m in range(1, rank + 1))


@pytest.mark.parametrize("family,rank", [("B", 4), ("C", 3), ("F", 4), ("G", 2), ("E", 6)])
def test_eigenvalue_sum_and_product(family, rank):
    rs = build(family, rank)
    for m in range(1, rank + 1):
        spec = boundary_spectrum(rs, m)
        if len(spec.eigenvalues) == 2:
            (l1, _), (l2, _) = spec.eigenvalues
            assert l1 + l2 == spec.phi and l1 * l2 == spec.app
        else:
            (lam, _), = spec.eigenvalues
            assert 2 * lam == spec.phi and lam * lam == spec.app
