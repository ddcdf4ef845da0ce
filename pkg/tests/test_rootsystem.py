from fractions import Fraction

import numpy as np
import pytest

from mirrorlat.errors import InvalidRoot, UnsupportedType
from mirrorlat.rootsystem import (affine_coxeter_matrix, build, coroot, dot, fundamental_coweights,
                                  rank2_subsystems, reflect, supported_types)

ALL = supported_types()
# |R+| = n h / 2 with the standard Coxeter numbers
COXETER = {"A": lambda n: n + 1, "B": lambda n: 2 * n, "C": lambda n: 2 * n,
           "D": lambda n: 2 * n - 2, "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
           "F": lambda n: 12, "G": lambda n: 6}


@pytest.mark.parametrize("family,rank", ALL)
def test_basic_invariants(family, rank):
    rs = build(family, rank)
    roots = np.array(rs.roots, dtype=float)  # coordinates lie in (1/2)Z, exact in floats
    gram = roots @ roots.T
    cartan = 2 * gram / np.diag(gram)[None, :]  # cartan[b, a] = 2(b, a)/(a, a)
    assert np.allclose(np.diag(cartan), 2)
    assert np.array_equal(cartan, np.round(cartan))
    keys = {tuple(np.round(2 * r).astype(int)) for r in roots}
    for a in range(len(roots)):
        images = roots - np.outer(cartan[:, a], roots[a])
        assert all(tuple(np.round(2 * r).astype(int)) in keys for r in images)
    assert all(dot(a, coroot(a)) == 2 for a in rs.positive_roots)
    assert all(reflect(a, a) == tuple(-x for x in a) for a in rs.simple_roots)
    # duality with fundamental coweights
    pairing = [[dot(a, w) for a in rs.simple_roots] for w in fundamental_coweights(rs)]
    assert pairing == [[int(i == j) for j in range(rank)] for i in range(rank)]


@pytest.mark.parametrize("family,rank", ALL)
def test_highest_root_and_coweight_sums(family, rank):
    rs = build(family, rank)
    coeffs = rs.to_coords(rs.highest_root)
    assert all(c >= 1 for c in rs.coefficients[rs.root_index(rs.highest_root)[0]])
    assert len(coeffs) == rank
    for w in fundamental_coweights(rs):
        total = sum(dot(a, w) for a in rs.positive_roots)
        assert total > 0 and Fraction(total).denominator == 1


@pytest.mark.parametrize("family,rank", ALL)
def test_affine_coxeter_matrix_shape(family, rank):
    rs = build(family, rank)
    M = affine_coxeter_matrix(rs)
    assert M.shape == (rank + 1, rank + 1)
    assert np.array_equal(M, M.T)
    assert all(M[i, i] == 1 for i in range(rank + 1))
    assert set(np.unique(M)) <= {1, 2, 3, 4, 6}
    if family == "A":
        for i in range(rank + 1):
            assert M[i, (i + 1) % (rank + 1)] == 3
            assert sorted(M[i]).count(3) == 2


@pytest.mark.parametrize("family,rank", ALL)
def test_orbit_tags(family, rank):
    rs = build(family, rank)
    tags = set(rs.orbit_tags)
    assert tags == ({"first"} if family in "ADE" else {"first", "second"})
    # every positive root shares its tag with a simple root of the same length
    simple_by_len = {dot(a, a): rs.orbit_tag(a) for a in rs.simple_roots}
    for a, tag in zip(rs.positive_roots, rs.orbit_tags):
        assert simple_by_len[dot(a, a)] == tag


def test_k_prime_orbits_follow_the_last_simple_root():
    assert build("B", 3).simple_tags == ("first", "first", "second")  # short roots
    assert build("C", 3).simple_tags == ("first", "first", "second")  # long roots
    assert build("F", 4).simple_tags == ("first", "first", "second", "second")
    assert build("G", 2).simple_tags == ("first", "second")


def test_a2_roots_sum_to_zero():
    rs = build("A", 2)
    a, b = rs.simple_roots
    assert len(rs.positive_roots) == 3
    gamma = tuple(-(x + y) for x, y in zip(a, b))
    assert tuple(x + y + z for x, y, z in zip(a, b, gamma)) == (0, 0, 0)
    assert rs.root_index(gamma)[1] == -1


def test_g2_has_six_positive_roots():
    assert len(build("G", 2).positive_roots) == 6


def test_e7_highest_root():
    rs = build("E", 7)
    # Bourbaki value; the vector a1+2a2+3a3+4a4+3a5+2a6+a7 is a root with the same a4 coefficient
    assert list(rs.coefficients[rs.root_index(rs.highest_root)[0]]) == [2, 2, 3, 4, 3, 2, 1]
    other = rs.to_ambient([1, 2, 3, 4, 3, 2, 1])
    assert rs.root_index(other)[1] == 1


def test_a3_coweight_formula():
    rs = build("A", 3)
    w = fundamental_coweights(rs)
    half = Fraction(1, 2)
    assert tuple(w[1]) == (half, half, -half, -half)
    n = 3
    for m in range(1, n + 1):
        expected = tuple(Fraction(n + 1 - m, n + 1) if i < m else -Fraction(m, n + 1) for i in range(n + 1))
        assert tuple(w[m - 1]) == expected


def test_b_coweights_are_partial_sums():
    rs = build("B", 4)
    for m, w in enumerate(fundamental_coweights(rs), start=1):
        assert tuple(w) == tuple(Fraction(int(i < m)) for i in range(4))


def test_g2_affine_diagram():
    M = affine_coxeter_matrix(build("G", 2))
    labels = sorted(int(M[i, j]) for i in range(3) for j in range(i + 1, 3))
    assert labels == [2, 3, 6]
    assert M[1, 2] == 6


def test_rank2_subsystems():
    assert [len(s) for s in rank2_subsystems(build("A", 2))] == [6]
    assert [len(s) for s in rank2_subsystems(build("G", 2))] == [12]
    sizes = sorted({len(s) for s in rank2_subsystems(build("B", 3))})
    assert sizes == [4, 6, 8]  # A1xA1, A2, B2


def test_rank2_subsystems_cover_all_pairs():
    rs = build("C", 3)
    subs = [set(s) for s in rank2_subsystems(rs)]
    roots = rs.roots
    for a in roots:
        for b in roots:
            if np.linalg.matrix_rank(np.array([a, b], dtype=float)) == 2:
                assert any(a in s and b in s for s in subs)


@pytest.mark.parametrize("family,rank", [("A", 1), ("A", 10), ("B", 8), ("D", 3), ("E", 9), ("F", 3), ("G", 3), ("H", 3)])
def test_unsupported(family, rank):
    with pytest.raises(UnsupportedType, match="supported"):
        build(family, rank)


def test_invalid_root():
    rs = build("A", 2)
    with pytest.raises(InvalidRoot):
        rs.root_index((1, 1, -2))


def test_de_exponents():
    assert build("E", 6).de_exponents == (6, (0, 2, 2, 3, 4, 4, 6))
    assert build("E", 7).de_exponents == (12, (0, 3, 4, 6, 6, 8, 9, 12))
    assert build("E", 8).de_exponents == (30, (0, 6, 10, 12, 15, 18, 20, 24, 30))
    assert build("D", 5).de_exponents == (6, (0, 2, 4, 6, 3, 3))
