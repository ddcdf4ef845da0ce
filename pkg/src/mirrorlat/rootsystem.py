"""Reduced irreducible root systems in Bourbaki coordinates.

Vectors of the ambient Euclidean space are tuples of Fractions with the
standard inner product.  Elements of the Cartan subalgebra are usually handled
through their coordinates in the basis of simple coroots; :class:`RootSystemData`
carries the integer tables needed for that (Cartan matrix, simple-root
coefficients of positive roots, coroot coordinates).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

import numpy as np

from . import exact
from .errors import InvalidRoot, UnsupportedType

SUPPORTED_RANKS = {
    "A": tuple(range(2, 10)),
    "B": tuple(range(2, 8)),
    "C": tuple(range(2, 8)),
    "D": tuple(range(4, 9)),
    "E": (6, 7, 8),
    "F": (4,),
    "G": (2,),
}

# (h~, {m~_j}) for the D/E determinant product.
_E_EXPONENTS = {
    6: (6, (0, 2, 2, 3, 4, 4, 6)),
    7: (12, (0, 3, 4, 6, 6, 8, 9, 12)),
    8: (30, (0, 6, 10, 12, 15, 18, 20, 24, 30)),
}

_COXETER_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}

Vector = tuple  # tuple of Fractions


def supported_types() -> list[tuple[str, int]]:
    return [(fam, n) for fam, ranks in SUPPORTED_RANKS.items() for n in ranks]


def _unit(dim: int, *entries: tuple[int, Fraction | int]) -> Vector:
    vec = [Fraction(0)] * dim
    for index, value in entries:
        vec[index] += Fraction(value)
    return tuple(vec)


def _simple_roots(family: str, n: int) -> tuple[int, list[Vector]]:
    half = Fraction(1, 2)
    if family == "A":
        dim = n + 1
        return dim, [_unit(dim, (i, 1), (i + 1, -1)) for i in range(n)]
    if family in "BCD":
        dim = n
        roots = [_unit(dim, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        if family == "B":
            roots.append(_unit(dim, (n - 1, 1)))
        elif family == "C":
            roots.append(_unit(dim, (n - 1, 2)))
        else:
            roots.append(_unit(dim, (n - 2, 1), (n - 1, 1)))
        return dim, roots
    if family == "E":
        dim = 8
        roots = [
            _unit(dim, (0, half), (7, half), *[(i, -half) for i in range(1, 7)]),
            _unit(dim, (0, 1), (1, 1)),
            _unit(dim, (1, 1), (0, -1)),
        ]
        roots += [_unit(dim, (i, 1), (i - 1, -1)) for i in range(2, 7)]
        return dim, roots[:n]
    if family == "F":
        dim = 4
        return dim, [
            _unit(dim, (1, 1), (2, -1)),
            _unit(dim, (2, 1), (3, -1)),
            _unit(dim, (3, 1)),
            _unit(dim, (0, half), (1, -half), (2, -half), (3, -half)),
        ]
    if family == "G":
        dim = 3
        return dim, [_unit(dim, (0, 1), (1, -1)), _unit(dim, (0, -2), (1, 1), (2, 1))]
    raise UnsupportedType(f"unknown family {family!r}")


def dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def coroot(alpha: Vector) -> Vector:
    scale = Fraction(2) / dot(alpha, alpha)
    return tuple(scale * a for a in alpha)


def reflect(beta: Vector, alpha: Vector) -> Vector:
    c = dot(beta, coroot(alpha))
    return tuple(b - c * a for a, b in zip(alpha, beta))


@dataclass(frozen=True, eq=False)
class RootSystemData:
    family: str
    rank: int
    ambient_dim: int
    simple_roots: tuple
    positive_roots: tuple
    fundamental_coweights: tuple
    highest_root: Vector
    affine_coxeter_matrix: np.ndarray = field(repr=False)
    de_exponents: tuple | None = None

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def n(self) -> int:
        return self.rank

    @cached_property
    def roots(self) -> tuple:
        return self.positive_roots + tuple(tuple(-a for a in r) for r in self.positive_roots)

    @cached_property
    def cartan(self) -> np.ndarray:
        """C[i, j] = alpha_j(alpha_i^vee)."""
        n = self.rank
        return np.array([[int(dot(self.simple_roots[j], coroot(self.simple_roots[i])))
                          for j in range(n)] for i in range(n)], dtype=np.int64)

    @cached_property
    def _cartan_inverse(self) -> np.ndarray:
        return exact.inverse(exact.fraction_array(self.cartan.tolist()))

    @cached_property
    def coefficients(self) -> np.ndarray:
        """Simple-root coefficients of the positive roots, one row per root."""
        return np.array([[int(dot(r, w)) for w in self.fundamental_coweights]
                         for r in self.positive_roots], dtype=np.int64)

    @cached_property
    def root_rows(self) -> np.ndarray:
        """Row alpha(alpha_i^vee) of each positive root as a functional on coroot coordinates."""
        return self.coefficients @ self.cartan.T

    @cached_property
    def coroot_coords(self) -> np.ndarray:
        """Coordinates of each positive coroot in the simple-coroot basis (integers)."""
        rows = [self.to_coords(coroot(r)) for r in self.positive_roots]
        return np.array([[int(x) for x in row] for row in rows], dtype=np.int64)

    @cached_property
    def coroot_gram(self) -> np.ndarray:
        cor = [coroot(a) for a in self.simple_roots]
        return exact.fraction_array([[dot(u, v) for v in cor] for u in cor])

    @cached_property
    def coweight_coords(self) -> np.ndarray:
        """Row m holds the simple-coroot coordinates of the m-th fundamental coweight."""
        return self._cartan_inverse.copy()

    @cached_property
    def lengths(self) -> tuple:
        return tuple(dot(r, r) for r in self.positive_roots)

    def to_coords(self, vec: Vector) -> tuple:
        """Simple-coroot coordinates of an ambient vector lying in the span of the roots."""
        values = exact.fraction_array([[dot(a, vec) for a in self.simple_roots]])
        coords = tuple((values @ self._cartan_inverse)[0])
        if tuple(self.to_ambient(coords)) != tuple(Fraction(x) for x in vec):
            raise ValueError("vector is not in the span of the roots")
        return coords

    def to_ambient(self, coords) -> Vector:
        cor = [coroot(a) for a in self.simple_roots]
        out = [Fraction(0)] * self.ambient_dim
        for c, v in zip(coords, cor):
            for i, x in enumerate(v):
                out[i] += Fraction(c) * x
        return tuple(out)

    def root_index(self, alpha) -> tuple[int, int]:
        """(positive index, sign) of a root; raises InvalidRoot otherwise."""
        alpha = tuple(Fraction(a) for a in alpha)
        lookup = self._root_lookup
        if alpha in lookup:
            return lookup[alpha], 1
        neg = tuple(-a for a in alpha)
        if neg in lookup:
            return lookup[neg], -1
        raise InvalidRoot(f"{alpha} is not a root of {self.name}")

    @cached_property
    def _root_lookup(self) -> dict:
        return {r: i for i, r in enumerate(self.positive_roots)}

    def orbit_tag(self, alpha) -> str:
        """'first' if k applies to the root, 'second' if k' does."""
        index, _ = self.root_index(alpha)
        return self.orbit_tags[index]

    @cached_property
    def orbit_tags(self) -> tuple:
        if self.family in "ADE":
            return ("first",) * len(self.positive_roots)
        long_len = max(self.lengths)
        second_is_long = self.family in "CG"
        return tuple("second" if ((l == long_len) == second_is_long) else "first"
                     for l in self.lengths)

    @cached_property
    def simple_tags(self) -> tuple:
        return tuple(self.orbit_tag(a) for a in self.simple_roots)

    @property
    def coxeter_number(self) -> int:
        return 2 * len(self.positive_roots) // self.rank


def _closure(simple: list[Vector]) -> set:
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha in simple:
                gamma = reflect(beta, alpha)
                if gamma not in roots:
                    roots.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return roots


def _coweights(simple: list[Vector]) -> list[Vector]:
    gram = exact.fraction_array([[dot(a, b) for b in simple] for a in simple])
    inv = exact.inverse(gram)
    n = len(simple)
    dim = len(simple[0])
    out = []
    for i in range(n):
        vec = [Fraction(0)] * dim
        for l in range(n):
            for t in range(dim):
                vec[t] += inv[i, l] * simple[l][t]
        out.append(tuple(vec))
    return out


def _affine_coxeter(nodes: list[Vector]) -> np.ndarray:
    size = len(nodes)
    mat = np.ones((size, size), dtype=np.int64)
    for i, j in itertools.combinations(range(size), 2):
        prod = dot(nodes[i], coroot(nodes[j])) * dot(nodes[j], coroot(nodes[i]))
        if prod not in _COXETER_FROM_PRODUCT:
            raise UnsupportedType("infinite Coxeter entry (rank 1 affine diagram)")
        mat[i, j] = mat[j, i] = _COXETER_FROM_PRODUCT[int(prod)]
    return mat


def _de_exponents(family: str, n: int):
    if family == "D":
        return (2 * (n - 2), tuple(range(0, 2 * (n - 2) + 1, 2)) + (n - 2, n - 2))
    if family == "E":
        return _E_EXPONENTS[n]
    return None


@lru_cache(maxsize=None)
def build(family: str, rank: int) -> RootSystemData:
    """Root system of the given type; raises UnsupportedType outside the supported set."""
    family = str(family).upper()
    if rank not in SUPPORTED_RANKS.get(family, ()):
        matrix = ", ".join(f"{f}{min(r)}-{max(r)}" if len(r) > 1 else f"{f}{r[0]}"
                           for f, r in SUPPORTED_RANKS.items())
        raise UnsupportedType(f"unsupported type {family}{rank}; supported: {matrix}")
    dim, simple = _simple_roots(family, rank)
    coweights = _coweights(simple)
    positive = []
    for r in _closure(simple):
        coeffs = tuple(dot(r, w) for w in coweights)
        if all(c >= 0 for c in coeffs):
            positive.append((sum(coeffs), tuple(-c for c in coeffs), r))
    positive.sort()
    positive_roots = tuple(r for _, _, r in positive)
    highest = positive_roots[-1]
    nodes = [tuple(-a for a in highest)] + list(simple)
    return RootSystemData(
        family=family,
        rank=rank,
        ambient_dim=dim,
        simple_roots=tuple(simple),
        positive_roots=positive_roots,
        fundamental_coweights=tuple(coweights),
        highest_root=highest,
        affine_coxeter_matrix=_affine_coxeter(nodes),
        de_exponents=_de_exponents(family, rank),
    )


def fundamental_coweights(rs: RootSystemData) -> list[Vector]:
    return list(rs.fundamental_coweights)


def affine_coxeter_matrix(rs: RootSystemData) -> np.ndarray:
    return rs.affine_coxeter_matrix.copy()


def rank2_positive_subsystems(rs: RootSystemData) -> list[tuple[int, ...]]:
    """Positive-root indices of each R cap span(alpha, beta), deduplicated."""
    return list(_rank2_indices(rs.family, rs.rank))


@lru_cache(maxsize=None)
def _rank2_indices(family: str, rank: int) -> tuple:
    rs = build(family, rank)
    coeffs = rs.coefficients
    count, n = coeffs.shape
    triples = np.array(list(itertools.combinations(range(n), 3)), dtype=np.int64).reshape(-1, 3)
    i, j, l = triples[:, 0], triples[:, 1], triples[:, 2]
    covered = np.zeros((count, count), dtype=bool)
    np.fill_diagonal(covered, True)
    found = []
    for a in range(count):
        for b in range(a + 1, count):
            if covered[a, b]:
                continue
            u, v = coeffs[a], coeffs[b]
            w = np.outer(u, v) - np.outer(v, u)
            minors = coeffs[:, i] * w[j, l] - coeffs[:, j] * w[i, l] + coeffs[:, l] * w[i, j]
            members = np.flatnonzero(np.all(minors == 0, axis=1))
            covered[np.ix_(members, members)] = True
            found.append(tuple(int(m) for m in members))
    return tuple(found)


def rank2_subsystems(rs: RootSystemData) -> list[list[Vector]]:
    """Each R cap span(alpha, beta) as a list of roots of both signs."""
    out = []
    for members in rank2_positive_subsystems(rs):
        pos = [rs.positive_roots[m] for m in members]
        out.append(pos + [tuple(-a for a in r) for r in pos])
    return out
