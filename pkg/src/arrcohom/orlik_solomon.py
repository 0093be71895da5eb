"""Orlik-Solomon algebra of an affine line arrangement over F_p, degrees 0..2.

Degree 2 is built on the per-point decomposition: each finite intersection
point X contributes the wedges of its smallest incident line with every
other incident line. Wedges of parallel lines are zero, and the three-term
relation at a point reduces any remaining wedge in a single subtraction,
so the whole product structure is one table of pair reductions.

``QuotientOSOracle`` computes the same degree as the free module on all
line pairs modulo the defining relations. It shares nothing with the
table construction apart from generic elimination and exists purely as an
independent cross check.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .geometry import AffineArrangement
from .modp import (
    DimensionMismatchError,
    FpMatrix,
    FpVector,
    ModulusMismatchError,
    _check_modulus,
    _matmul_mod,
    _rref_raw,
)

__all__ = ["OSAlgebra", "QuotientOSOracle", "build", "relation_pairs", "relation_triples"]


def relation_pairs(aff: AffineArrangement):
    """Parallel pairs (i, j), i < j, in generator positions."""
    for members in aff.classes_as_positions():
        yield from combinations(members, 2)


def relation_triples(aff: AffineArrangement):
    """Concurrent triples (i, j, k), i < j < k, in generator positions."""
    for inc in aff.finite_points_as_positions():
        yield from combinations(inc, 3)


class OSAlgebra:
    """Degrees 0..2 of the Orlik-Solomon algebra with explicit wedge data.

    Attributes:
        p, n: modulus and number of degree 1 generators.
        class_of: parallel class index of each generator.
        points: finite point incidences as sorted tuples of generator indices.
        symbols: the degree 2 basis, pairs (point index, non-minimal incident
            index); symbol (X, j) stands for the wedge of X's smallest
            incident line with line j.
        dim2: rank of degree 2.
    """

    def __init__(self, aff: AffineArrangement, p: int):
        self.p = _check_modulus(p)
        self.aff = aff
        self.n = aff.n
        self.class_of = aff.class_of_positions()
        self.points = aff.finite_points_as_positions()
        symbols: list[tuple[int, int]] = []
        for x, inc in enumerate(self.points):
            symbols.extend((x, j) for j in inc[1:])
        self.symbols = tuple(symbols)
        self.dim2 = len(symbols)
        self._symbol_col = {sym: c for c, sym in enumerate(symbols)}
        self._point_of_pair: dict[tuple[int, int], int] = {}
        for x, inc in enumerate(self.points):
            for i, j in combinations(inc, 2):
                self._point_of_pair[(i, j)] = x
        self._pair_rows = self._build_pair_rows()

    def _pair_index(self, i: int, j: int) -> int:
        # row of the pair (i, j), i < j, in lexicographic order
        n = self.n
        return (2 * n - i - 1) * i // 2 + (j - i - 1)

    def _build_pair_rows(self) -> np.ndarray:
        p = self.p
        rows = np.zeros((self.n * (self.n - 1) // 2, self.dim2), dtype=np.int64)
        for i, j in combinations(range(self.n), 2):
            if self.class_of[i] == self.class_of[j]:
                continue  # parallel lines wedge to zero
            r = self._pair_index(i, j)
            x = self._point_of_pair[(i, j)]
            anchor = self.points[x][0]
            if i == anchor:
                rows[r, self._symbol_col[(x, j)]] = 1
            else:
                rows[r, self._symbol_col[(x, j)]] = 1
                rows[r, self._symbol_col[(x, i)]] = p - 1
        return rows

    # ---- element constructors -------------------------------------------

    def deg1(self, coeffs) -> FpVector:
        v = coeffs if isinstance(coeffs, FpVector) else FpVector(self.p, coeffs)
        self._check1(v)
        return v

    def deg2(self, coeffs) -> FpVector:
        v = coeffs if isinstance(coeffs, FpVector) else FpVector(self.p, coeffs)
        self._check2(v)
        return v

    def unit(self, i: int) -> FpVector:
        """The generator e_i."""
        if not 0 <= i < self.n:
            raise IndexError(f"generator index {i} out of range 0..{self.n - 1}")
        e = np.zeros(self.n, dtype=np.int64)
        e[i] = 1
        return FpVector(self.p, e)

    def ones(self) -> FpVector:
        """The sum of all degree 1 generators."""
        return FpVector(self.p, np.ones(self.n, dtype=np.int64))

    def zero2(self) -> FpVector:
        return FpVector(self.p, np.zeros(self.dim2, dtype=np.int64))

    def _check1(self, v: FpVector) -> None:
        if not isinstance(v, FpVector):
            raise TypeError(f"expected FpVector, got {type(v).__name__}")
        if v.p != self.p:
            raise ModulusMismatchError(f"p={v.p} vs algebra p={self.p}")
        if len(v) != self.n:
            raise DimensionMismatchError(f"degree 1 length {len(v)}, expected {self.n}")

    def _check2(self, v: FpVector) -> None:
        if not isinstance(v, FpVector):
            raise TypeError(f"expected FpVector, got {type(v).__name__}")
        if v.p != self.p:
            raise ModulusMismatchError(f"p={v.p} vs algebra p={self.p}")
        if len(v) != self.dim2:
            raise DimensionMismatchError(f"degree 2 length {len(v)}, expected {self.dim2}")

    # ---- products --------------------------------------------------------

    def pair_value(self, i: int, j: int) -> FpVector:
        """Reduction of e_i wedge e_j into the degree 2 basis (i > j negates)."""
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise IndexError(f"pair ({i}, {j}) out of range")
        if i == j:
            return self.zero2()
        if i < j:
            return FpVector(self.p, self._pair_rows[self._pair_index(i, j)])
        return FpVector(self.p, (-self._pair_rows[self._pair_index(j, i)]) % self.p)

    def wedge11(self, x: FpVector, y: FpVector) -> FpVector:
        """Bilinear antisymmetric product of two degree 1 elements."""
        self._check1(x)
        self._check1(y)
        outer = (np.outer(x.data, y.data) - np.outer(y.data, x.data)) % self.p
        coeffs = outer[np.triu_indices(self.n, k=1)]
        return FpVector(self.p, _matmul_mod(coeffs, self._pair_rows, self.p))

    def wedge_matrix(self, xi: FpVector) -> FpMatrix:
        """Matrix of (xi wedge -) from degree 1 to degree 2; column j is the
        image of e_j."""
        self._check1(xi)
        cols = [self.wedge11(xi, self.unit(j)).data for j in range(self.n)]
        return FpMatrix(self.p, np.stack(cols, axis=1))

    def coeff_sum_is_zero(self, x: FpVector) -> bool:
        """Membership in the degree 1 subspace of coordinate sum zero."""
        self._check1(x)
        return x.sum() == 0


def build(aff: AffineArrangement, p: int) -> OSAlgebra:
    """Construct the Orlik-Solomon algebra of an affine arrangement over F_p."""
    return OSAlgebra(aff, p)


class QuotientOSOracle:
    """Degree 2 as the free module on all pairs modulo the defining relations.

    Deliberately naive: the relation span is materialized in full and every
    question is answered by elimination against it.
    """

    def __init__(self, aff: AffineArrangement, p: int):
        self.p = _check_modulus(p)
        self.aff = aff
        self.n = aff.n
        self.num_pairs = self.n * (self.n - 1) // 2
        rel_rows = []
        for i, j in relation_pairs(aff):
            row = np.zeros(self.num_pairs, dtype=np.int64)
            row[self._pair_index(i, j)] = 1
            rel_rows.append(row)
        for i, j, k in relation_triples(aff):
            row = np.zeros(self.num_pairs, dtype=np.int64)
            row[self._pair_index(i, j)] = 1
            row[self._pair_index(i, k)] = self.p - 1
            row[self._pair_index(j, k)] = 1
            rel_rows.append(row)
        if rel_rows:
            rel = np.stack(rel_rows)
        else:
            rel = np.zeros((0, self.num_pairs), dtype=np.int64)
        self._rel_rref, self._rel_pivots = _rref_raw(rel, self.p)
        self.rank_relations = len(self._rel_pivots)
        self.dim2 = self.num_pairs - self.rank_relations

    def _pair_index(self, i: int, j: int) -> int:
        n = self.n
        return (2 * n - i - 1) * i // 2 + (j - i - 1)

    def reduce(self, vec) -> np.ndarray:
        """Canonical residue of a free pair vector modulo the relation span."""
        v = np.asarray(vec, dtype=np.int64) % self.p
        for r, c in enumerate(self._rel_pivots):
            if v[c]:
                v = (v - v[c] * self._rel_rref[r]) % self.p
        return v

    def pair_reduction(self, i: int, j: int) -> np.ndarray:
        if i == j:
            return np.zeros(self.num_pairs, dtype=np.int64)
        sign = 1
        if i > j:
            i, j, sign = j, i, self.p - 1
        unit = np.zeros(self.num_pairs, dtype=np.int64)
        unit[self._pair_index(i, j)] = sign
        return self.reduce(unit)

    def pair_coords(self, x, y) -> np.ndarray:
        """Wedge of two degree 1 coefficient vectors in free pair coordinates."""
        x = np.asarray(x, dtype=np.int64) % self.p
        y = np.asarray(y, dtype=np.int64) % self.p
        outer = (np.outer(x, y) - np.outer(y, x)) % self.p
        return outer[np.triu_indices(self.n, k=1)]

    def rank_modulo_relations(self, rows) -> int:
        """Rank of the span of the given free pair vectors in the quotient."""
        reduced = [self.reduce(r) for r in rows]
        if not reduced:
            return 0
        return len(_rref_raw(np.stack(reduced), self.p)[1])

    def beta1(self, xi_coeffs) -> int:
        """First cohomology rank of the wedge complex, computed entirely in
        the free pair module."""
        xi = np.asarray(xi_coeffs, dtype=np.int64) % self.p
        units = np.eye(self.n, dtype=np.int64)
        images = [self.pair_coords(xi, units[j]) for j in range(self.n)]
        rank_d1 = self.rank_modulo_relations(images)
        kernel = self.n - rank_d1
        rank_d0 = 0 if not xi.any() else 1
        return kernel - rank_d0
