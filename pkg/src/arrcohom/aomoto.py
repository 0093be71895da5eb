"""The wedge cochain complex of an arrangement over F_p and its first
cohomology rank, plus the two model arrangements every degeneration
targets (a pencil of s lines through one point, and r parallels crossed
by one transversal)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import AffineArrangement, ProjArrangement, decone
from .modp import FpMatrix, FpVector
from .orlik_solomon import OSAlgebra

__all__ = [
    "AomotoComplex",
    "Beta1Result",
    "beta1_full",
    "beta1_restricted",
    "sum_zero_basis",
    "central_fixture",
    "parallel_fixture",
    "NotInvertibleError",
    "BadSizeError",
]


class NotInvertibleError(ValueError):
    """Coefficient sum is zero mod p, so the restricted shortcut is off."""


class BadSizeError(ValueError):
    """Fixture size parameter out of range."""


@dataclass(frozen=True)
class Beta1Result:
    """A first cohomology rank together with the ranks that produced it."""

    value: int
    method: str  # "full" or "restricted"
    certificate: dict


class AomotoComplex:
    """The complex R -> A^1 -> A^2 given by left wedge with a fixed one-form."""

    def __init__(self, alg: OSAlgebra, xi: FpVector):
        xi = alg.deg1(xi)
        self.alg = alg
        self.xi = xi
        self.d1 = alg.wedge_matrix(xi)
        # the square of the differential vanishes since xi wedge xi = 0
        assert (self.d1 @ xi).is_zero()

    @property
    def rank_d0(self) -> int:
        return 0 if self.xi.is_zero() else 1

    def h0(self) -> int:
        return 1 - self.rank_d0

    def h2(self) -> int:
        return self.alg.dim2 - self.d1.rank()


def beta1_full(alg: OSAlgebra, xi: FpVector) -> Beta1Result:
    """First cohomology rank straight from the definition: the kernel of
    wedging into degree 2, minus the image of degree 0."""
    cx = AomotoComplex(alg, xi)
    rank_d1 = cx.d1.rank()
    dim_ker = alg.n - rank_d1
    value = dim_ker - cx.rank_d0
    certificate = {
        "dim1": alg.n,
        "dim2": alg.dim2,
        "rank_d0": cx.rank_d0,
        "rank_d1": rank_d1,
        "dim_ker_d1": dim_ker,
        "h0": cx.h0(),
        "h2": alg.dim2 - rank_d1,
    }
    return Beta1Result(value, "full", certificate)


def sum_zero_basis(n: int, p: int) -> FpMatrix:
    """Columns e_i - e_{i+1}, a basis of the coordinate-sum-zero subspace."""
    b = np.zeros((n, n - 1), dtype=np.int64)
    for i in range(n - 1):
        b[i, i] = 1
        b[i + 1, i] = p - 1
    return FpMatrix(p, b)


def beta1_restricted(alg: OSAlgebra, xi: FpVector) -> Beta1Result:
    """Kernel of the wedge map restricted to the sum-zero subspace.

    Valid only when the coefficient sum of xi is invertible mod p, in
    which case it agrees with the full computation.
    """
    xi = alg.deg1(xi)
    if xi.sum() == 0:
        raise NotInvertibleError(
            f"coefficient sum is 0 mod {alg.p}; use the full computation"
        )
    cx = AomotoComplex(alg, xi)
    restricted = cx.d1 @ sum_zero_basis(alg.n, alg.p)
    rank_restricted = restricted.rank()
    value = (alg.n - 1) - rank_restricted
    certificate = {
        "dim_sub": alg.n - 1,
        "rank_restricted": rank_restricted,
        "coeff_sum": xi.sum(),
    }
    return Beta1Result(value, "restricted", certificate)


def central_fixture(s: int) -> AffineArrangement:
    """s affine lines through the origin with pairwise distinct slopes."""
    if s < 2:
        raise BadSizeError(f"central model needs s >= 2, got {s}")
    coeffs = [(0, 0, 1), (1, 0, 0)] + [(k, -1, 0) for k in range(s - 1)]
    return decone(ProjArrangement.from_coeffs(coeffs), 0)


def parallel_fixture(r: int) -> AffineArrangement:
    """r parallel vertical lines x = 1..r plus the transversal y = x.

    Generators order the parallels first, the transversal last.
    """
    if r < 1:
        raise BadSizeError(f"parallel model needs r >= 1, got {r}")
    coeffs = [(0, 0, 1)] + [(1, 0, -j) for j in range(1, r + 1)] + [(1, -1, 0)]
    return decone(ProjArrangement.from_coeffs(coeffs), 0)
