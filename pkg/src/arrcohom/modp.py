"""Dense exact linear algebra over a prime field F_p.

Matrices hold numpy int64 residues. The modulus must be prime and below
2**31 so that any product of two residues stays inside int64; matrix
products additionally fall back to exact object arithmetic whenever an
accumulated dot product could overflow.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "FpMatrix",
    "FpVector",
    "solve_membership",
    "is_prime",
    "NotPrimeError",
    "DimensionMismatchError",
    "ModulusMismatchError",
]

_MAX_MODULUS = 2**31


class NotPrimeError(ValueError):
    """Modulus is not a supported prime."""


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible."""


class ModulusMismatchError(ValueError):
    """Operands live over different prime fields."""


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_modulus(p) -> int:
    p = int(p)
    if not is_prime(p):
        raise NotPrimeError(f"modulus {p} is not prime")
    if p >= _MAX_MODULUS:
        raise NotPrimeError(f"modulus {p} is too large, need p < 2**31")
    return p


def _rref_raw(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with the fixed pivot rule: scan columns
    left to right, take the topmost nonzero entry."""
    a = a.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        top = r + int(nz[0])
        if top != r:
            a[[r, top]] = a[[top, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _kernel_raw(a: np.ndarray, p: int) -> np.ndarray:
    """Right null space basis, one row per free column of the rref."""
    rref, pivots = _rref_raw(a, p)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(pivots):
            basis[k, c] = (-int(rref[r, f])) % p
    return basis


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p, exact for any supported modulus."""
    inner = a.shape[-1]
    if inner == 0:
        shape = a.shape[:-1] + b.shape[1:]
        return np.zeros(shape, dtype=np.int64)
    if (p - 1) * (p - 1) * inner < 2**62:
        return (a @ b) % p
    return np.asarray((a.astype(object) @ b.astype(object)) % p, dtype=np.int64)


class FpVector:
    """Vector of residues mod a prime."""

    __slots__ = ("p", "data")

    def __init__(self, p: int, entries):
        self.p = _check_modulus(p)
        data = np.asarray(entries, dtype=np.int64) % self.p
        if data.ndim != 1:
            raise DimensionMismatchError(f"expected a vector, got shape {data.shape}")
        data.flags.writeable = False
        self.data = data

    def __len__(self) -> int:
        return int(self.data.shape[0])

    def __getitem__(self, i) -> int:
        return int(self.data[i])

    def __iter__(self):
        return (int(x) for x in self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpVector)
            and self.p == other.p
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __repr__(self) -> str:
        return f"FpVector(p={self.p}, {self.tolist()})"

    def tolist(self) -> list[int]:
        return [int(x) for x in self.data]

    def is_zero(self) -> bool:
        return not self.data.any()

    def sum(self) -> int:
        return int(self.data.sum() % self.p)

    def _binop_check(self, other: "FpVector") -> None:
        if not isinstance(other, FpVector):
            raise TypeError(f"expected FpVector, got {type(other).__name__}")
        if self.p != other.p:
            raise ModulusMismatchError(f"p={self.p} vs p={other.p}")
        if len(self) != len(other):
            raise DimensionMismatchError(f"lengths {len(self)} vs {len(other)}")

    def __add__(self, other: "FpVector") -> "FpVector":
        self._binop_check(other)
        return FpVector(self.p, (self.data + other.data) % self.p)

    def __sub__(self, other: "FpVector") -> "FpVector":
        self._binop_check(other)
        return FpVector(self.p, (self.data - other.data) % self.p)

    def __neg__(self) -> "FpVector":
        return FpVector(self.p, (-self.data) % self.p)

    def scale(self, c: int) -> "FpVector":
        return FpVector(self.p, (self.data * (int(c) % self.p)) % self.p)


class FpMatrix:
    """Dense matrix of residues mod a prime."""

    __slots__ = ("p", "data")

    def __init__(self, p: int, entries):
        self.p = _check_modulus(p)
        data = np.asarray(entries, dtype=np.int64)
        if data.ndim != 2:
            raise DimensionMismatchError(f"expected a matrix, got shape {data.shape}")
        data = data % self.p
        data.flags.writeable = False
        self.data = data

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, p: int, n: int) -> "FpMatrix":
        return cls(p, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, shape={self.shape})"

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def is_zero(self) -> bool:
        return not self.data.any()

    def row(self, i: int) -> FpVector:
        return FpVector(self.p, self.data[i])

    def column(self, j: int) -> FpVector:
        return FpVector(self.p, self.data[:, j])

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.p, self.data.T)

    def rref(self) -> tuple["FpMatrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns (deterministic)."""
        reduced, pivots = _rref_raw(self.data, self.p)
        return FpMatrix(self.p, reduced), tuple(pivots)

    def rank(self) -> int:
        return len(_rref_raw(self.data, self.p)[1])

    def kernel_basis(self) -> list[FpVector]:
        """Basis of the right null space; empty list for injective maps."""
        return [FpVector(self.p, row) for row in _kernel_raw(self.data, self.p)]

    def __matmul__(self, other):
        if isinstance(other, FpVector):
            if other.p != self.p:
                raise ModulusMismatchError(f"p={self.p} vs p={other.p}")
            if len(other) != self.cols:
                raise DimensionMismatchError(f"{self.shape} @ vector of length {len(other)}")
            return FpVector(self.p, _matmul_mod(self.data, other.data, self.p))
        if isinstance(other, FpMatrix):
            if other.p != self.p:
                raise ModulusMismatchError(f"p={self.p} vs p={other.p}")
            if other.rows != self.cols:
                raise DimensionMismatchError(f"{self.shape} @ {other.shape}")
            return FpMatrix(self.p, _matmul_mod(self.data, other.data, self.p))
        return NotImplemented


def solve_membership(v: FpVector, span: list[FpVector]) -> list[int] | None:
    """Coordinates expressing v in the given spanning vectors, or None.

    The particular solution is deterministic: free coordinates are zero.
    """
    for w in span:
        if w.p != v.p:
            raise ModulusMismatchError(f"p={v.p} vs p={w.p}")
        if len(w) != len(v):
            raise DimensionMismatchError(f"lengths {len(v)} vs {len(w)}")
    if not span:
        return [] if v.is_zero() else None
    a = np.stack([w.data for w in span], axis=1)
    aug = np.concatenate([a, v.data[:, None]], axis=1)
    rref, pivots = _rref_raw(aug, v.p)
    k = len(span)
    if k in pivots:
        return None
    coords = [0] * k
    for r, c in enumerate(pivots):
        coords[c] = int(rref[r, k])
    return coords
