"""Vanishing reports for first monodromy eigenspaces of line arrangement
Milnor fibers.

For an arrangement of n+1 lines the candidate eigenvalue orders are the
divisors k >= 2 of n+1. Per order, the report records a verdict:

* ``VANISHES_BY_LIBGOBER``: k > 2 and some line carries no point of
  multiplicity divisible by k, so the eigenspace is zero.
* ``VANISHES_BY_THM13``: k is a prime power p**l, the arrangement is
  essential, and some line carries at most one point of multiplicity
  divisible by p, so the eigenspace is zero.
* ``BOUNDED_BY_PS``: k = p**l, and the eigenspace dimension is at most
  the modular bound beta1 computed over F_p.
* ``UNKNOWN``: none of the above applies.

The modular bound for each prime divisor is computed from a deconing at a
line minimizing the divisible-point count, then recomputed for every other
choice of infinity line as a consistency check (the values must agree when
p divides n+1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .aomoto import beta1_full
from .geometry import IntersectionLattice, ProjArrangement, decone, is_essential, lattice, mu
from .orlik_solomon import OSAlgebra

__all__ = [
    "EigenvalueOrder",
    "MuTable",
    "PrimeRecord",
    "OrderRecord",
    "VanishingReport",
    "orders",
    "mu_table",
    "beta1_of_deconing",
    "report",
    "BadDegreeError",
    "VANISHES_BY_LIBGOBER",
    "VANISHES_BY_THM13",
    "BOUNDED_BY_PS",
    "UNKNOWN",
]

VANISHES_BY_LIBGOBER = "VANISHES_BY_LIBGOBER"
VANISHES_BY_THM13 = "VANISHES_BY_THM13"
BOUNDED_BY_PS = "BOUNDED_BY_PS"
UNKNOWN = "UNKNOWN"


class BadDegreeError(ValueError):
    """Eigenvalue orders need a defining polynomial degree of at least 3."""


def _factorize(k: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= k:
        while k % d == 0:
            factors[d] = factors.get(d, 0) + 1
            k //= d
        d += 1
    if k > 1:
        factors[k] = factors.get(k, 0) + 1
    return factors


@dataclass(frozen=True)
class EigenvalueOrder:
    """A divisor k >= 2 of n+1, flagged when it is a prime power p**l."""

    k: int
    prime_power: tuple[int, int] | None


def orders(n_plus_1: int) -> list[EigenvalueOrder]:
    """All candidate orders of nontrivial eigenvalues, ascending."""
    if n_plus_1 < 3:
        raise BadDegreeError(f"degree must be at least 3, got {n_plus_1}")
    out = []
    for k in range(2, n_plus_1 + 1):
        if n_plus_1 % k:
            continue
        factors = _factorize(k)
        pp = None
        if len(factors) == 1:
            ((p, exp),) = factors.items()
            pp = (p, exp)
        out.append(EigenvalueOrder(k, pp))
    return out


@dataclass(frozen=True)
class MuTable:
    """Divisible-point counts: rows are lines, columns the divisors of n+1."""

    ks: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def value(self, i: int, k: int) -> int:
        return self.rows[i][self.ks.index(k)]

    def column(self, k: int) -> tuple[int, ...]:
        c = self.ks.index(k)
        return tuple(row[c] for row in self.rows)


def mu_table(arr: ProjArrangement, lat: IntersectionLattice | None = None) -> MuTable:
    if lat is None:
        lat = lattice(arr)
    ks = tuple(o.k for o in orders(len(arr.lines)))
    rows = tuple(
        tuple(mu(arr, i, k, lat) for k in ks) for i in range(len(arr.lines))
    )
    return MuTable(ks, rows)


@dataclass(frozen=True)
class PrimeRecord:
    """Modular data for one prime divisor of n+1."""

    p: int
    min_mu: int
    witness_line: int
    beta1: int
    beta1_all_deconings: tuple[int, ...]
    theorem16_applicable: bool
    theorem16_consistent: bool

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "min_mu": self.min_mu,
            "witness_line": self.witness_line,
            "beta1": self.beta1,
            "beta1_all_deconings": list(self.beta1_all_deconings),
            "theorem16_applicable": self.theorem16_applicable,
            "theorem16_consistent": self.theorem16_consistent,
        }


@dataclass(frozen=True)
class OrderRecord:
    """Verdict for one eigenvalue order; bound is the best upper bound on
    the eigenspace dimension (None when nothing is known)."""

    k: int
    prime_power: tuple[int, int] | None
    verdict: str
    bound: int | None

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "prime_power": list(self.prime_power) if self.prime_power else None,
            "verdict": self.verdict,
            "bound": self.bound,
        }


@dataclass(frozen=True)
class VanishingReport:
    degree: int
    essential: bool
    trivial_eigenspace_dim: int
    mu: MuTable
    primes: tuple[PrimeRecord, ...]
    orders: tuple[OrderRecord, ...]

    def prime_record(self, p: int) -> PrimeRecord:
        for rec in self.primes:
            if rec.p == p:
                return rec
        raise KeyError(f"no record for prime {p}")

    def order_record(self, k: int) -> OrderRecord:
        for rec in self.orders:
            if rec.k == k:
                return rec
        raise KeyError(f"no record for order {k}")

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "essential": self.essential,
            "mu_table": {"ks": list(self.mu.ks), "rows": [list(r) for r in self.mu.rows]},
            "primes": [rec.to_json_dict() for rec in self.primes],
            "orders": [rec.to_json_dict() for rec in self.orders],
        }


def beta1_of_deconing(arr: ProjArrangement, infinity_index: int, p: int) -> int:
    """Modular bound for one choice of infinity line: the first cohomology
    rank of the wedge complex of the deconed arrangement at the all-ones
    one-form."""
    alg = OSAlgebra(decone(arr, infinity_index), p)
    return beta1_full(alg, alg.ones()).value


def report(arr: ProjArrangement) -> VanishingReport:
    """Full vanishing report for a projective arrangement."""
    lat = lattice(arr)
    degree = len(arr.lines)
    essential = is_essential(arr, lat)
    table = mu_table(arr, lat)
    all_orders = orders(degree)

    prime_records = []
    for order in all_orders:
        if order.prime_power is None or order.prime_power[1] != 1:
            continue
        p = order.prime_power[0]
        mus = table.column(p)
        min_mu = min(mus)
        witness = mus.index(min_mu)
        betas = tuple(beta1_of_deconing(arr, i, p) for i in range(degree))
        if len(set(betas)) != 1:
            raise RuntimeError(
                f"modular bound depends on the deconing for p={p}; this is a bug"
            )
        beta1 = betas[witness]
        applicable = essential and min_mu <= 1
        consistent = (not applicable) or beta1 == 0
        if not consistent:
            raise RuntimeError(
                f"vanishing criterion violated for p={p} (min_mu={min_mu}, "
                f"beta1={beta1}); this is a bug"
            )
        prime_records.append(
            PrimeRecord(p, min_mu, witness, beta1, betas, applicable, consistent)
        )
    by_prime = {rec.p: rec for rec in prime_records}

    order_records = []
    for order in all_orders:
        k = order.k
        rec = by_prime.get(order.prime_power[0]) if order.prime_power else None
        if k > 2 and min(table.column(k)) == 0:
            verdict, bound = VANISHES_BY_LIBGOBER, 0
        elif rec is not None and essential and rec.min_mu <= 1:
            verdict, bound = VANISHES_BY_THM13, rec.beta1  # necessarily 0
        elif rec is not None:
            verdict, bound = BOUNDED_BY_PS, rec.beta1
        else:
            verdict, bound = UNKNOWN, None
        order_records.append(OrderRecord(k, order.prime_power, verdict, bound))

    return VanishingReport(
        degree=degree,
        essential=essential,
        trivial_eigenspace_dim=degree - 1,
        mu=table,
        primes=tuple(prime_records),
        orders=tuple(order_records),
    )
