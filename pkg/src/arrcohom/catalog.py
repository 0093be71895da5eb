"""Built-in arrangements used by the command line tool and the test sweeps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .geometry import ProjArrangement

__all__ = ["CatalogEntry", "BUILTINS", "BadParameterError", "build_named", "sweep_members",
           "braid_a3", "pencil", "near_pencil", "generic", "fermat", "fig3"]


class BadParameterError(ValueError):
    """Missing, extraneous, or unrealizable size parameter."""


def braid_a3() -> ProjArrangement:
    """The six lines x, y, z, x-y, x-z, y-z."""
    return ProjArrangement.from_coeffs(
        [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1)]
    )


def pencil(m: int) -> ProjArrangement:
    """m lines through the single point (0:0:1)."""
    if m < 3:
        raise BadParameterError(f"pencil needs m >= 3, got {m}")
    return ProjArrangement.from_coeffs([(0, 1, 0)] + [(1, -k, 0) for k in range(m - 1)])


def near_pencil(m: int) -> ProjArrangement:
    """m - 1 lines through (0:0:1) plus the transversal z."""
    if m < 3:
        raise BadParameterError(f"near-pencil needs m >= 3, got {m}")
    return ProjArrangement.from_coeffs(
        [(0, 1, 0)] + [(1, -k, 0) for k in range(m - 2)] + [(0, 0, 1)]
    )


def generic(m: int) -> ProjArrangement:
    """m lines tangent to a conic: no three concurrent, all points double."""
    if m < 3:
        raise BadParameterError(f"generic needs m >= 3, got {m}")
    return ProjArrangement.from_coeffs([(1, t, t * t) for t in range(m)])


def fermat(m: int) -> ProjArrangement:
    """The 3m lines splitting x^m - y^m, y^m - z^m, x^m - z^m.

    Rational line factors exist only for m <= 2, larger m is rejected.
    """
    if m not in (1, 2):
        raise BadParameterError(
            f"fermat arrangement is rational only for m in (1, 2), got {m}"
        )
    if m == 1:
        return ProjArrangement.from_coeffs([(1, -1, 0), (0, 1, -1), (1, 0, -1)])
    return ProjArrangement.from_coeffs(
        [(1, -1, 0), (1, 1, 0), (0, 1, -1), (0, 1, 1), (1, 0, -1), (1, 0, 1)]
    )


def fig3() -> ProjArrangement:
    """Five affine lines plus the infinity line z: two horizontals y = 1, 2,
    the diagonal y = x, and two verticals x = 1, 2.

    Deconed at line 0 this has parallel classes {1,2}, {3}, {4,5}.
    """
    return ProjArrangement.from_coeffs(
        [(0, 0, 1), (0, 1, -1), (0, 1, -2), (1, -1, 0), (1, 0, -1), (1, 0, -2)]
    )


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    generator: Callable[..., ProjArrangement]
    parametric: bool


BUILTINS: dict[str, CatalogEntry] = {
    "braid-a3": CatalogEntry("braid-a3", braid_a3, False),
    "pencil": CatalogEntry("pencil", pencil, True),
    "near-pencil": CatalogEntry("near-pencil", near_pencil, True),
    "generic": CatalogEntry("generic", generic, True),
    "fermat": CatalogEntry("fermat", fermat, True),
    "fig3": CatalogEntry("fig3", fig3, False),
}


def build_named(name: str, m: int | None = None) -> ProjArrangement:
    """Instantiate a catalog entry by name, with its size parameter if any."""
    if name not in BUILTINS:
        raise BadParameterError(
            f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}"
        )
    entry = BUILTINS[name]
    if entry.parametric:
        if m is None:
            raise BadParameterError(f"builtin {name!r} needs --m")
        return entry.generator(m)
    if m is not None:
        raise BadParameterError(f"builtin {name!r} takes no --m")
    return entry.generator()


def sweep_members(max_lines: int = 12) -> list[tuple[str, ProjArrangement]]:
    """Every catalog instance with at most max_lines lines, for test sweeps."""
    members: list[tuple[str, ProjArrangement]] = []
    if max_lines >= 6:
        members.append(("braid-a3", braid_a3()))
        members.append(("fig3", fig3()))
        members.append(("fermat-2", fermat(2)))
    if max_lines >= 3:
        members.append(("fermat-1", fermat(1)))
    for m in range(3, max_lines + 1):
        members.append((f"pencil-{m}", pencil(m)))
        members.append((f"near-pencil-{m}", near_pencil(m)))
        members.append((f"generic-{m}", generic(m)))
    return members
