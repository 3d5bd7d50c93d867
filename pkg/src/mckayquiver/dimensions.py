"""Path counting in the quiver algebra with relations, read off the lattice.

Each lattice position south-east of the root carries exactly one nonzero
path, so ``dim (e_i L e_j)_l`` is the number of ``j`` labels on the ``l``-th
anti-diagonal of the lattice rooted at ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coaction import CoactionPair
from .errors import MethodDisagreement
from .lattice import east_decoration, lattice_label, root_grid, south_decoration


@dataclass(frozen=True)
class Witness:
    """A border line of the rooted lattice that never meets the target label."""

    line: str  # "row" or "column"
    first_decoration: str  # decoration of the first arrow along that line

    def to_dict(self) -> dict:
        return {"line": self.line, "index": 0, "first_decoration": self.first_decoration}


@dataclass(frozen=True)
class DimensionResult:
    value: int | None  # None means infinite
    witness: Witness | None = None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    @property
    def kind(self) -> str:
        return "finite" if self.is_finite else "infinite"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "witness": self.witness.to_dict() if self.witness else None,
        }

    def __str__(self):
        if self.is_finite:
            return str(self.value)
        return f"infinite ({self.witness.line} 0 avoids the target)"


def graded_dimension(p: CoactionPair, i: int, j: int, length: int, first_east: str = "u") -> int:
    """Number of paths of the given length from ``i`` to ``j``."""
    return sum(
        1 for r in range(length + 1) if lattice_label(p, i, r, length - r, first_east) == j
    )


def quotient_dimension(p: CoactionPair, i: int, j: int, first_east: str = "u") -> DimensionResult:
    """Dimension of ``e_i L / e_i L e_j L``: paths from ``i`` not factoring through ``j``.

    A position survives iff no ``j`` lies weakly north-west of it. If row 0 or
    column 0 avoids ``j`` then, by periodicity, infinitely many positions
    survive.
    """
    n = p.period
    label = lambda r, c: lattice_label(p, i, r, c, first_east)  # noqa: E731
    row_hits = [c for c in range(n) if label(0, c) == j]
    col_hits = [r for r in range(n) if label(r, 0) == j]
    if not row_hits:
        return DimensionResult(None, Witness("row", east_decoration(0, 0, first_east)))
    if not col_hits:
        return DimensionResult(None, Witness("column", south_decoration(0, 0, first_east)))
    r0, c0 = col_hits[0], row_hits[0]
    blocked = [[False] * c0 for _ in range(r0)]
    count = 0
    for r in range(r0):
        for c in range(c0):
            hit = label(r, c) == j
            if r:
                hit = hit or blocked[r - 1][c]
            if c:
                hit = hit or blocked[r][c - 1]
            blocked[r][c] = hit
            count += not hit
    return DimensionResult(count)


def lambda_mod_e1(p: CoactionPair) -> DimensionResult:
    """Dimension of the quotient by the ideal generated by the identity vertex."""
    total = 0
    for j in range(p.order):
        d = quotient_dimension(p, j, p.group.identity)
        if not d.is_finite:
            return d
        total += d.value
    return DimensionResult(total)


@dataclass(frozen=True)
class AuslanderEvidence:
    is_isomorphism: bool
    order_method: bool
    coverage_method: bool

    def to_dict(self) -> dict:
        return {
            "iso": self.is_isomorphism,
            "order_method": self.order_method,
            "coverage_method": self.coverage_method,
        }


def identity_in_every_line(p: CoactionPair) -> bool:
    grid = root_grid(p)
    e = p.group.identity
    rows_ok = all(e in row for row in grid)
    cols_ok = all(any(row[c] == e for row in grid) for c in range(p.period))
    return rows_ok and cols_ok


def auslander_check(p: CoactionPair) -> AuslanderEvidence:
    """Decide whether the Auslander map is an isomorphism, two ways.

    ``order_method`` tests ``2|ab| == |G|``; ``coverage_method`` tests that
    every row and column of the toroidal grid meets the identity.
    """
    order_method = 2 * p.m == p.order
    coverage_method = identity_in_every_line(p)
    if order_method != coverage_method:
        raise MethodDisagreement(
            f"Auslander methods disagree: order={order_method}, coverage={coverage_method}"
        )
    return AuslanderEvidence(order_method, order_method, coverage_method)
