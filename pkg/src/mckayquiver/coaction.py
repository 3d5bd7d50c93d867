"""Admissible gradings deg u = a, deg v = b on k<u,v>/(u^2 - v^2)."""

from __future__ import annotations

from dataclasses import dataclass

from . import errors
from .group import Group, element_order, generated_subgroup, is_abelian


@dataclass(frozen=True, eq=False)
class CoactionPair:
    group: Group
    a: int
    b: int
    m: int  # order of ab (equivalently of ba)

    @property
    def period(self) -> int:
        return 2 * self.m

    @property
    def order(self) -> int:
        return self.group.order

    def swapped(self) -> "CoactionPair":
        return validate_pair(self.group, self.b, self.a)


def validate_pair(g: Group, a: int | None = None, b: int | None = None) -> CoactionPair:
    """Check the grading hypotheses and cache ``m = |ab|``.

    ``a`` and ``b`` default to the presentation generators of ``g``.
    """
    a = g.a if a is None else a
    b = g.b if b is None else b
    if not (0 <= a < g.order and 0 <= b < g.order):
        raise ValueError("a and b must be element indices of the group")
    if g.order == 1:
        raise errors.TrivialGroup("the trivial group admits no non-abelian grading")
    if is_abelian(g):
        raise errors.AbelianGroup(f"group of order {g.order} is abelian")
    if g.mul[a][a] != g.mul[b][b]:
        raise errors.MissingSquareRelation("a^2 != b^2 in the group")
    if len(generated_subgroup(g, [a, b])) != g.order:
        raise errors.NotInnerFaithful("a and b do not generate the group")

    m = element_order(g, g.mul[a][b])
    if m != element_order(g, g.mul[b][a]):
        raise errors.McKayError("internal error: |ab| != |ba|")
    # m = 1 would mean b = a^-1, so the group is cyclic; excluded above
    elements, distinct = alternating_list(g, g.inv[a], g.inv[b], m)
    if not distinct or g.order % len(set(elements)) != 0:
        raise errors.McKayError("internal error: alternating list inconsistent with |ab|")
    return CoactionPair(g, a, b, m)


def alternating_list(g: Group, x: int, y: int, k: int) -> tuple[list[int], bool]:
    """The list ``1, x, xy, xyx, ..., (xy)^(k-1), (xy)^(k-1) x`` and whether it is repetition-free.

    For non-commuting ``x, y`` the entries are distinct iff ``|xy| >= k``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    out = [g.identity]
    cur = g.identity
    for i in range(2 * k - 1):
        cur = g.mul[cur][x if i % 2 == 0 else y]
        out.append(cur)
    return out, len(set(out)) == len(out)
