"""McKay quiver of the grading and its lattice / toroidal presentations.

Lattice convention: arrows point east and south. In the lattice rooted at a
vertex with ``first_east="u"``, the east arrow at ``(r, c)`` is decorated
``u`` when ``r + c`` is even and ``v`` otherwise; the south arrow carries the
other letter. Following an arrow decorated by ``u`` (resp. ``v``) multiplies
the label on the left by ``a^-1`` (resp. ``b^-1``).

The lattice rooted at ``g`` is the lattice rooted at the identity with every
label multiplied on the right by ``g``, and ``first_east="v"`` is the
transpose of ``first_east="u"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .coaction import CoactionPair


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    decoration: str


@dataclass(frozen=True)
class McKayQuiver:
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]
    # per vertex g: ((g, a^-1 g, a^-2 g), (g, b^-1 g, b^-2 g)), the u^2 and v^2 paths
    relations: tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...]

    def out_degree(self, v: int) -> int:
        return sum(1 for x in self.arrows if x.source == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for x in self.arrows if x.target == v)


def build_mckay_quiver(p: CoactionPair) -> McKayQuiver:
    g = p.group
    ai, bi = g.inv[p.a], g.inv[p.b]
    arrows = []
    relations = []
    for x in range(g.order):
        arrows.append(Arrow(x, g.mul[ai][x], "u"))
        arrows.append(Arrow(x, g.mul[bi][x], "v"))
        upath = (x, g.mul[ai][x], g.mul[ai][g.mul[ai][x]])
        vpath = (x, g.mul[bi][x], g.mul[bi][g.mul[bi][x]])
        relations.append((upath, vpath))
    return McKayQuiver(tuple(range(g.order)), tuple(arrows), tuple(relations))


def east_decoration(r: int, c: int, first_east: str = "u") -> str:
    even = (r + c) % 2 == 0
    other = "v" if first_east == "u" else "u"
    return first_east if even else other


def south_decoration(r: int, c: int, first_east: str = "u") -> str:
    return "v" if east_decoration(r, c, first_east) == "u" else "u"


@lru_cache(maxsize=128)
def root_grid(p: CoactionPair) -> tuple[tuple[int, ...], ...]:
    """Fundamental 2m x 2m domain of the u-first lattice rooted at the identity."""
    g = p.group
    step = {"u": g.inv[p.a], "v": g.inv[p.b]}
    n = p.period
    rows = [[0] * n for _ in range(n)]
    for c in range(1, n):
        rows[0][c] = g.mul[step[east_decoration(0, c - 1)]][rows[0][c - 1]]
    for r in range(1, n):
        for c in range(n):
            rows[r][c] = g.mul[step[south_decoration(r - 1, c)]][rows[r - 1][c]]
    return tuple(tuple(row) for row in rows)


def lattice_label(p: CoactionPair, start: int, r: int, c: int, first_east: str = "u") -> int:
    """Group element at ``(r, c)`` of the lattice rooted at ``start``."""
    if first_east not in ("u", "v"):
        raise ValueError(f"first_east must be 'u' or 'v', not {first_east!r}")
    if first_east == "v":
        r, c = c, r
    n = p.period
    return p.group.mul[root_grid(p)[r % n][c % n]][start]


def rooted_grid(p: CoactionPair, start: int, size: int | None = None,
                first_east: str = "u") -> list[list[int]]:
    size = p.period if size is None else size
    return [[lattice_label(p, start, r, c, first_east) for c in range(size)] for r in range(size)]


@dataclass(frozen=True)
class ToroidalLattice:
    period: int
    labels: tuple[tuple[int, ...], ...]

    def closed(self) -> list[list[int]]:
        """The (2m+1) x (2m+1) picture with the first row and column repeated."""
        rows = [list(row) + [row[0]] for row in self.labels]
        return rows + [rows[0][:]]


def toroidal_grid(p: CoactionPair) -> ToroidalLattice:
    return ToroidalLattice(p.period, root_grid(p))


# -- exports ---------------------------------------------------------------

def _namer(p: CoactionPair, names: Mapping[int, str] | None):
    if names is None:
        return p.group.name
    return lambda x: names.get(x, p.group.name(x))


def grid_text(rows: Sequence[Sequence[int]], name) -> str:
    return "".join(" ".join(name(x) for x in row) + "\n" for row in rows)


def export_quiver(p: CoactionPair, obj, fmt: str, names: Mapping[int, str] | None = None,
                  closed: bool = False) -> str:
    """Render a :class:`McKayQuiver` or :class:`ToroidalLattice` as text.

    ``fmt`` is one of ``dot``, ``grid`` or ``json``. ``dot`` needs the
    quiver; ``grid`` needs the toroidal lattice.
    """
    name = _namer(p, names)
    if fmt == "grid":
        if not isinstance(obj, ToroidalLattice):
            obj = toroidal_grid(p)
        rows = obj.closed() if closed else obj.labels
        return grid_text(rows, name)
    if fmt == "dot":
        if not isinstance(obj, McKayQuiver):
            obj = build_mckay_quiver(p)
        lines = ["digraph mckay {"]
        for v in obj.vertices:
            lines.append(f'  "{name(v)}";')
        for x in obj.arrows:
            lines.append(f'  "{name(x.source)}" -> "{name(x.target)}" [decoration="{x.decoration}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        if isinstance(obj, McKayQuiver):
            data = {
                "vertices": [name(v) for v in obj.vertices],
                "arrows": [
                    {"source": name(x.source), "target": name(x.target), "decoration": x.decoration}
                    for x in obj.arrows
                ],
                "relations": [
                    {"u": [name(v) for v in up], "v": [name(v) for v in vp]}
                    for up, vp in obj.relations
                ],
            }
        else:
            rows = obj.closed() if closed else obj.labels
            data = {"period": obj.period, "labels": [[name(x) for x in row] for row in rows]}
        return json.dumps(data) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected dot, grid or json")
