"""The invariant ring as the algebra of closed paths at the identity vertex.

Positions ``(r, c)`` of the lattice rooted at the identity whose label is the
identity form a basis of the invariant ring, graded by ``r + c``. A position
is a product of two closed paths of positive length exactly when another
identity position (other than the origin and itself) lies weakly north-west
of it, because the unique path to it may be routed through that point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coaction import CoactionPair
from .errors import MethodDisagreement, ValidationError
from .group import element_order
from .lattice import east_decoration, root_grid, south_decoration

Position = tuple[int, int]


@dataclass(frozen=True)
class OccurrenceMonoid:
    period: int
    box_elements: tuple[Position, ...]  # identity positions in [0, 2m]^2, sorted

    def __contains__(self, pos: Position) -> bool:
        return pos in set(self.box_elements)


def _is_identity(p: CoactionPair, r: int, c: int) -> bool:
    n = p.period
    return root_grid(p)[r % n][c % n] == p.group.identity


def occurrence_monoid(p: CoactionPair) -> OccurrenceMonoid:
    n = p.period
    box = tuple(
        (r, c) for r in range(n + 1) for c in range(n + 1) if _is_identity(p, r, c)
    )
    return OccurrenceMonoid(n, box)


def canonical_monomial(p: CoactionPair, pos: Position) -> str:
    """Decoration word of the east-then-south staircase path to ``pos``."""
    r, c = pos
    if not _is_identity(p, r, c):
        raise ValidationError(f"position {pos} is not labelled by the identity")
    word = [east_decoration(0, k) for k in range(c)]
    word += [south_decoration(k, c) for k in range(r)]
    return "".join(word)


def compress_monomial(word: str) -> str:
    """Readable form of a u/v word: runs of ``uv``/``vu`` pairs and powers."""
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        pair = word[i:i + 2]
        if len(pair) == 2 and pair[0] != pair[1]:
            k = 0
            while word[i + 2 * k:i + 2 * k + 2] == pair:
                k += 1
            if k > 1:
                out.append(f"({pair})^{k}")
                i += 2 * k
                continue
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "".join(out)


@dataclass(frozen=True)
class BasisElement:
    pos: Position
    monomial: str

    @property
    def degree(self) -> int:
        return self.pos[0] + self.pos[1]

    def to_dict(self) -> dict:
        return {"pos": list(self.pos), "degree": self.degree, "monomial": self.monomial}


def hilbert_basis(p: CoactionPair) -> list[BasisElement]:
    """Minimal generators, sorted by degree then position.

    Every generator lies in the box ``[0, 2m]^2``: beyond it, ``(2m, 0)`` or
    ``(0, 2m)`` sits weakly north-west.
    """
    box = occurrence_monoid(p).box_elements
    nonzero = [q for q in box if q != (0, 0)]
    basis = []
    for x in nonzero:
        if not any(q != x and q[0] <= x[0] and q[1] <= x[1] for q in nonzero):
            basis.append(x)
    basis.sort(key=lambda q: (q[0] + q[1], q))
    return [BasisElement(q, canonical_monomial(p, q)) for q in basis]


def hilbert_series(p: CoactionPair, max_degree: int) -> list[int]:
    """Coefficients ``dim`` of the invariant ring in degrees ``0..max_degree``."""
    return [
        sum(1 for r in range(d + 1) if _is_identity(p, r, d - r))
        for d in range(max_degree + 1)
    ]


@dataclass(frozen=True)
class Relation:
    """``sum lhs[k] * h_k == sum rhs[k] * h_k`` as lattice positions."""

    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    pos: Position

    def to_dict(self) -> dict:
        return {"lhs": list(self.lhs), "rhs": list(self.rhs), "pos": list(self.pos)}

    def __str__(self):
        def side(cs):
            terms = [(f"{c}*h{k + 1}" if c > 1 else f"h{k + 1}") for k, c in enumerate(cs) if c]
            return " + ".join(terms)
        return f"{side(self.lhs)} = {side(self.rhs)}"


def default_relation_bound(basis: list[BasisElement]) -> int:
    if not basis:
        return 4
    degrees = [h.degree for h in basis]
    return max(4, max(degrees) // min(degrees))


def relation_search(p: CoactionPair, bound: int | None = None,
                    basis: list[BasisElement] | None = None) -> list[Relation]:
    """Coincidences between non-negative combinations of basis positions.

    Only coefficient vectors with entries ``<= bound`` and disjoint supports
    are considered; a relation is dropped when a smaller one divides it.
    Results are ordered by degree.
    """
    basis = hilbert_basis(p) if basis is None else basis
    bound = default_relation_bound(basis) if bound is None else bound
    if bound < 1:
        raise ValueError("bound must be positive")
    positions = [h.pos for h in basis]
    by_pos: dict[Position, list[tuple[int, ...]]] = {}
    for coeffs in itertools.product(range(bound + 1), repeat=len(positions)):
        if not any(coeffs):
            continue
        r = sum(k * q[0] for k, q in zip(coeffs, positions))
        c = sum(k * q[1] for k, q in zip(coeffs, positions))
        by_pos.setdefault((r, c), []).append(coeffs)

    found = []
    for pos, vecs in by_pos.items():
        for u, w in itertools.combinations(sorted(vecs), 2):
            if all(x == 0 or y == 0 for x, y in zip(u, w)):
                found.append(Relation(u, w, pos))

    def divides(small: Relation, big: Relation) -> bool:
        for s1, s2 in ((small.lhs, small.rhs), (small.rhs, small.lhs)):
            if all(x <= y for x, y in zip(s1, big.lhs)) and all(x <= y for x, y in zip(s2, big.rhs)):
                return True
        return False

    minimal = [rel for rel in found if not any(o is not rel and divides(o, rel) for o in found)]
    minimal.sort(key=lambda rel: (sum(rel.pos), rel.pos, rel.lhs))
    return minimal


@dataclass(frozen=True)
class RegularityEvidence:
    is_regular: bool
    order_method: bool
    basis_method: bool

    def to_dict(self) -> dict:
        return {"regular": self.is_regular, "order_method": self.order_method,
                "basis_method": self.basis_method}


def regularity_check(p: CoactionPair, basis: list[BasisElement] | None = None) -> RegularityEvidence:
    """AS-regularity of the invariant ring: ``|G| == 4m^2`` versus a two-element basis."""
    basis = hilbert_basis(p) if basis is None else basis
    order_method = p.order == 4 * p.m * p.m
    basis_method = len(basis) == 2
    if order_method != basis_method:
        raise MethodDisagreement(
            f"regularity methods disagree: order={order_method}, basis={basis_method}"
        )
    return RegularityEvidence(order_method, order_method, basis_method)


def u_power_position(k: int) -> Position:
    """Lattice position reached by the word ``u^k`` from the identity."""
    return (k // 2, (k + 1) // 2)


def smallest_invariant_u_power(p: CoactionPair) -> int:
    """Least ``k > 0`` with ``u^k`` invariant, found on the lattice."""
    k = 1
    while not _is_identity(p, *u_power_position(k)):
        k += 1
    if k != element_order(p.group, p.a):
        raise MethodDisagreement("u-power on the lattice disagrees with the order of a")
    return k


def annotate(p: CoactionPair, basis: list[BasisElement], relations: list[Relation]) -> str | None:
    """Free-text name of the invariant ring for a few recognisable shapes."""
    if len(basis) == 2 and not relations:
        return "polynomial ring in two variables"
    if len(basis) == 3 and len(relations) == 1:
        rel = relations[0]
        for one, many in ((rel.lhs, rel.rhs), (rel.rhs, rel.lhs)):
            if sorted(one) == [0, 1, 1] and sum(1 for x in many if x) == 1:
                n = max(many)
                if n >= 2:
                    return f"type A_{n - 1} singularity (xy = z^{n})"
    return None


@dataclass
class InvariantReport:
    basis: list[BasisElement]
    regularity: RegularityEvidence
    series: list[int]
    relations: list[Relation]
    relation_bound: int
    annotation: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def degrees(self) -> list[int]:
        return [h.degree for h in self.basis]

    @property
    def is_regular(self) -> bool:
        return self.regularity.is_regular

    def to_dict(self) -> dict:
        return {
            "basis": [h.to_dict() for h in self.basis],
            "regular": self.is_regular,
            "regularity": self.regularity.to_dict(),
            "series": self.series,
            "relations": [r.to_dict() for r in self.relations],
            "relation_bound": self.relation_bound,
            "annotation": self.annotation,
        }


def invariant_report(p: CoactionPair, max_degree: int | None = None,
                     relation_bound: int | None = None) -> InvariantReport:
    basis = hilbert_basis(p)
    bound = default_relation_bound(basis) if relation_bound is None else relation_bound
    relations = relation_search(p, bound, basis)
    max_degree = 2 * p.period if max_degree is None else max_degree
    return InvariantReport(
        basis=basis,
        regularity=regularity_check(p, basis),
        series=hilbert_series(p, max_degree),
        relations=relations,
        relation_bound=bound,
        annotation=annotate(p, basis, relations),
    )
