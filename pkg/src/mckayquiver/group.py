"""Concrete finite groups given by multiplication tables."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Tuple

from .presentation import LETTERS, Presentation, Word, word_to_str
from .toddcoxeter import enumerate_cosets

DEFAULT_MAX_COSETS = 100_000


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group with elements ``0..order-1``; element 0 is the identity.

    ``mul[x][y]`` is the product ``xy``. ``a`` and ``b`` are the elements
    named by the presentation generators; ``normal_form[x]`` is the
    shortlex-least word (over a < b < A < B) evaluating to ``x``.
    """

    order: int
    mul: Tuple[Tuple[int, ...], ...]
    inv: Tuple[int, ...]
    a: int
    b: int
    normal_form: Tuple[Word, ...]
    identity: int = 0
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.normal_form)})

    def letter(self, x: str) -> int:
        return {"a": self.a, "b": self.b, "A": self.inv[self.a], "B": self.inv[self.b]}[x]

    def evaluate(self, word: Iterable[str]) -> int:
        g = self.identity
        for x in word:
            g = self.mul[g][self.letter(x)]
        return g

    def power(self, x: int, n: int) -> int:
        g = self.identity
        for _ in range(n):
            g = self.mul[g][x]
        return g

    def name(self, x: int) -> str:
        return word_to_str(self.normal_form[x])

    def names(self) -> list[str]:
        return [self.name(x) for x in range(self.order)]

    def element(self, word: Word) -> int:
        """Index of the element represented by ``word`` (any word, not only normal forms)."""
        idx = self._index.get(tuple(word))
        return idx if idx is not None else self.evaluate(word)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "a": self.a,
            "b": self.b,
            "mul": [list(row) for row in self.mul],
            "inv": list(self.inv),
            "names": ["".join(w) for w in self.normal_form],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "Group":
        return cls(
            order=d["order"],
            mul=tuple(tuple(row) for row in d["mul"]),
            inv=tuple(d["inv"]),
            a=d["a"],
            b=d["b"],
            normal_form=tuple(tuple(n) for n in d["names"]),
        )


def enumerate_group(p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> Group:
    """Enumerate the group presented by ``p`` via coset enumeration.

    Raises :class:`CosetLimitExceeded` when more than ``max_cosets`` live
    cosets are needed.
    """
    table = enumerate_cosets(p.relators, max_cosets)
    n = len(table)

    # shortlex BFS from the identity coset; discovery order is the canonical order
    order = [0]
    words: dict[int, Word] = {0: ()}
    parent: dict[int, tuple[int, int]] = {}
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for col, x in enumerate(LETTERS):
            d = table[c][col]
            if d not in words:
                words[d] = words[c] + (x,)
                parent[d] = (c, col)
                order.append(d)
                queue.append(d)
    if len(order) != n:
        raise RuntimeError("internal error: coset graph is disconnected")

    relabel = {c: i for i, c in enumerate(order)}
    act = [[relabel[table[c][col]] for col in range(4)] for c in order]

    # mul[x][y] = x * y, built along the BFS tree of y: y = parent(y) * letter
    mul = [[0] * n for _ in range(n)]
    for x in range(n):
        mul[x][0] = x
    for y_coset in order[1:]:
        y = relabel[y_coset]
        pc, col = parent[y_coset]
        py = relabel[pc]
        for x in range(n):
            mul[x][y] = act[mul[x][py]][col]

    inv = [0] * n
    for x in range(n):
        row = mul[x]
        inv[x] = row.index(0)

    return Group(
        order=n,
        mul=tuple(tuple(r) for r in mul),
        inv=tuple(inv),
        a=act[0][0],
        b=act[0][1],
        normal_form=tuple(words[c] for c in order),
    )


def group_from_text(text: str, max_cosets: int = DEFAULT_MAX_COSETS) -> Group:
    from .presentation import parse_presentation

    return enumerate_group(parse_presentation(text), max_cosets)


def element_order(g: Group, x: int) -> int:
    n, y = 1, x
    while y != g.identity:
        y = g.mul[y][x]
        n += 1
    return n


def generated_subgroup(g: Group, gens: Iterable[int]) -> frozenset[int]:
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    seen = {g.identity}
    queue = deque([g.identity])
    # finite group: closure under right multiplication by gens suffices
    while queue:
        x = queue.popleft()
        for s in gens:
            y = g.mul[x][s]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def is_abelian(g: Group) -> bool:
    return all(g.mul[x][y] == g.mul[y][x] for x in range(g.order) for y in range(x))
