"""HLT coset enumeration over the trivial subgroup, with lookahead.

Columns of the coset table are indexed 0..3 for ``a, b, A, B``; the inverse
column of ``x`` is ``x ^ 2``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import CosetLimitExceeded, McKayError
from .presentation import Word

_COL = {"a": 0, "b": 1, "A": 2, "B": 3}
NGENS = 4


def _inv(x: int) -> int:
    return x ^ 2


class _TableFull(Exception):
    pass


class CosetTable:
    def __init__(self, relators: Sequence[Word], max_cosets: int):
        if max_cosets < 1:
            raise ValueError("max_cosets must be >= 1")
        self.max_cosets = max_cosets
        self.relators = [[_COL[x] for x in r] for r in relators if r]
        self.table: list[list[int]] = [[-1] * NGENS]
        self.parent: list[int] = [0]
        self.live = 1

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, x: int) -> None:
        if self.live >= self.max_cosets:
            raise _TableFull
        new = len(self.table)
        self.table.append([-1] * NGENS)
        self.parent.append(new)
        self.live += 1
        self.table[c][x] = new
        self.table[new][_inv(x)] = c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k != l:
            lo, hi = min(k, l), max(k, l)
            self.parent[hi] = lo
            self.live -= 1
            queue.append(hi)

    def coincidence(self, k: int, l: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(k, l, queue)
        while queue:
            g = queue.pop(0)
            for x in range(NGENS):
                d = table[g][x]
                if d < 0:
                    continue
                table[d][_inv(x)] = -1
                mu, nu = self.rep(g), self.rep(d)
                if table[mu][x] >= 0:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][_inv(x)] >= 0:
                    self._merge(mu, table[nu][_inv(x)], queue)
                else:
                    table[mu][x] = nu
                    table[nu][_inv(x)] = mu

    def scan(self, c: int, word: list[int], fill: bool) -> None:
        table = self.table
        f, i = c, 0
        b, j = c, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][_inv(word[j])] >= 0:
                b = table[b][_inv(word[j])]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][_inv(word[i])] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    def lookahead(self) -> None:
        for c in range(len(self.table)):
            for r in self.relators:
                if not self.is_live(c):
                    break
                self.scan(c, r, fill=False)

    def compact(self) -> None:
        """Renumber live cosets consecutively, preserving their order."""
        new_index = {}
        for c in range(len(self.table)):
            if self.is_live(c):
                new_index[c] = len(new_index)
        rows = []
        for c in new_index:
            rows.append([new_index[self.rep(d)] if d >= 0 else -1 for d in self.table[c]])
        self.table = rows
        self.parent = list(range(len(rows)))
        self.live = len(rows)

    def run(self) -> None:
        c = 0
        while c < len(self.table):
            try:
                if self.is_live(c):
                    for r in self.relators:
                        self.scan(c, r, fill=True)
                        if not self.is_live(c):
                            break
                    if self.is_live(c):
                        for x in range(NGENS):
                            if self.table[c][x] < 0:
                                self.define(c, x)
                c += 1
            except _TableFull:
                before = self.live
                self.lookahead()
                if self.live >= before:
                    raise CosetLimitExceeded(self.max_cosets) from None
                # compaction preserves order, so position c maps to the
                # count of live cosets below it
                c = sum(1 for k in range(c) if self.is_live(k))
                self.compact()
        self.compact()
        self._check_closed()

    def _check_closed(self) -> None:
        for c, row in enumerate(self.table):
            for x, d in enumerate(row):
                if d < 0 or self.table[d][_inv(x)] != c:
                    raise McKayError("internal error: incomplete coset table")
            for r in self.relators:
                e = c
                for x in r:
                    e = self.table[e][x]
                if e != c:
                    raise McKayError("internal error: relator does not close")


def enumerate_cosets(relators: Sequence[Word], max_cosets: int) -> list[list[int]]:
    """Complete, compacted coset table of the trivial subgroup; coset 0 is the identity."""
    t = CosetTable(relators, max_cosets)
    t.run()
    return t.table
