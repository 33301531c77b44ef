"""Simply-laced Dynkin diagrams and their fixed vertex labelling.

Labelling (1-based in prose, 0-based in code):

* ``A_n``: the path 1 - 2 - ... - n.
* ``D_n``: the path 1 - ... - (n-2), with n-1 and n both attached to n-2.
* ``E_n``: 1 - 3 - 4 - 5 - ... - n with 2 attached to 4, so the trivalent
  vertex is 4.

The standard orientation points every edge from the smaller to the larger
label.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        ok = (f == "A" and r >= 1) or (f == "D" and r >= 4) or (f == "E" and r in (6, 7, 8))
        if not ok:
            raise ValueError(f"no Dynkin diagram of type {f}{r}")

    @classmethod
    def parse(cls, text: str) -> "DynkinType":
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Dynkin type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def edges(self) -> list[tuple[int, int]]:
        n = self.rank
        if self.family == "A":
            return [(i, i + 1) for i in range(n - 1)]
        if self.family == "D":
            return [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
        return [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, n - 1)]

    @property
    def trivalent(self) -> int | None:
        if self.family == "D":
            return self.rank - 3
        if self.family == "E":
            return 3
        return None

    def exchange_matrix(self) -> np.ndarray:
        b = np.zeros((self.rank, self.rank), dtype=np.int64)
        for i, j in self.edges:
            b[i, j] = 1
            b[j, i] = -1
        return b

    def cartan(self) -> np.ndarray:
        c = 2 * np.eye(self.rank, dtype=np.int64)
        for i, j in self.edges:
            c[i, j] = c[j, i] = -1
        return c

    def num_positive_roots(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 1) // 2
        if self.family == "D":
            return n * (n - 1)
        return {6: 36, 7: 63, 8: 120}[n]


def all_types(max_rank: int) -> list[DynkinType]:
    out = [DynkinType("A", n) for n in range(1, max_rank + 1)]
    out += [DynkinType("D", n) for n in range(4, max_rank + 1)]
    out += [DynkinType("E", n) for n in (6, 7, 8) if n <= max_rank]
    return out


def classify_tree(n: int, edges: dict[frozenset, int]) -> tuple[DynkinType, list[int]]:
    """Match an undirected graph to an ADE diagram.

    ``edges`` maps vertex pairs to multiplicities.  Returns the type and a list
    ``labels`` with ``labels[v]`` the standard (0-based) label of vertex ``v``.
    """
    if any(m != 1 for m in edges.values()):
        raise ClassificationError("multiple edge: not simply laced")
    adj = {v: [] for v in range(n)}
    for e in edges:
        a, b = sorted(e)
        adj[a].append(b)
        adj[b].append(a)
    for v in adj:
        adj[v].sort()
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise ClassificationError("underlying graph is disconnected")
    if len(edges) != n - 1:
        raise ClassificationError("underlying graph is not a tree")

    degs = [len(adj[v]) for v in range(n)]
    branch = [v for v in range(n) if degs[v] >= 3]
    labels = [0] * n
    if not branch:
        start = min(v for v in range(n) if degs[v] <= 1)
        order = _walk(adj, start, None)
        for k, v in enumerate(order):
            labels[v] = k
        return DynkinType("A", n), labels
    if len(branch) > 1 or degs[branch[0]] != 3:
        raise ClassificationError("not a Dynkin tree")
    c = branch[0]
    arms = sorted((_walk(adj, w, c) for w in adj[c]), key=lambda arm: (len(arm), arm))
    lens = tuple(len(a) for a in arms)
    if lens[0] == 1 and lens[1] == 1:
        t = DynkinType("D", n)
        # long arm read from its far end, then the centre, then the two leaves
        long_arm = list(reversed(arms[2]))
        for k, v in enumerate(long_arm):
            labels[v] = k
        labels[c] = n - 3
        labels[arms[0][0]] = n - 2
        labels[arms[1][0]] = n - 1
        return t, labels
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        t = DynkinType("E", n)
        labels[c] = 3
        labels[arms[0][0]] = 1
        labels[arms[1][0]] = 2
        labels[arms[1][1]] = 0
        for k, v in enumerate(arms[2]):
            labels[v] = 4 + k
        return t, labels
    raise ClassificationError(f"tree with arms {lens} is not of finite type")


def _walk(adj, start, prev) -> list[int]:
    out = [start]
    while True:
        nxt = [w for w in adj[out[-1]] if w != prev]
        if not nxt:
            return out
        if len(nxt) > 1:
            raise ClassificationError("branching inside an arm")
        prev = out[-1]
        out.append(nxt[0])
