"""Seeds (B, C), their mutation, and breadth-first walks of the exchange pattern.

Conventions: ``b[i][j] > 0`` means ``b[i][j]`` arrows ``i -> j``; the
c-vectors are the COLUMNS of ``C``.  Vertex indices are 0-based in code and
1-based in every file format and on the command line.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .dynkin import ClassificationError, DynkinType, classify_tree


class SkewSymmetryError(ValueError):
    pass


def exchange_matrix(b) -> np.ndarray:
    """Validate and normalise an exchange matrix."""
    arr = np.array(b, dtype=object)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise SkewSymmetryError("exchange matrix must be square")
    if any(int(x) != x for x in arr.ravel()):
        raise SkewSymmetryError("exchange matrix must have integer entries")
    arr = np.array([[int(x) for x in row] for row in arr], dtype=object).reshape(arr.shape)
    if not (arr == -arr.T).all():
        raise SkewSymmetryError("exchange matrix is not skew-symmetric")
    return kernels.normalize(arr.astype(object))


def opposite(b) -> np.ndarray:
    """The opposite quiver, ``-B`` (equal to ``B^T``)."""
    return kernels.normalize(-np.asarray(b))


def _freeze(a: np.ndarray) -> np.ndarray:
    a = a.copy() if a.flags.writeable else a
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class Seed:
    b: np.ndarray
    c: np.ndarray
    word: tuple[int, ...] = ()
    _key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "b", _freeze(kernels.normalize(np.asarray(self.b))))
        object.__setattr__(self, "c", _freeze(kernels.normalize(np.asarray(self.c))))
        object.__setattr__(self, "word", tuple(int(k) for k in self.word))
        object.__setattr__(self, "_key", seed_key(self.b, self.c))

    @property
    def n(self) -> int:
        return self.b.shape[0]

    @property
    def key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, Seed) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def c_vector(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.c[:, j])

    def c_vectors(self) -> list[tuple[int, ...]]:
        return [self.c_vector(j) for j in range(self.n)]

    def to_json(self) -> dict:
        return {
            "b": [[int(x) for x in row] for row in self.b],
            "c": [[int(x) for x in row] for row in self.c],
            "word": [k + 1 for k in self.word],
        }

    def digest(self) -> str:
        """Stable short hash of the exact pair (B, C)."""
        payload = repr((self.b.shape[0], [int(x) for x in self.b.ravel()], [int(x) for x in self.c.ravel()]))
        return hashlib.blake2b(payload.encode(), digest_size=8).hexdigest()


def seed_key(b: np.ndarray, c: np.ndarray):
    if b.dtype == np.int64 and c.dtype == np.int64:
        return (b.shape[0], b.tobytes(), c.tobytes())
    return (b.shape[0], tuple(int(x) for x in b.ravel()), tuple(int(x) for x in c.ravel()))


def initial_seed(b) -> Seed:
    """Principal coefficients: ``(B, I, ())``."""
    b = exchange_matrix(b)
    n = b.shape[0]
    return Seed(b, np.eye(n, dtype=np.int64), ())


def mutate_seed(s: Seed, k: int) -> Seed:
    if not 0 <= k < s.n:
        raise IndexError(f"mutation index {k} out of range for rank {s.n}")
    nb, nc = kernels.mutate_arrays(s.b, s.c, k)
    return Seed(nb, nc, s.word + (k,))


def mutate_word(s: Seed, word: Sequence[int]) -> Seed:
    for k in word:
        s = mutate_seed(s, k)
    return s


def is_sign_coherent(c: np.ndarray) -> bool:
    for j in range(c.shape[1]):
        col = c[:, j]
        if not col.any():
            return False
        if (col > 0).any() and (col < 0).any():
            return False
    return True


def det(c: np.ndarray) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [[int(x) for x in row] for row in c]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


class SeedEnumeration(NamedTuple):
    seeds: list[Seed]
    exhaustive: bool
    edges: list[tuple[int, int, int]]  # (parent index, child index, mutation index)


def _expand(parents: list[Seed]) -> list[list[tuple[np.ndarray, np.ndarray]]]:
    return [kernels.all_children(s.b, s.c) for s in parents]


def enumerate_seeds(b, budget: int = 100_000, workers: int = 1, edges: bool = False) -> SeedEnumeration:
    """Breadth-first walk from the initial seed, deduplicated on the exact (B, C).

    Seeds come out ordered by (depth, mutation word), each carrying the first
    word that reached it.  ``exhaustive`` is true iff the frontier emptied
    before ``budget`` seeds were collected.  With ``workers > 1`` the frontier
    is expanded in parallel chunks and merged in order, so the result does not
    depend on the worker count.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    root = initial_seed(b)
    index = {root.key: 0}
    seeds = [root]
    out_edges: list[tuple[int, int, int]] = []
    frontier = [0]
    exhaustive = True
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier and exhaustive:
            parents = [seeds[i] for i in frontier]
            if pool is not None and len(parents) > 1:
                size = -(-len(parents) // workers)
                chunks = [parents[i:i + size] for i in range(0, len(parents), size)]
                expanded = [row for part in pool.map(_expand, chunks) for row in part]
            else:
                expanded = _expand(parents)
            nxt = []
            for pidx, parent, children in zip(frontier, parents, expanded):
                for k, (nb, nc) in enumerate(children):
                    key = seed_key(nb, nc)
                    cidx = index.get(key)
                    if cidx is None:
                        if len(seeds) >= budget:
                            exhaustive = False
                            break
                        cidx = len(seeds)
                        index[key] = cidx
                        seeds.append(Seed(nb, nc, parent.word + (k,)))
                        nxt.append(cidx)
                    if edges and pidx < cidx:
                        out_edges.append((pidx, cidx, k))
                if not exhaustive:
                    break
            frontier = nxt
    finally:
        if pool is not None:
            pool.shutdown()
    return SeedEnumeration(seeds, exhaustive, out_edges)


class CVectorSet(NamedTuple):
    vectors: frozenset
    exhaustive: bool


def c_vectors(b, budget: int = 100_000, workers: int = 1) -> CVectorSet:
    """All c-vectors (both signs) over the enumerated seeds."""
    en = enumerate_seeds(b, budget, workers)
    out = {s.c_vector(j) for s in en.seeds for j in range(s.n)}
    return CVectorSet(frozenset(out), en.exhaustive)


def positive_c_vectors(b, budget: int = 100_000, workers: int = 1) -> CVectorSet:
    allc = c_vectors(b, budget, workers)
    pos = frozenset(v for v in allc.vectors if all(x >= 0 for x in v))
    return CVectorSet(pos, allc.exhaustive)


# -- finite type ------------------------------------------------------------------


class Classification(NamedTuple):
    dynkin: DynkinType
    word: tuple[int, ...]          # mutations taking the input to an acyclic member
    acyclic_b: np.ndarray
    labels: list[int]              # vertex -> standard Dynkin label


def is_acyclic(b) -> bool:
    b = np.asarray(b)
    n = b.shape[0]
    indeg = [int(sum(1 for i in range(n) if b[i, j] > 0)) for j in range(n)]
    todo = [j for j in range(n) if indeg[j] == 0]
    seen = 0
    while todo:
        i = todo.pop()
        seen += 1
        for j in range(n):
            if b[i, j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    todo.append(j)
    return seen == n


def _b_key(b: np.ndarray):
    return tuple(int(x) for x in b.ravel())


def _mutate_b(b: np.ndarray, k: int) -> np.ndarray:
    nb, _ = kernels.mutate_arrays(b, np.zeros((0, b.shape[0]), dtype=np.int64), k)
    return nb


def _edges(b: np.ndarray) -> dict:
    n = b.shape[0]
    return {frozenset((i, j)): abs(int(b[i, j])) for i in range(n) for j in range(i + 1, n) if b[i, j] != 0}


def classify(b, budget: int = 100_000) -> Classification | str:
    """Breadth-first walk of the mutation class (dedup on B).

    Returns ``"infinite"`` as soon as some member has ``|b_ij b_ji| >= 4``,
    ``"budget-exhausted"`` when the cap is hit first, and otherwise the
    Dynkin type read off an acyclic member.
    """
    b0 = exchange_matrix(b)
    n = b0.shape[0]
    if is_acyclic(b0):
        # an acyclic quiver is of finite type iff its graph is a simply-laced Dynkin tree
        try:
            dtype, labels = classify_tree(n, _edges(b0))
        except ClassificationError as exc:
            if "disconnected" in str(exc):
                raise
            return "infinite"
        return Classification(dtype, (), b0, labels)
    seen = {_b_key(b0): ()}
    queue = [(b0, ())]
    head = 0
    acyclic = None
    while head < len(queue):
        cur, word = queue[head]
        head += 1
        if any(abs(int(cur[i, j]) * int(cur[j, i])) >= 4 for i in range(n) for j in range(i + 1, n)):
            return "infinite"
        if acyclic is None and is_acyclic(cur):
            acyclic = (cur, word)
        for k in range(n):
            nb = _mutate_b(cur, k)
            key = _b_key(nb)
            if key not in seen:
                if len(seen) >= budget:
                    return "budget-exhausted"
                seen[key] = word + (k,)
                queue.append((nb, word + (k,)))
    if acyclic is None:
        raise ClassificationError("finite mutation class without an acyclic member")
    cur, word = acyclic
    dtype, labels = classify_tree(n, _edges(cur))
    return Classification(dtype, word, cur, labels)


def detect_finite_type(b, budget: int = 100_000) -> DynkinType | str:
    res = classify(b, budget)
    return res if isinstance(res, str) else res.dynkin
