"""Representations of acyclic quivers over the rationals.

Conventions
-----------
A representation ``M`` puts a vector space ``M_i`` at each vertex and a matrix
``M_a`` of shape ``dims[j] x dims[i]`` on each arrow ``a: i -> j``.  The
indecomposable projective ``P(i)`` has ``P(i)_l`` spanned by the paths from
``i`` to ``l``, so ``Hom(P(i), X) = X_i`` and an arrow ``a: i -> j`` induces a
morphism ``P(j) -> P(i)``.  Dually ``I(i)_l`` is the dual of the paths from
``l`` to ``i``.

Hom and Ext^1 are read off the standard two-term complex

    delta: (+)_i Hom(M_i, N_i) -> (+)_{a: i->j} Hom(M_i, N_j),
    phi |-> phi_j M_a - N_a phi_i,

whose kernel is Hom(M, N) and whose cokernel is Ext^1(M, N).  The cokernel is
the same as ``coker(Hom(P_0, N) -> Hom(P_1, N))`` for the standard projective
resolution, under ``Hom(P(i) (x) V, N) = Hom_k(V, N_i)``.
"""

from __future__ import annotations

import random
from collections import deque
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import linalg as la
from .linalg import fmpq, fmpq_mat


class QuiverError(ValueError):
    pass


class Quiver:
    """A finite acyclic quiver with numbered arrows."""

    def __init__(self, n: int, arrows: Sequence[tuple[int, int]]):
        self.n = int(n)
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        for s, t in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise QuiverError(f"arrow {s}->{t} out of range for {n} vertices")
            if s == t:
                raise QuiverError(f"loop at vertex {s}")
        self.out_arrows = [[a for a, (s, _) in enumerate(self.arrows) if s == i] for i in range(n)]
        self.in_arrows = [[a for a, (_, t) in enumerate(self.arrows) if t == i] for i in range(n)]
        if not self.is_acyclic():
            raise QuiverError("quiver has an oriented cycle")
        self._paths = [self._paths_from(i) for i in range(n)]

    @classmethod
    def from_exchange_matrix(cls, b) -> "Quiver":
        b = np.asarray(b, dtype=object)
        n = b.shape[0]
        arrows = []
        for i in range(n):
            for j in range(n):
                if b[i, j] > 0:
                    arrows.extend([(i, j)] * int(b[i, j]))
        return cls(n, arrows)

    def exchange_matrix(self) -> np.ndarray:
        b = np.zeros((self.n, self.n), dtype=np.int64)
        for s, t in self.arrows:
            b[s, t] += 1
            b[t, s] -= 1
        return b

    def opposite(self) -> "Quiver":
        return Quiver(self.n, [(t, s) for s, t in self.arrows])

    def is_acyclic(self) -> bool:
        indeg = [len(self.in_arrows[i]) for i in range(self.n)]
        todo = [i for i in range(self.n) if indeg[i] == 0]
        seen = 0
        while todo:
            i = todo.pop()
            seen += 1
            for a in self.out_arrows[i]:
                t = self.arrows[a][1]
                indeg[t] -= 1
                if indeg[t] == 0:
                    todo.append(t)
        return seen == self.n

    def _paths_from(self, i: int) -> list[tuple[tuple[int, ...], int]]:
        out = [((), i)]
        stack = [((), i)]
        while stack:
            p, v = stack.pop()
            for a in self.out_arrows[v]:
                q = (p + (a,), self.arrows[a][1])
                out.append(q)
                stack.append(q)
        out.sort(key=lambda pv: (len(pv[0]), pv[0]))
        return out

    def paths(self, i: int, j: int) -> list[tuple[int, ...]]:
        """Paths from ``i`` to ``j`` as tuples of arrow indices, in a fixed order."""
        return [p for p, v in self._paths[i] if v == j]

    def cartan(self) -> np.ndarray:
        """``cartan[i, j]`` = number of paths from ``j`` to ``i`` = ``dim P(j)_i``."""
        c = np.zeros((self.n, self.n), dtype=np.int64)
        for j in range(self.n):
            for _, v in self._paths[j]:
                c[v, j] += 1
        return c

    def coxeter(self) -> np.ndarray:
        """Integer matrix sending ``dim M`` to ``dim tau M`` for non-projective ``M``."""
        c = la.mat(self.cartan().tolist())
        phi = -(c.transpose() * c.inv())
        return np.array([[int(phi[i, j]) for j in range(self.n)] for i in range(self.n)], dtype=np.int64)

    def underlying_edges(self) -> dict[frozenset, int]:
        edges: dict[frozenset, int] = {}
        for s, t in self.arrows:
            key = frozenset((s, t))
            edges[key] = edges.get(key, 0) + 1
        return edges

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.n == other.n and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.n, self.arrows))

    def __repr__(self):
        arrows = ", ".join(f"{s}->{t}" for s, t in self.arrows)
        return f"Quiver({self.n}, [{arrows}])"


def euler_form(quiver: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """``sum_i d_i e_i - sum_{a: i->j} d_i e_j``."""
    val = sum(int(x) * int(y) for x, y in zip(d, e))
    for s, t in quiver.arrows:
        val -= int(d[s]) * int(e[t])
    return val


class Representation:
    """A quiver representation with exact rational matrices."""

    __slots__ = ("quiver", "dims", "maps", "name", "__weakref__")

    def __init__(self, quiver: Quiver, dims: Sequence[int], maps: Sequence[fmpq_mat], name: str | None = None):
        dims = tuple(int(d) for d in dims)
        if len(dims) != quiver.n or any(d < 0 for d in dims):
            raise ValueError(f"bad dimension vector {dims}")
        maps = tuple(maps)
        if len(maps) != len(quiver.arrows):
            raise ValueError("one matrix per arrow required")
        for a, ((s, t), m) in enumerate(zip(quiver.arrows, maps)):
            if (m.nrows(), m.ncols()) != (dims[t], dims[s]):
                raise ValueError(
                    f"arrow {a} ({s}->{t}) has a {m.nrows()}x{m.ncols()} matrix, "
                    f"expected {dims[t]}x{dims[s]}"
                )
        self.quiver = quiver
        self.dims = dims
        self.maps = maps
        self.name = name

    @classmethod
    def from_lists(cls, quiver: Quiver, dims, maps, name=None) -> "Representation":
        mats = []
        for (s, t), m in zip(quiver.arrows, maps):
            mats.append(la.mat(m, dims[t], dims[s]))
        return cls(quiver, dims, mats, name)

    @classmethod
    def zero(cls, quiver: Quiver) -> "Representation":
        return cls(quiver, [0] * quiver.n, [la.zeros(0, 0) for _ in quiver.arrows], "0")

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_map(self, path: Sequence[int]) -> fmpq_mat:
        """Matrix of the composite along ``path`` (arrow indices in travel order)."""
        if not path:
            raise ValueError("empty path has no well-defined endpoints here")
        m = self.maps[path[0]]
        for a in path[1:]:
            m = self.maps[a] * m
        return m

    def direct_sum(self, other: "Representation") -> "Representation":
        maps = []
        for (s, t), m1, m2 in zip(self.quiver.arrows, self.maps, other.maps):
            m = la.zeros(self.dims[t] + other.dims[t], self.dims[s] + other.dims[s])
            for i in range(m1.nrows()):
                for j in range(m1.ncols()):
                    m[i, j] = m1[i, j]
            for i in range(m2.nrows()):
                for j in range(m2.ncols()):
                    m[self.dims[t] + i, self.dims[s] + j] = m2[i, j]
            maps.append(m)
        return Representation(self.quiver, [x + y for x, y in zip(self.dims, other.dims)], maps)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Representation{label} dims={self.dims}>"


class LinMap:
    """A morphism of representations, one block per vertex (``N_i x M_i``)."""

    __slots__ = ("source", "target", "blocks")

    def __init__(self, source: Representation, target: Representation, blocks: Sequence[fmpq_mat]):
        self.source = source
        self.target = target
        self.blocks = tuple(blocks)

    @classmethod
    def zero(cls, source, target) -> "LinMap":
        return cls(source, target, [la.zeros(target.dims[i], source.dims[i]) for i in range(source.quiver.n)])

    @classmethod
    def identity(cls, m: Representation) -> "LinMap":
        return cls(m, m, [la.identity(d) for d in m.dims])

    @classmethod
    def from_vector(cls, source, target, vec: Sequence) -> "LinMap":
        blocks = []
        pos = 0
        for i in range(source.quiver.n):
            r, c = target.dims[i], source.dims[i]
            blocks.append(la.mat([vec[pos + k * c: pos + (k + 1) * c] for k in range(r)], r, c))
            pos += r * c
        return cls(source, target, blocks)

    def vector(self) -> list:
        out = []
        for b in self.blocks:
            out.extend(la.entries(b))
        return out

    def compose(self, first: "LinMap") -> "LinMap":
        """``self o first``."""
        return LinMap(first.source, self.target, [g * f for g, f in zip(self.blocks, first.blocks)])

    def __add__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.source, self.target, [x + y for x, y in zip(self.blocks, other.blocks)])

    def scale(self, c) -> "LinMap":
        return LinMap(self.source, self.target, [b * fmpq(c) for b in self.blocks])

    def is_zero(self) -> bool:
        return all(la.is_zero(b) for b in self.blocks)

    def is_intertwining(self) -> bool:
        M, N = self.source, self.target
        for a, (s, t) in enumerate(M.quiver.arrows):
            if self.blocks[t] * M.maps[a] != N.maps[a] * self.blocks[s]:
                return False
        return True

    def rank_vector(self) -> tuple[int, ...]:
        return tuple(la.rank(b) for b in self.blocks)


# -- cocycles ---------------------------------------------------------------
# An element of Ext^1(M, N) is represented by a tuple of matrices z_a of shape
# N_j x M_i, one per arrow a: i -> j (the extension with middle term
# E_a = [[N_a, z_a], [0, M_a]]).


def cocycle_from_vector(M: Representation, N: Representation, vec: Sequence) -> tuple:
    out = []
    pos = 0
    for s, t in M.quiver.arrows:
        r, c = N.dims[t], M.dims[s]
        out.append(la.mat([vec[pos + k * c: pos + (k + 1) * c] for k in range(r)], r, c))
        pos += r * c
    return tuple(out)


def cocycle_vector(z: Sequence[fmpq_mat]) -> list:
    out = []
    for m in z:
        out.extend(la.entries(m))
    return out


def push_cocycle(u: LinMap, z: Sequence[fmpq_mat]) -> tuple:
    """Covariant action of ``u: N -> N'`` on Ext^1(M, N)."""
    arrows = u.source.quiver.arrows
    return tuple(u.blocks[t] * m for (s, t), m in zip(arrows, z))


def pull_cocycle(z: Sequence[fmpq_mat], v: LinMap) -> tuple:
    """Contravariant action of ``v: M' -> M`` on Ext^1(M, N)."""
    arrows = v.source.quiver.arrows
    return tuple(m * v.blocks[s] for (s, t), m in zip(arrows, z))


def _obj(m: fmpq_mat) -> np.ndarray:
    return la.to_object_array(m)


def _eye(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    out[...] = la.ZERO
    for i in range(n):
        out[i, i] = la.ONE
    return out


def delta_matrix(M: Representation, N: Representation) -> fmpq_mat:
    """Matrix of ``phi |-> (phi_j M_a - N_a phi_i)_a`` in row-major block coordinates.

    Column ``off_i + p * M_i + r`` is entry ``(p, r)`` of ``phi_i``; row
    ``roff_a + p * M_s + r`` is entry ``(p, r)`` of the component at ``a: s -> t``.
    """
    q = M.quiver
    if N.quiver != q:
        raise QuiverError("representations live on different quivers")
    col_off = []
    pos = 0
    for i in range(q.n):
        col_off.append(pos)
        pos += N.dims[i] * M.dims[i]
    ncols = pos
    row_off = []
    pos = 0
    for s, t in q.arrows:
        row_off.append(pos)
        pos += N.dims[t] * M.dims[s]
    nrows = pos
    out = fmpq_mat(nrows, ncols)
    if nrows == 0 or ncols == 0:
        return out
    for a, (s, t) in enumerate(q.arrows):
        ro = row_off[a]
        ms, mt, nt = M.dims[s], M.dims[t], N.dims[t]
        # (phi_t M_a)[p, c] = sum_r phi_t[p, r] M_a[r, c]
        Ma = M.maps[a]
        for r in range(mt):
            for c in range(ms):
                x = Ma[r, c]
                if x != 0:
                    for p in range(nt):
                        out[ro + p * ms + c, col_off[t] + p * mt + r] += x
        # -(N_a phi_s)[p, c] = -sum_u N_a[p, u] phi_s[u, c]
        Na = N.maps[a]
        for p in range(nt):
            for u in range(N.dims[s]):
                x = Na[p, u]
                if x != 0:
                    for c in range(ms):
                        out[ro + p * ms + c, col_off[s] + u * ms + c] -= x
    return out


class _Top:
    """Generators of ``M`` modulo its radical and the relations among their path images.

    ``gens`` lists (vertex, basis index) pairs.  For each vertex ``l`` the
    path images of the generators span ``M_l``; ``terms[l]`` lists them as
    (generator, path), ``relations[l]`` is a kernel basis of that spanning
    matrix, and ``section[l]`` = (columns forming a basis, inverse of that block).
    """

    def __init__(self, M: "Representation"):
        q = M.quiver
        gens = []
        for i in range(q.n):
            if M.dims[i] == 0:
                continue
            rows = []
            for a in q.in_arrows[i]:
                m = M.maps[a]
                rows.extend([m[r, c] for r in range(m.nrows())] for c in range(m.ncols()))
            quo = la.Quotient(M.dims[i], la.mat(rows, len(rows), M.dims[i]) if rows else None)
            gens.extend((i, c) for c in quo.complement)
        self.gens = gens
        self.terms, self.relations, self.section = [], [], []
        for l in range(q.n):
            terms = [(g, p) for g, (i, _) in enumerate(gens) for p in q.paths(i, l)]
            cols = []
            for g, p in terms:
                i, c = gens[g]
                if p:
                    m = M.path_map(p)
                    cols.append([m[r, c] for r in range(m.nrows())])
                else:
                    cols.append([la.ONE if r == c else la.ZERO for r in range(M.dims[l])])
            span = la.from_columns(cols, M.dims[l])
            self.terms.append(terms)
            self.relations.append(la.Kernel(span).basis if terms else [])
            if M.dims[l]:
                _, piv = la.rref(span)
                block = la.from_columns([cols[t] for t in piv], M.dims[l])
                self.section.append((piv, block.inv()))
            else:
                self.section.append(([], None))


@lru_cache(maxsize=None)
def _top(M: "Representation") -> _Top:
    return _Top(M)


def _hom_from_top(M: "Representation", N: "Representation") -> list["LinMap"]:
    """A basis of Hom(M, N) from the values on the top generators of ``M``.

    A choice ``y_g`` in ``N`` for each generator extends to a morphism iff
    every linear relation among path images in ``M`` also holds in ``N``.
    The systems involved are as small as the top of ``M`` allows.
    """
    q = M.quiver
    top = _top(M)
    off, pos = [], 0
    for i, _ in top.gens:
        off.append(pos)
        pos += N.dims[i]
    nvars = pos
    path_cache: dict = {}

    def npath(p):
        m = path_cache.get(p)
        if m is None:
            m = path_cache[p] = N.path_map(p)
        return m

    def form(l: int, weights) -> fmpq_mat:
        # matrix of the N_l-valued linear form  y |-> sum_t weights[t] * N_{p_t} y_{g_t}
        out = fmpq_mat(N.dims[l], nvars)
        for (g, p), w in zip(top.terms[l], weights):
            if w == 0:
                continue
            i = top.gens[g][0]
            o = off[g]
            if p:
                m = npath(p)
                for r in range(N.dims[l]):
                    for u in range(N.dims[i]):
                        x = m[r, u]
                        if x != 0:
                            out[r, o + u] += w * x
            else:
                for r in range(N.dims[l]):
                    out[r, o + r] += w
        return out

    if nvars == 0:
        return []
    eqs = [form(l, k) for l in range(q.n) if N.dims[l] for k in top.relations[l]]
    if eqs:
        rows = [x for e in eqs for x in e.entries()]
        sols = la.Kernel(fmpq_mat(len(rows) // nvars, nvars, rows)).basis
    else:
        sols = [[la.ONE if j == k else la.ZERO for j in range(nvars)] for k in range(nvars)]
    if not sols:
        return []
    Y = la.from_columns(sols, nvars)
    blocks_per_sol = [[] for _ in sols]
    for l in range(q.n):
        piv, inv = top.section[l]
        nl = N.dims[l]
        if not piv or nl == 0:
            for bl in blocks_per_sol:
                bl.append(la.zeros(nl, M.dims[l]))
            continue
        unit = [la.ZERO] * len(top.terms[l])
        stacked = []
        for t in piv:
            w = list(unit)
            w[t] = la.ONE
            stacked.extend(form(l, w).entries())
        F = fmpq_mat(len(piv) * nl, nvars, stacked)
        prod = F * Y  # row c * nl + r, column = solution
        for k, bl in enumerate(blocks_per_sol):
            psi = fmpq_mat(nl, len(piv))
            for c in range(len(piv)):
                for r in range(nl):
                    psi[r, c] = prod[c * nl + r, k]
            bl.append(psi * inv)
    return [LinMap(M, N, bl) for bl in blocks_per_sol]


class HomExt:
    """Hom(M, N) and Ext^1(M, N) with fixed bases.

    Both are the kernel and cokernel of :func:`delta_matrix`.  Hom is solved
    from the top of ``M`` (a much smaller system), the Ext dimension then
    follows from the Euler form, and ``delta`` itself is only built once an
    Ext class has to be represented.
    """

    def __init__(self, M: Representation, N: Representation):
        if N.quiver != M.quiver:
            raise QuiverError("representations live on different quivers")
        q = M.quiver
        self.M = M
        self.N = N
        self._homs = _hom_from_top(M, N)
        self.hom_dim = len(self._homs)
        self.ncols = sum(m * n for m, n in zip(M.dims, N.dims))
        self.nrows = sum(N.dims[t] * M.dims[s] for s, t in q.arrows)
        # ncols - nrows is the Euler form, so this is nrows - rank(delta)
        self.ext_dim = self.hom_dim - euler_form(q, M.dims, N.dims)
        if self.ext_dim < 0:
            raise AssertionError(f"negative Ext dimension for {M!r}, {N!r}")
        self._delta = None
        self._kernel = None
        self._quotient = None

    @property
    def rank(self) -> int:
        return self.ncols - self.hom_dim

    @property
    def delta(self) -> fmpq_mat:
        if self._delta is None:
            self._delta = delta_matrix(self.M, self.N)
        return self._delta

    @property
    def kernel(self) -> la.Kernel:
        if self._kernel is None:
            self._kernel = la.Kernel.from_basis([f.vector() for f in self._homs], self.ncols)
        return self._kernel

    @property
    def quotient(self) -> la.Quotient:
        if self._quotient is None:
            if self.ext_dim == 0:
                self._quotient = la.Quotient(self.nrows, None, self.nrows)
            else:
                self._quotient = la.Quotient(self.nrows, self.delta.transpose(), self.rank)
        return self._quotient

    def hom_basis(self) -> list[LinMap]:
        return [LinMap.from_vector(self.M, self.N, v) for v in self.kernel.basis]

    def hom_coords(self, f: LinMap) -> list:
        return self.kernel.coords(f.vector())

    def hom_element(self, coords: Sequence) -> LinMap:
        return LinMap.from_vector(self.M, self.N, self.kernel.combine(coords))

    def ext_basis(self) -> list[tuple]:
        return [cocycle_from_vector(self.M, self.N, v) for v in self.quotient.basis()]

    def ext_coords(self, z: Sequence[fmpq_mat]) -> list:
        return self.quotient.coords(cocycle_vector(z))

    def ext_element(self, coords: Sequence) -> tuple:
        return cocycle_from_vector(self.M, self.N, self.quotient.representative(coords))


@lru_cache(maxsize=None)
def hom_ext(M: Representation, N: Representation) -> HomExt:
    return HomExt(M, N)


def hom_basis(M: Representation, N: Representation) -> list[LinMap]:
    return hom_ext(M, N).hom_basis()


def hom_dim(M: Representation, N: Representation) -> int:
    return hom_ext(M, N).hom_dim


def ext_dim(M: Representation, N: Representation) -> int:
    """``dim Hom(M, N) - <dim M, dim N>``, valid because path algebras are hereditary."""
    val = hom_dim(M, N) - euler_form(M.quiver, M.dims, N.dims)
    if val < 0:
        raise ArithmeticError(f"negative Ext dimension between {M} and {N}")
    return val


def ext_basis(M: Representation, N: Representation) -> list[tuple]:
    he = hom_ext(M, N)
    basis = he.ext_basis()
    if len(basis) != ext_dim(M, N):
        raise AssertionError("Ext basis disagrees with the Euler form")
    return basis


# -- projectives and injectives ---------------------------------------------


@lru_cache(maxsize=None)
def projective(quiver: Quiver, i: int) -> Representation:
    paths = {l: quiver.paths(i, l) for l in range(quiver.n)}
    index = {l: {p: k for k, p in enumerate(ps)} for l, ps in paths.items()}
    dims = [len(paths[l]) for l in range(quiver.n)]
    maps = []
    for a, (s, t) in enumerate(quiver.arrows):
        m = la.zeros(dims[t], dims[s])
        for k, p in enumerate(paths[s]):
            m[index[t][p + (a,)], k] = 1
        maps.append(m)
    return Representation(quiver, dims, maps, f"P{i}")


@lru_cache(maxsize=None)
def injective(quiver: Quiver, i: int) -> Representation:
    paths = {l: quiver.paths(l, i) for l in range(quiver.n)}
    index = {l: {p: k for k, p in enumerate(ps)} for l, ps in paths.items()}
    dims = [len(paths[l]) for l in range(quiver.n)]
    maps = []
    for a, (s, t) in enumerate(quiver.arrows):
        m = la.zeros(dims[t], dims[s])
        # dual of q |-> (a then q): the functional at path p = (a,)+q goes to q
        for k, p in enumerate(paths[s]):
            if p and p[0] == a:
                m[index[t][p[1:]], k] = 1
        maps.append(m)
    return Representation(quiver, dims, maps, f"I{i}")


def simple(quiver: Quiver, i: int) -> Representation:
    dims = [1 if l == i else 0 for l in range(quiver.n)]
    return Representation(quiver, dims, [la.zeros(dims[t], dims[s]) for s, t in quiver.arrows], f"S{i}")


@lru_cache(maxsize=None)
def projective_arrow_map(quiver: Quiver, a: int) -> LinMap:
    """The morphism ``P(j) -> P(i)`` induced by the arrow ``a: i -> j``."""
    i, j = quiver.arrows[a]
    Pi, Pj = projective(quiver, i), projective(quiver, j)
    blocks = []
    for l in range(quiver.n):
        src = quiver.paths(j, l)
        dst = {p: k for k, p in enumerate(quiver.paths(i, l))}
        m = la.zeros(Pi.dims[l], Pj.dims[l])
        for k, p in enumerate(src):
            m[dst[(a,) + p], k] = 1
        blocks.append(m)
    return LinMap(Pj, Pi, blocks)


@lru_cache(maxsize=None)
def injective_arrow_map(quiver: Quiver, a: int) -> LinMap:
    """The morphism ``I(j) -> I(i)`` induced by the arrow ``a: i -> j``."""
    i, j = quiver.arrows[a]
    Ii, Ij = injective(quiver, i), injective(quiver, j)
    blocks = []
    for l in range(quiver.n):
        src = quiver.paths(l, j)
        dst = {p: k for k, p in enumerate(quiver.paths(l, i))}
        m = la.zeros(Ii.dims[l], Ij.dims[l])
        for k, q in enumerate(src):
            if q and q[-1] == a:
                m[dst[q[:-1]], k] = 1
        blocks.append(m)
    return LinMap(Ij, Ii, blocks)


def projective_cover_map(quiver: Quiver, i: int, X: Representation, x: Sequence) -> LinMap:
    """The morphism ``P(i) -> X`` sending the trivial path to ``x`` in ``X_i``."""
    P = projective(quiver, i)
    col = la.mat([[v] for v in x], X.dims[i], 1)
    blocks = []
    for l in range(quiver.n):
        cols = []
        for p in quiver.paths(i, l):
            v = X.path_map(p) * col if p else col
            cols.append([v[r, 0] for r in range(X.dims[l])])
        blocks.append(la.from_columns(cols, X.dims[l]))
    return LinMap(P, X, blocks)


# -- projective resolution ----------------------------------------------------


class Resolution:
    """``0 -> P1 -> P0 -> M -> 0`` with explicit morphisms."""

    def __init__(self, P1: Representation, P0: Representation, d1: LinMap, eps: LinMap):
        self.P1, self.P0, self.d1, self.eps = P1, P0, d1, eps
        self.p0_summands: list[int] = []
        self.p1_summands: list[int] = []

    def is_exact(self) -> bool:
        if not self.eps.compose(self.d1).is_zero():
            return False
        M = self.eps.target
        for l in range(M.quiver.n):
            if la.rank(self.d1.blocks[l]) != self.P1.dims[l]:
                return False
            if la.rank(self.eps.blocks[l]) != M.dims[l]:
                return False
            if self.P1.dims[l] + M.dims[l] != self.P0.dims[l]:
                return False
        return True


def _tensor(quiver: Quiver, i: int, k: int) -> Representation:
    """``P(i)^k`` laid out as path-major, copy-minor."""
    P = projective(quiver, i)
    maps = []
    for m in P.maps:
        maps.append(la.from_object_array(np.kron(_obj(m), _eye(k))) if k else la.zeros(m.nrows() * k, m.ncols() * k))
    return Representation(quiver, [d * k for d in P.dims], maps)


def _sum_all(quiver: Quiver, parts: list[Representation]) -> Representation:
    out = Representation(quiver, [0] * quiver.n, [la.zeros(0, 0) for _ in quiver.arrows])
    for p in parts:
        out = out.direct_sum(p)
    return out


def projective_resolution(M: Representation) -> Resolution:
    q = M.quiver
    p0_parts = [(i, M.dims[i]) for i in range(q.n) if M.dims[i]]
    p1_parts = [(a, q.arrows[a][1], M.dims[q.arrows[a][0]]) for a in range(len(q.arrows)) if M.dims[q.arrows[a][0]]]
    P0 = _sum_all(q, [_tensor(q, i, k) for i, k in p0_parts])
    P1 = _sum_all(q, [_tensor(q, j, k) for _, j, k in p1_parts])

    def offsets(parts_src, l):
        out, pos = {}, 0
        for src, k in parts_src:
            out[src] = pos
            pos += len(q.paths(src, l)) * k
        return out

    d1_blocks, eps_blocks = [], []
    for l in range(q.n):
        off0 = offsets(p0_parts, l)
        off1, pos = {}, 0
        for a, j, k in p1_parts:
            off1[a] = pos
            pos += len(q.paths(j, l)) * k
        d1 = la.zeros(P0.dims[l], P1.dims[l])
        for a, j, k in p1_parts:
            i = q.arrows[a][0]
            dst_i = {p: r for r, p in enumerate(q.paths(i, l))}
            dst_j = {p: r for r, p in enumerate(q.paths(j, l))}
            Ma = M.maps[a]
            for r, p in enumerate(q.paths(j, l)):
                for c in range(k):
                    col = off1[a] + r * k + c
                    # (a then p) (x) e_c  in P(i) (x) M_i
                    d1[off0[i] + dst_i[(a,) + p] * k + c, col] += 1
                    # - p (x) M_a e_c  in P(j) (x) M_j
                    if j in off0:
                        kj = M.dims[j]
                        for rr in range(kj):
                            x = Ma[rr, c]
                            if x != 0:
                                d1[off0[j] + dst_j[p] * kj + rr, col] -= x
        d1_blocks.append(d1)
        eps = la.zeros(M.dims[l], P0.dims[l])
        for i, k in p0_parts:
            for r, p in enumerate(q.paths(i, l)):
                pm = M.path_map(p) if p else la.identity(k)
                for c in range(k):
                    for rr in range(M.dims[l]):
                        x = pm[rr, c]
                        if x != 0:
                            eps[rr, off0[i] + r * k + c] = x
        eps_blocks.append(eps)
    res = Resolution(P1, P0, LinMap(P1, P0, d1_blocks), LinMap(P0, M, eps_blocks))
    res.p0_summands = [i for i, k in p0_parts for _ in range(k)]
    res.p1_summands = [j for _, j, k in p1_parts for _ in range(k)]
    return res


# -- Auslander-Reiten translation ---------------------------------------------


@lru_cache(maxsize=None)
def ar_translate_inv(N: Representation) -> Representation:
    """``tau^{-1} N`` realised as ``Ext^1(DA, N)``: vertex ``l`` carries ``Ext^1(I(l), N)``.

    Injective summands contribute nothing, so an injective ``N`` gives zero.
    The construction is functorial, see :func:`ar_translate_inv_map`.
    """
    q = N.quiver
    spaces = [hom_ext(injective(q, l), N) for l in range(q.n)]
    dims = [sp.ext_dim for sp in spaces]
    maps = []
    for a, (i, j) in enumerate(q.arrows):
        iota = injective_arrow_map(q, a)  # I(j) -> I(i)
        src, dst = spaces[i], spaces[j]
        cols = [dst.ext_coords(pull_cocycle(z, iota)) for z in src.ext_basis()]
        maps.append(la.from_columns(cols, dims[j]) if cols else la.zeros(dims[j], 0))
    name = f"tau^-1({N.name})" if N.name else None
    return Representation(q, dims, maps, name)


def ar_translate_inv_map(u: LinMap) -> LinMap:
    """``tau^{-1}(u)`` between the realisations of :func:`ar_translate_inv`."""
    q = u.source.quiver
    S, T = ar_translate_inv(u.source), ar_translate_inv(u.target)
    blocks = []
    for l in range(q.n):
        I = injective(q, l)
        src, dst = hom_ext(I, u.source), hom_ext(I, u.target)
        cols = [dst.ext_coords(push_cocycle(u, z)) for z in src.ext_basis()]
        blocks.append(la.from_columns(cols, T.dims[l]) if cols else la.zeros(T.dims[l], 0))
    return LinMap(S, T, blocks)


@lru_cache(maxsize=None)
def ar_translate(M: Representation) -> Representation:
    """``tau M`` realised as the dual of ``Ext^1(M, A)``: vertex ``l`` carries ``D Ext^1(M, P(l))``.

    Projective summands contribute nothing.
    """
    q = M.quiver
    spaces = [hom_ext(M, projective(q, l)) for l in range(q.n)]
    dims = [sp.ext_dim for sp in spaces]
    maps = []
    for a, (i, j) in enumerate(q.arrows):
        pi = projective_arrow_map(q, a)  # P(j) -> P(i)
        src, dst = spaces[j], spaces[i]
        # Ext(M, P(j)) -> Ext(M, P(i)); transpose gives D Ext(M,P(i)) -> D Ext(M,P(j))
        cols = [dst.ext_coords(push_cocycle(pi, z)) for z in src.ext_basis()]
        forward = la.from_columns(cols, dims[i]) if cols else la.zeros(dims[i], 0)
        maps.append(forward.transpose())
    name = f"tau({M.name})" if M.name else None
    return Representation(q, dims, maps, name)


def ar_translate_flagged(M: Representation) -> tuple[Representation, bool]:
    """``tau M`` plus whether a projective summand was dropped."""
    tm = ar_translate(M)
    expected = tuple(int(x) for x in M.quiver.coxeter() @ np.array(M.dims, dtype=np.int64))
    return tm, tm.dims != expected


def ar_translate_inv_flagged(N: Representation) -> tuple[Representation, bool]:
    tm = ar_translate_inv(N)
    inv = np.array(la.mat(N.quiver.coxeter().tolist()).inv().tolist(), dtype=object)
    expected = tuple(int(sum(inv[i, j] * N.dims[j] for j in range(N.quiver.n))) for i in range(N.quiver.n))
    return tm, tm.dims != expected


# -- indecomposables ------------------------------------------------------------


def is_brick(M: Representation) -> bool:
    return hom_dim(M, M) == 1


def is_rigid(M: Representation) -> bool:
    return hom_ext(M, M).ext_dim == 0


def knit_preprojectives(quiver: Quiver, max_total: int | None = None) -> list[Representation]:
    """Indecomposable preprojectives reached from the projectives by ``tau^{-1}``.

    Stops at injectives, or at modules above ``max_total`` when a bound is given.
    """
    found: dict[tuple, Representation] = {}
    queue = deque(projective(quiver, i) for i in range(quiver.n))
    for P in queue:
        found.setdefault(P.dims, P)
    while queue:
        M = queue.popleft()
        N = ar_translate_inv(M)
        if N.is_zero():
            continue
        if max_total is not None and N.total_dim > max_total:
            continue
        if N.dims in found:
            continue
        found[N.dims] = N
        queue.append(N)
    return list(found.values())


def knit_preinjectives(quiver: Quiver, max_total: int | None = None) -> list[Representation]:
    found: dict[tuple, Representation] = {}
    queue = deque(injective(quiver, i) for i in range(quiver.n))
    for I in queue:
        found.setdefault(I.dims, I)
    while queue:
        M = queue.popleft()
        N = ar_translate(M)
        if N.is_zero():
            continue
        if max_total is not None and N.total_dim > max_total:
            continue
        if N.dims in found:
            continue
        found[N.dims] = N
        queue.append(N)
    return list(found.values())


def indecomposables(quiver: Quiver) -> list[Representation]:
    """One indecomposable per positive root of a Dynkin quiver, by AR knitting."""
    from .dynkin import classify_tree
    from .roots import positive_roots

    dtype, labels = classify_tree(quiver.n, quiver.underlying_edges())
    mods = knit_preprojectives(quiver)
    roots = positive_roots(dtype)
    got = {tuple(M.dims[v] for v in _inverse(labels)) for M in mods}
    if len(mods) != len(roots) or got != set(roots):
        raise AssertionError(f"knitting produced {len(mods)} modules, expected {len(roots)}")
    return mods


def _inverse(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


def generic_representation(quiver: Quiver, dims: Sequence[int], seed: int = 0, spread: int = 2) -> Representation:
    rng = random.Random(seed)
    maps = []
    for s, t in quiver.arrows:
        r, c = dims[t], dims[s]
        maps.append(la.mat([[rng.randint(-spread, spread) for _ in range(c)] for _ in range(r)], r, c))
    return Representation(quiver, dims, maps)


def generic_rigid(quiver: Quiver, dims: Sequence[int], attempts: int = 4) -> Representation | None:
    """An exceptional (rigid brick) module of the given dimension, or ``None``.

    Random integer matrices from a fixed-seed generator; the result is checked,
    never assumed.  ``None`` means no attempt produced a rigid brick, which is
    what happens for roots that are not real Schur roots.
    """
    if euler_form(quiver, dims, dims) != 1:
        return None
    base = hash(tuple(dims)) & 0xFFFF
    for k in range(attempts):
        M = generic_representation(quiver, dims, seed=base * 31 + k)
        if is_rigid(M) and is_brick(M):
            return M
    return None


def is_iso(M: Representation, N: Representation, *, indecomposable: bool = False, tries: int = 8) -> bool:
    """Decide ``M ~ N``.

    With ``indecomposable=True`` both inputs must be bricks (checked) and for
    Dynkin quivers equal dimension vectors then settle it.  Otherwise an
    invertible element of Hom(M, N) is searched among fixed pseudo-random
    combinations of a basis; a ``True`` answer is always certified by an
    explicit isomorphism.
    """
    if M.dims != N.dims:
        return False
    if indecomposable:
        if not (is_brick(M) and is_brick(N)):
            raise ValueError("dimension shortcut needs indecomposable inputs")
        return True
    return find_isomorphism(M, N, tries=tries) is not None


def find_isomorphism(M: Representation, N: Representation, tries: int = 8) -> LinMap | None:
    if M.dims != N.dims:
        return None
    he = hom_ext(M, N)
    basis = he.hom_basis()
    if not basis:
        return None
    rng = random.Random(12345)
    for t in range(tries):
        coeffs = [1] * len(basis) if t == 0 else [rng.randint(-9, 9) for _ in basis]
        f = LinMap.zero(M, N)
        for c, b in zip(coeffs, basis):
            if c:
                f = f + b.scale(c)
        if all(blk.nrows() == 0 or blk.det() != 0 for blk in f.blocks):
            return f
    return None
