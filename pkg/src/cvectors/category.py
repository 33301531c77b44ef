"""A computable model of the cluster category of an acyclic quiver.

Objects are the indecomposables of the fundamental domain
``ind(mod kQ)  u  {Sigma P_i}``; only rigid ones are ever materialised.  A
morphism ``X -> Y`` is a pair (H-part, F-part) with

    H-part in Hom_D(X, Y),      F-part in Hom_D(X, F Y),   F = tau^{-1} Sigma,

and both parts are stored as coordinates over bases produced by
:mod:`cvectors.reps`.  The case table, with ``tau^{-1}`` realised as
``Ext^1(DA, -)`` (see :func:`cvectors.reps.ar_translate_inv`):

    ===========  ============  ============================  =========================
    X            Y             H-part                         F-part
    ===========  ============  ============================  =========================
    module M     module N      Hom(M, N)                      Ext^1(M, tau^{-1} N)
    module M     Sigma P_j     Ext^1(M, P_j)                  0
    Sigma P_i    module N      0                              Hom(P_i, tau^{-1} N)
    Sigma P_i    Sigma P_j     Hom(P_i, P_j)                  0
    ===========  ============  ============================  =========================

The F-part vanishes automatically when ``N`` is injective because the
realisation of ``tau^{-1} N`` is then zero.  Composition follows the orbit
category: ``(g_H, g_F) o (f_H, f_F) = (g_H f_H, F(g_H) f_F + g_F f_H)``; the
``F o F`` term lands in ``Hom_D(X, F^2 Z)``, which is zero on the domain.

Exchange matrices of cluster-tilting objects use the same convention as the
path algebra: ``b[i][j] > 0`` counts irreducible maps ``T_j -> T_i``, so the
projective cluster of ``kQ`` has the exchange matrix of ``Q``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg as la
from . import reps
from .dynkin import ClassificationError, classify_tree
from .reps import LinMap, Quiver, Representation


class ModelError(RuntimeError):
    """The finite model contradicted a structural expectation."""


@dataclass(frozen=True, order=True)
class CObject:
    kind: str          # "M" for a module, "P" for a shifted projective
    data: tuple

    @classmethod
    def module(cls, root: Sequence[int]) -> "CObject":
        return cls("M", tuple(int(x) for x in root))

    @classmethod
    def shifted_projective(cls, i: int) -> "CObject":
        return cls("P", (int(i),))

    @property
    def is_module(self) -> bool:
        return self.kind == "M"

    @property
    def root(self) -> tuple[int, ...]:
        if self.kind != "M":
            raise AttributeError("shifted projectives carry no root")
        return self.data

    @property
    def vertex(self) -> int:
        if self.kind != "P":
            raise AttributeError("modules carry no vertex")
        return self.data[0]

    def label(self) -> str:
        if self.kind == "M":
            return "M(" + ",".join(str(x) for x in self.data) + ")"
        return f"SP{self.data[0] + 1}"

    def to_json(self):
        if self.kind == "M":
            return {"module": list(self.data)}
        return {"shifted_projective": self.data[0] + 1}

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class CMorphism:
    source: CObject
    target: CObject
    h: tuple
    f: tuple

    def coords(self) -> list:
        return list(self.h) + list(self.f)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.h) and all(x == 0 for x in self.f)

    def __add__(self, other: "CMorphism") -> "CMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("adding morphisms between different objects")
        return CMorphism(self.source, self.target,
                         tuple(a + b for a, b in zip(self.h, other.h)),
                         tuple(a + b for a, b in zip(self.f, other.f)))

    def scale(self, c) -> "CMorphism":
        c = la.fmpq(c)
        return CMorphism(self.source, self.target, tuple(c * x for x in self.h), tuple(c * x for x in self.f))

    @property
    def is_h(self) -> bool:
        return any(x != 0 for x in self.h)

    @property
    def is_f(self) -> bool:
        return any(x != 0 for x in self.f)


class _Space:
    """A coordinate model of one H- or F-part."""

    __slots__ = ("kind", "he")

    def __init__(self, kind: str, he: reps.HomExt | None):
        self.kind = kind          # "hom", "ext" or "zero"
        self.he = he

    @property
    def dim(self) -> int:
        if self.kind == "hom":
            return self.he.hom_dim
        if self.kind == "ext":
            return self.he.ext_dim
        return 0

    def element(self, coords):
        if self.kind == "hom":
            return self.he.hom_element(coords)
        if self.kind == "ext":
            return self.he.ext_element(coords)
        return None

    def coords(self, x) -> tuple:
        if self.kind == "zero" or x is None:
            return tuple(la.ZERO for _ in range(self.dim))
        if self.kind == "hom":
            return tuple(self.he.hom_coords(x))
        return tuple(self.he.ext_coords(x))


@dataclass(frozen=True)
class Cluster:
    summands: tuple[CObject, ...]
    word: tuple[int, ...] = ()

    def __len__(self):
        return len(self.summands)

    def __getitem__(self, i):
        return self.summands[i]

    def as_set(self) -> frozenset:
        return frozenset(self.summands)

    def index(self, obj: CObject) -> int:
        return self.summands.index(obj)

    def to_json(self) -> dict:
        return {"summands": [x.to_json() for x in self.summands], "word": [k + 1 for k in self.word]}


@dataclass
class ExchangeData:
    """Result of mutating a cluster at ``k``.

    ``left`` is the minimal left add(T/T_k)-approximation ``T_k -> B+`` and
    ``right`` the minimal right one ``B- -> T_k``, each a list of
    (summand position, morphism) pairs.
    """

    k: int
    old: CObject
    new: CObject
    left: list[tuple[int, CMorphism]] = field(default_factory=list)
    right: list[tuple[int, CMorphism]] = field(default_factory=list)


class ClusterCategory:
    """Cluster category of ``kQ`` for an acyclic quiver ``Q``.

    For Dynkin quivers the whole fundamental domain is built by knitting.
    Otherwise the domain is generated lazily: preprojectives and
    preinjectives up to ``dim_bound``, exceptional modules of total dimension
    at most ``regular_bound`` found generically, and anything reached by
    ``tau`` or ``tau^{-1}`` on demand.  Results over such a domain are
    ``bound_limited``.
    """

    def __init__(self, quiver: Quiver, dim_bound: int = 24, regular_bound: int | None = None):
        self.quiver = quiver
        self.n = quiver.n
        self._modules: dict[tuple, Representation] = {}
        self._hom_dim: dict[tuple, tuple[int, int]] = {}
        self._spaces: dict[tuple, tuple[_Space, _Space]] = {}
        self._shift: dict[CObject, CObject] = {}
        self._unshift: dict[CObject, CObject] = {}
        self._compat: dict[tuple, bool] = {}
        self._compose: dict[tuple, CMorphism] = {}
        self._approx: dict[tuple, list] = {}
        self._compat_sets: dict[CObject, frozenset] = {}
        self._irr: dict[tuple, np.ndarray] = {}
        self._partner: dict[tuple, CObject] = {}
        self.extensions = 0
        try:
            self.dynkin, self.labels = classify_tree(quiver.n, quiver.underlying_edges())
        except ClassificationError:
            self.dynkin, self.labels = None, None
        self.coxeter = quiver.coxeter()
        self._euler = np.array([[reps.euler_form(quiver, _unit(i, self.n), _unit(j, self.n)) for j in range(self.n)]
                                for i in range(self.n)], dtype=np.int64)
        self._coxeter_inv = np.array(la.mat(self.coxeter.tolist()).inv().tolist(), dtype=object)
        self._proj_dims = [reps.projective(quiver, i).dims for i in range(self.n)]
        self._inj_dims = [reps.injective(quiver, i).dims for i in range(self.n)]
        if self.dynkin is not None:
            for M in reps.indecomposables(quiver):
                self._modules[M.dims] = M
            self.dim_bound = None
        else:
            self.dim_bound = dim_bound
            self.regular_bound = 2 * self.n if regular_bound is None else regular_bound
            self._grow(dim_bound)
            self._add_exceptional(self.regular_bound)

    @classmethod
    def from_exchange_matrix(cls, b, **kw) -> "ClusterCategory":
        return cls(Quiver.from_exchange_matrix(b), **kw)

    @property
    def is_finite(self) -> bool:
        return self.dynkin is not None

    @property
    def bound_limited(self) -> bool:
        return not self.is_finite

    # -- the domain -------------------------------------------------------------

    def _grow(self, bound: int):
        for M in reps.knit_preprojectives(self.quiver, bound):
            self._modules.setdefault(M.dims, M)
        for M in reps.knit_preinjectives(self.quiver, bound):
            self._modules.setdefault(M.dims, M)

    def _add_exceptional(self, bound: int):
        n = self.n
        for total in range(1, bound + 1):
            for d in _compositions(total, n):
                if d in self._modules:
                    continue
                if reps.euler_form(self.quiver, d, d) != 1:
                    continue
                M = reps.generic_rigid(self.quiver, d)
                if M is not None:
                    self._modules[d] = M

    def extend(self, factor: int = 2):
        """Enlarge a lazy domain."""
        if self.is_finite:
            return
        self.dim_bound *= factor
        self.extensions += 1
        self._grow(self.dim_bound)

    def objects(self) -> list[CObject]:
        mods = sorted(self._modules, key=lambda d: (sum(d), d))
        return [CObject.module(d) for d in mods] + [CObject.shifted_projective(i) for i in range(self.n)]

    def module(self, x: CObject) -> Representation:
        try:
            return self._modules[x.root]
        except KeyError:
            raise KeyError(f"{x} is not in the (current) fundamental domain") from None

    def has(self, x: CObject) -> bool:
        return not x.is_module or x.root in self._modules

    def _register(self, M: Representation) -> CObject:
        self._modules.setdefault(M.dims, M)
        return CObject.module(M.dims)

    def projective(self, i: int) -> CObject:
        return CObject.module(self._proj_dims[i])

    def injective(self, i: int) -> CObject:
        return CObject.module(self._inj_dims[i])

    def shift(self, x: CObject) -> CObject:
        """``Sigma X``, which is ``tau X`` in the cluster category."""
        y = self._shift.get(x)
        if y is None:
            y = self._shift[x] = self._shift_uncached(x)
        return y

    def _shift_uncached(self, x: CObject) -> CObject:
        if not x.is_module:
            return self.injective(x.vertex)
        if x.root in self._proj_dims:
            return CObject.shifted_projective(self._proj_dims.index(x.root))
        d = tuple(int(v) for v in self.coxeter @ np.array(x.root, dtype=np.int64))
        if d in self._modules:
            return CObject.module(d)
        return self._register(reps.ar_translate(self.module(x)))

    def unshift(self, x: CObject) -> CObject:
        """``Sigma^{-1} X``, which is ``tau^{-1} X`` in the cluster category."""
        y = self._unshift.get(x)
        if y is None:
            y = self._unshift[x] = self._unshift_uncached(x)
        return y

    def _unshift_uncached(self, x: CObject) -> CObject:
        if not x.is_module:
            return self.projective(x.vertex)
        if x.root in self._inj_dims:
            return CObject.shifted_projective(self._inj_dims.index(x.root))
        d = tuple(int(sum(self._coxeter_inv[i, j] * x.root[j] for j in range(self.n))) for i in range(self.n))
        if d in self._modules:
            return CObject.module(d)
        return self._register(reps.ar_translate_inv(self.module(x)))

    def euler(self, d, e) -> int:
        return int(np.array(d, dtype=np.int64) @ self._euler @ np.array(e, dtype=np.int64))

    def translate(self, x: CObject, m: int) -> CObject:
        """``Sigma^m x``."""
        for _ in range(abs(m)):
            x = self.shift(x) if m > 0 else self.unshift(x)
        return x

    def _size(self, x: CObject) -> int:
        return sum(x.root) if x.is_module else sum(self._proj_dims[x.vertex])

    def normalize(self, summands: Sequence[CObject]) -> tuple[int, tuple[CObject, ...]]:
        """``(m, Sigma^m summands)`` for an ``m`` that locally minimises total dimension.

        ``Sigma`` is an autoequivalence of the cluster category, so anything
        intrinsic to a set of objects (compatibility, quivers, exchange
        partners) can be computed on this representative and moved back.
        """
        best_m, best = 0, tuple(summands)
        best_cost = sum(self._size(x) for x in best)
        for step in (1, -1):
            m, cur, cost = 0, tuple(summands), sum(self._size(x) for x in summands)
            while True:
                nxt = tuple(self.translate(x, step) for x in cur)
                c = sum(self._size(x) for x in nxt)
                if c >= cost:
                    break
                m, cur, cost = m + step, nxt, c
            if cost < best_cost:
                best_m, best, best_cost = m, cur, cost
        return best_m, best

    def tau_module(self, root) -> CObject:
        return self.shift(CObject.module(root))

    # -- Hom spaces ---------------------------------------------------------------

    def _parts(self, x: CObject, y: CObject) -> tuple[_Space, _Space]:
        key = (x, y)
        sp = self._spaces.get(key)
        if sp is not None:
            return sp
        q = self.quiver
        if x.is_module and y.is_module:
            M, N = self.module(x), self.module(y)
            sp = (_Space("hom", reps.hom_ext(M, N)), _Space("ext", reps.hom_ext(M, reps.ar_translate_inv(N))))
        elif x.is_module:
            M = self.module(x)
            sp = (_Space("ext", reps.hom_ext(M, reps.projective(q, y.vertex))), _Space("zero", None))
        elif y.is_module:
            N = self.module(y)
            sp = (_Space("zero", None), _Space("hom", reps.hom_ext(reps.projective(q, x.vertex), reps.ar_translate_inv(N))))
        else:
            sp = (_Space("hom", reps.hom_ext(reps.projective(q, x.vertex), reps.projective(q, y.vertex))), _Space("zero", None))
        self._spaces[key] = sp
        return sp

    def hom_dim(self, x: CObject, y: CObject) -> tuple[int, int]:
        """``(dim of H-part, dim of F-part)`` of ``Hom_C(x, y)``."""
        key = (x, y)
        val = self._hom_dim.get(key)
        if val is None:
            q = self.quiver
            if x.is_module and y.is_module:
                M, N = self.module(x), self.module(y)
                val = (reps.hom_dim(M, N), reps.hom_ext(M, reps.ar_translate_inv(N)).ext_dim)
            elif x.is_module:
                val = (reps.hom_ext(self.module(x), reps.projective(q, y.vertex)).ext_dim, 0)
            elif y.is_module:
                val = (0, reps.ar_translate_inv(self.module(y)).dims[x.vertex])
            else:
                val = (reps.projective(q, y.vertex).dims[x.vertex], 0)
            self._hom_dim[key] = val
        return val

    def hom_total(self, x: CObject, y: CObject) -> int:
        return sum(self.hom_dim(x, y))

    def ext_c(self, x: CObject, y: CObject) -> int:
        """``dim Hom_C(x, Sigma y)``."""
        return self.hom_total(x, self.shift(y))

    def compatible(self, x: CObject, y: CObject) -> bool:
        key = (x, y) if x <= y else (y, x)
        val = self._compat.get(key)
        if val is None:
            val = self._compat[key] = self.ext_c(x, y) == 0 and self.ext_c(y, x) == 0
        return val

    def is_rigid(self, x: CObject) -> bool:
        return self.ext_c(x, x) == 0

    def _compatible_set(self, x: CObject) -> frozenset:
        out = self._compat_sets.get(x)
        if out is None:
            out = self._compat_sets[x] = frozenset(
                u for u in self.objects() if u != x and self._maybe_compatible(u, x) and self.compatible(u, x))
        return out

    def _maybe_compatible(self, u: CObject, x: CObject) -> bool:
        # <u, x> < 0 forces Ext^1(u, x) != 0
        if u.is_module and x.is_module:
            return self.euler(u.root, x.root) >= 0 and self.euler(x.root, u.root) >= 0
        return True

    def hom_basis(self, x: CObject, y: CObject) -> list[CMorphism]:
        hs, fs = self._parts(x, y)
        dh, df = hs.dim, fs.dim
        out = []
        for t in range(dh + df):
            v = [la.ONE if s == t else la.ZERO for s in range(dh + df)]
            out.append(CMorphism(x, y, tuple(v[:dh]), tuple(v[dh:])))
        return out

    # names used by the interface description
    hom_C_dim = hom_dim
    hom_C_basis = hom_basis

    def morphism(self, x: CObject, y: CObject, coords: Sequence) -> CMorphism:
        hs, fs = self._parts(x, y)
        coords = [la.fmpq(c) for c in coords]
        return CMorphism(x, y, tuple(coords[:hs.dim]), tuple(coords[hs.dim:]))

    def zero(self, x: CObject, y: CObject) -> CMorphism:
        hs, fs = self._parts(x, y)
        return CMorphism(x, y, tuple([la.ZERO] * hs.dim), tuple([la.ZERO] * fs.dim))

    def identity(self, x: CObject) -> CMorphism:
        hs, fs = self._parts(x, x)
        if x.is_module:
            M = self.module(x)
            h = hs.coords(LinMap.identity(M))
        else:
            h = hs.coords(LinMap.identity(reps.projective(self.quiver, x.vertex)))
        return CMorphism(x, x, tuple(h), tuple([la.ZERO] * fs.dim))

    def concrete(self, f: CMorphism):
        """The (H, F) elements behind ``f`` as LinMaps / cocycles (``None`` for zero spaces)."""
        hs, fs = self._parts(f.source, f.target)
        return hs.element(f.h), fs.element(f.f)

    def compose(self, g: CMorphism, f: CMorphism) -> CMorphism:
        """``g o f``."""
        if f.target != g.source:
            raise ValueError(f"cannot compose {g.source}->{g.target} after {f.source}->{f.target}")
        key = (g, f)
        hit = self._compose.get(key)
        if hit is None:
            hit = self._compose[key] = self._compose_uncached(g, f)
        return hit

    def _compose_uncached(self, g: CMorphism, f: CMorphism) -> CMorphism:
        X, Y, Z = f.source, f.target, g.target
        hf, ff = self.concrete(f)
        hg, fg = self.concrete(g)
        hs, fs = self._parts(X, Z)

        # H-part
        h = None
        if X.is_module and Y.is_module and Z.is_module:
            h = hg.compose(hf)
        elif X.is_module and Y.is_module and not Z.is_module:
            h = reps.pull_cocycle(hg, hf)
        elif X.is_module and not Y.is_module and not Z.is_module:
            h = reps.push_cocycle(hg, hf)
        elif not X.is_module and not Y.is_module and not Z.is_module:
            h = hg.compose(hf)
        h_coords = hs.coords(h)

        # F-part: F(g_H) f_F + g_F f_H
        parts = []
        if Z.is_module and fs.dim:
            if Y.is_module and ff is not None:
                tau_g = reps.ar_translate_inv_map(hg)
                parts.append(reps.push_cocycle(tau_g, ff) if X.is_module else tau_g.compose(ff))
            if fg is not None:
                if Y.is_module and X.is_module:
                    parts.append(reps.pull_cocycle(fg, hf))
                elif not Y.is_module and X.is_module:
                    parts.append(reps.push_cocycle(fg, hf))
                elif not Y.is_module and not X.is_module:
                    parts.append(fg.compose(hf))
        if parts:
            total = [la.ZERO] * fs.dim
            for p in parts:
                for i, c in enumerate(fs.coords(p)):
                    total[i] += c
            f_coords = tuple(total)
        else:
            f_coords = tuple([la.ZERO] * fs.dim)
        return CMorphism(X, Z, tuple(h_coords), f_coords)

    def radical_basis(self, x: CObject, y: CObject) -> list[CMorphism]:
        """A basis of rad(x, y); for ``x == y`` the H-part must be the scalars."""
        basis = self.hom_basis(x, y)
        if x != y:
            return basis
        dh, _ = self.hom_dim(x, x)
        if dh != 1:
            raise ModelError(f"End_D({x}) has dimension {dh}, expected 1")
        return basis[1:]

    # -- cluster-tilting objects ------------------------------------------------

    def initial_cluster(self) -> Cluster:
        return Cluster(tuple(self.projective(i) for i in range(self.n)), ())

    def is_cluster(self, T: Cluster) -> bool:
        s = list(T.summands)
        if len(set(s)) != self.n:
            return False
        for x, y in itertools.product(s, repeat=2):
            if self.ext_c(x, y):
                return False
        others = [u for u in self.objects() if u not in s]
        return not any(all(self.compatible(u, x) for x in s) for u in others if self.is_rigid(u))

    def exchange_partner(self, T: Cluster, k: int) -> CObject:
        """The unique domain object other than ``T_k`` completing ``T / T_k``.

        Every object of the domain is rigid by construction, so only
        compatibility with the other summands is tested.  The search runs on
        the normalised translate of ``T``.
        """
        m, summands = self.normalize(T.summands)
        key = (summands, k)
        u = self._partner.get(key)
        if u is None:
            u = self._partner[key] = self._exchange_partner(summands, k)
        return self.translate(u, -m)

    def _exchange_partner(self, summands: tuple[CObject, ...], k: int) -> CObject:
        rest = [x for i, x in enumerate(summands) if i != k]
        taken = set(summands)
        if self.is_finite:
            common = frozenset(self.objects()) if not rest else None
            for x in rest:
                cs = self._compatible_set(x)
                common = cs if common is None else common & cs
            found = sorted(common - taken)
            if len(found) != 1:
                raise ModelError(f"{len(found)} completions of an almost complete cluster: {found}")
            return found[0]
        while True:
            found = [u for u in self.objects() if u not in taken
                     and all(self._maybe_compatible(u, x) for x in rest)
                     and all(self.compatible(u, x) for x in rest)]
            if len(found) == 1:
                return found[0]
            if len(found) > 1:
                raise ModelError(f"{len(found)} completions of an almost complete cluster: {found}")
            self.extend()

    def right_approximation(self, y: CObject, rest: Sequence[CObject]) -> list[tuple[int, CMorphism]]:
        """Minimal right add(rest)-approximation of ``y`` as (position in rest, map) pairs.

        Among minimal choices the complement of the radical image spanned by
        the earliest basis vectors is taken.
        """
        key = ("R", y, tuple(rest))
        hit = self._approx.get(key)
        if hit is not None:
            return hit
        out = []
        for i, r in enumerate(rest):
            basis = self.hom_basis(r, y)
            if not basis:
                continue
            gens = []
            for r2 in rest:
                for g in self.hom_basis(r2, y):
                    for h in self.radical_basis(r, r2):
                        gens.append(self.compose(g, h).coords())
            quo = la.Quotient(len(basis), la.mat(gens, len(gens), len(basis)) if gens else None)
            for vec in quo.basis():
                out.append((i, self.morphism(r, y, vec)))
        self._approx[key] = out
        return out

    def left_approximation(self, x: CObject, rest: Sequence[CObject]) -> list[tuple[int, CMorphism]]:
        """Minimal left add(rest)-approximation of ``x``, dual to :meth:`right_approximation`."""
        key = ("L", x, tuple(rest))
        hit = self._approx.get(key)
        if hit is not None:
            return hit
        out = []
        for i, r in enumerate(rest):
            basis = self.hom_basis(x, r)
            if not basis:
                continue
            gens = []
            for r2 in rest:
                for g in self.hom_basis(x, r2):
                    for h in self.radical_basis(r2, r):
                        gens.append(self.compose(h, g).coords())
            quo = la.Quotient(len(basis), la.mat(gens, len(gens), len(basis)) if gens else None)
            for vec in quo.basis():
                out.append((i, self.morphism(x, r, vec)))
        self._approx[key] = out
        return out

    def mutate_cluster(self, T: Cluster, k: int, approximations: bool = True) -> tuple[Cluster, ExchangeData]:
        if not 0 <= k < len(T):
            raise IndexError(f"mutation index {k} out of range")
        new = self.exchange_partner(T, k)
        summands = list(T.summands)
        old = summands[k]
        summands[k] = new
        data = ExchangeData(k, old, new)
        if approximations:
            rest = [x for i, x in enumerate(T.summands) if i != k]
            pos = [i for i in range(len(T)) if i != k]
            data.left = [(pos[i], m) for i, m in self.left_approximation(old, rest)]
            data.right = [(pos[i], m) for i, m in self.right_approximation(old, rest)]
        return Cluster(tuple(summands), T.word + (k,)), data

    def irreducible_dims(self, T: Cluster) -> np.ndarray:
        """``irr[i][j]`` = dim of irreducible maps ``T_i -> T_j`` in add T (computed on the normalised translate)."""
        _, s = self.normalize(T.summands)
        irr = self._irr.get(s)
        if irr is None:
            irr = self._irr[s] = self._irreducible_dims(s)
        return irr.copy()

    def _irreducible_dims(self, s: tuple[CObject, ...]) -> np.ndarray:
        n = len(s)
        irr = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                basis = self.hom_basis(s[i], s[j])
                if not basis:
                    continue
                gens = []
                for l in range(n):
                    for h in self.radical_basis(s[i], s[l]):
                        for g in self.radical_basis(s[l], s[j]):
                            gens.append(self.compose(g, h).coords())
                r = la.rank(la.mat(gens, len(gens), len(basis))) if gens else 0
                irr[i, j] = len(basis) - r
        return irr

    def quiver_of(self, T: Cluster) -> np.ndarray:
        """Exchange matrix of ``T``: ``b[i][j] = irr(T_j -> T_i) - irr(T_i -> T_j)``."""
        irr = self.irreducible_dims(T)
        if ((irr > 0) & (irr.T > 0)).any():
            raise ModelError("2-cycle in the quiver of a cluster-tilting object")
        return irr.T - irr

    def j_dim_vector(self, T: Cluster, x: CObject) -> tuple[int, ...]:
        """``(dim Hom_C(T_l, x))_l``."""
        return tuple(self.hom_total(t, x) for t in T.summands)

    def c_module_dims(self, T_init: Cluster, T: Cluster, j: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Dimension vectors of the two candidate c-modules at ``(T, j)``.

        Returns ``(pos, neg)``: ``pos`` is the cokernel of
        ``Hom(T_init, Sigma B+) -> Hom(T_init, Sigma T_j*)`` and ``neg`` the cokernel
        of ``Hom(T_init, Sigma B-) -> Hom(T_init, Sigma T_j)``, where
        ``B- -> T_j`` and ``B+ -> T_j*`` are the minimal right approximations
        by the other summands.  ``Hom(t, Sigma -)`` is evaluated as
        ``Hom(Sigma^{-1} t, -)``.
        """
        rest = [x for i, x in enumerate(T.summands) if i != j]
        y = T.summands[j]
        y_star = self.exchange_partner(T, j)
        approx_neg = self.right_approximation(y, rest)
        approx_pos = self.right_approximation(y_star, rest)
        pos = self._cokernel_dims(T_init, y_star, rest, approx_pos)
        neg = self._cokernel_dims(T_init, y, rest, approx_neg)
        return pos, neg

    def approximation_multiplicities(self, T: Cluster, j: int) -> tuple[list[int], list[int]]:
        """Multiplicities of each summand in ``B+`` and ``B-`` at position ``j``."""
        rest_pos = [i for i in range(len(T)) if i != j]
        rest = [T.summands[i] for i in rest_pos]
        y = T.summands[j]
        y_star = self.exchange_partner(T, j)
        plus = [0] * len(T)
        minus = [0] * len(T)
        for i, _ in self.right_approximation(y_star, rest):
            plus[rest_pos[i]] += 1
        for i, _ in self.right_approximation(y, rest):
            minus[rest_pos[i]] += 1
        return plus, minus

    def _cokernel_dims(self, T_init: Cluster, y: CObject, rest, approx) -> tuple[int, ...]:
        out = []
        for t in T_init.summands:
            z = self.unshift(t)
            target = self.hom_total(z, y)
            if target == 0:
                out.append(0)
                continue
            cols = []
            for i, g in approx:
                for h in self.hom_basis(z, rest[i]):
                    cols.append(self.compose(g, h).coords())
            r = la.rank(la.mat(cols, len(cols), target)) if cols else 0
            out.append(target - r)
        return tuple(out)


def _unit(i: int, n: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(n))


def _compositions(total: int, parts: int):
    """Nonnegative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
