"""Positive roots of simply-laced root systems by reflection closure."""

from __future__ import annotations

from functools import lru_cache

from .dynkin import DynkinType


def _as_type(t) -> DynkinType:
    if isinstance(t, DynkinType):
        return t
    return DynkinType.parse(str(t))


def reflect(beta: tuple[int, ...], i: int, cartan) -> tuple[int, ...]:
    """``s_i(beta) = beta - <beta, alpha_i^vee> alpha_i``."""
    pairing = sum(int(cartan[i][j]) * beta[j] for j in range(len(beta)))
    out = list(beta)
    out[i] -= pairing
    return tuple(out)


def reflection_closure(cartan, order=None) -> frozenset[tuple[int, ...]]:
    """All positive roots reachable from the simple roots by simple reflections.

    ``order`` permutes the reflections tried at each step; the fixpoint does not
    depend on it.
    """
    n = len(cartan)
    order = list(range(n)) if order is None else list(order)
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in order:
                gamma = reflect(beta, i, cartan)
                if all(x >= 0 for x in gamma) and any(gamma) and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return frozenset(found)


@lru_cache(maxsize=None)
def _positive_roots(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    cartan = t.cartan().tolist()
    return tuple(sorted(reflection_closure(cartan), key=lambda r: (sum(r), r)))


def positive_roots(t) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
    return list(_positive_roots(_as_type(t)))


def max_coefficient(t) -> tuple[int, list[int]]:
    """Largest coordinate over all positive roots and the (0-based) vertices attaining it."""
    roots = positive_roots(t)
    value = max(max(r) for r in roots)
    where = sorted({i for r in roots for i, x in enumerate(r) if x == value})
    return value, where


def highest_root(t) -> tuple[int, ...]:
    roots = positive_roots(t)
    top = tuple(max(r[i] for r in roots) for i in range(len(roots[0])))
    if top not in roots:
        raise AssertionError("coordinate-wise maximum is not a root")
    return top


def has_connected_support(root, t) -> bool:
    t = _as_type(t)
    support = {i for i, x in enumerate(root) if x}
    if not support:
        return False
    adj = {i: set() for i in range(t.rank)}
    for i, j in t.edges:
        adj[i].add(j)
        adj[j].add(i)
    start = next(iter(support))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] & support:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == support
