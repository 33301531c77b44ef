"""Integer seed-mutation kernels.

Two interchangeable implementations of extended-matrix mutation live here: a
numba ``@njit`` loop and a vectorised numpy version.  Set the environment
variable ``CVECTORS_DISABLE_NUMBA=1`` (before import) to force numpy.

Entries are stored as int64 while every entry is below ``LIMIT`` in absolute
value, which keeps every intermediate product inside int64.  Anything larger
is promoted to Python ints (numpy object arrays) and mutated exactly by the
numpy path.  A seed is stored in int64 iff all its entries are below
``LIMIT``, so the storage type is a function of the values.
"""

from __future__ import annotations

import os

import numpy as np

LIMIT = 1 << 31

_disabled = os.environ.get("CVECTORS_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    if _disabled:
        raise ImportError("disabled by CVECTORS_DISABLE_NUMBA")
    from numba import njit
except ImportError:  # pragma: no cover - exercised through the env flag
    njit = None

USING_NUMBA = njit is not None


def _mutate_loop(b, c, k, out_b, out_c):
    n = b.shape[0]
    m = c.shape[0]
    for i in range(n):
        bik = b[i, k]
        for j in range(n):
            if i == k or j == k:
                out_b[i, j] = -b[i, j]
            else:
                bkj = b[k, j]
                v = b[i, j]
                if bik > 0 and bkj > 0:
                    v += bik * bkj
                elif bik < 0 and bkj < 0:
                    v -= bik * bkj
                out_b[i, j] = v
    for i in range(m):
        cik = c[i, k]
        for j in range(n):
            if j == k:
                out_c[i, j] = -cik
            else:
                bkj = b[k, j]
                v = c[i, j]
                if cik > 0 and bkj > 0:
                    v += cik * bkj
                elif cik < 0 and bkj < 0:
                    v -= cik * bkj
                out_c[i, j] = v


def _make_children(mutate):
    def _children_loop(b, c, out_b, out_c):
        for k in range(b.shape[0]):
            mutate(b, c, k, out_b[k], out_c[k])

    return _children_loop


def mutate_numpy(b: np.ndarray, c: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised mutation; works for int64 and object (Python int) arrays."""
    col = b[:, k]
    row = b[k, :]
    pos_row = np.maximum(row, 0)
    neg_row = np.maximum(-row, 0)
    nb = b + np.outer(np.maximum(col, 0), pos_row) - np.outer(np.maximum(-col, 0), neg_row)
    nb[k, :] = -b[k, :]
    nb[:, k] = -b[:, k]
    ccol = c[:, k]
    nc = c + np.outer(np.maximum(ccol, 0), pos_row) - np.outer(np.maximum(-ccol, 0), neg_row)
    nc[:, k] = -c[:, k]
    return nb, nc


if USING_NUMBA:
    _mutate_jit = njit(cache=True, nogil=True)(_mutate_loop)
    _children_jit = njit(nogil=True)(_make_children(_mutate_jit))
else:
    _mutate_jit = None
    _children_jit = None


def max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def normalize(a: np.ndarray) -> np.ndarray:
    """Canonical storage: int64 when every entry is below ``LIMIT``, else Python ints."""
    if a.dtype == np.int64:
        if max_abs(a) < LIMIT:
            return a
        return a.astype(object)
    if max_abs(a) < LIMIT:
        return a.astype(np.int64)
    return a


def mutate_arrays(b: np.ndarray, c: np.ndarray, k: int, use_numba: bool | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Mutate the pair ``(B, C)`` at ``k`` exactly."""
    n = b.shape[0]
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} out of range for rank {n}")
    if use_numba is None:
        use_numba = USING_NUMBA
    if b.dtype == np.int64 and c.dtype == np.int64:
        if use_numba and USING_NUMBA:
            nb = np.empty_like(b)
            nc = np.empty_like(c)
            _mutate_jit(b, c, k, nb, nc)
        else:
            nb, nc = mutate_numpy(b, c, k)
    else:
        nb, nc = mutate_numpy(b.astype(object), c.astype(object), k)
    return normalize(nb), normalize(nc)


def all_children(b: np.ndarray, c: np.ndarray, use_numba: bool | None = None) -> list[tuple[np.ndarray, np.ndarray]]:
    """Mutations of ``(B, C)`` in every direction, in index order."""
    n = b.shape[0]
    if use_numba is None:
        use_numba = USING_NUMBA
    if use_numba and USING_NUMBA and b.dtype == np.int64 and c.dtype == np.int64:
        out_b = np.empty((n, n, n), dtype=np.int64)
        out_c = np.empty((n,) + c.shape, dtype=np.int64)
        _children_jit(b, c, out_b, out_c)
        return [(normalize(out_b[k]), normalize(out_c[k])) for k in range(n)]
    return [mutate_arrays(b, c, k, use_numba=False) for k in range(n)]
