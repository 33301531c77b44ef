"""Exact rational linear algebra on top of python-flint.

Vectors are plain lists of ``flint.fmpq``; matrices are ``flint.fmpq_mat``.
Everything here is exact, there is no tolerance anywhere.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import flint
import numpy as np

fmpq = flint.fmpq
fmpq_mat = flint.fmpq_mat

ZERO = fmpq(0)
ONE = fmpq(1)


def mat(rows: Sequence[Sequence], nrows: int | None = None, ncols: int | None = None) -> fmpq_mat:
    """Build an ``fmpq_mat`` from nested rows (shape given explicitly when empty)."""
    rows = [list(r) for r in rows]
    if nrows is None:
        nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if nrows == 0 or ncols == 0:
        return fmpq_mat(nrows, ncols)
    flat = [x for r in rows for x in r]
    return fmpq_mat(nrows, ncols, flat)


def zeros(nrows: int, ncols: int) -> fmpq_mat:
    return fmpq_mat(nrows, ncols)


def identity(n: int) -> fmpq_mat:
    m = fmpq_mat(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def unit_matrix(nrows: int, ncols: int, r: int, c: int) -> fmpq_mat:
    m = fmpq_mat(nrows, ncols)
    m[r, c] = 1
    return m


def entries(m: fmpq_mat) -> list:
    """Row-major list of entries."""
    if m.nrows() == 0 or m.ncols() == 0:
        return []
    return list(m.entries())


def to_object_array(m: fmpq_mat) -> np.ndarray:
    out = np.empty((m.nrows(), m.ncols()), dtype=object)
    if out.size:
        out.ravel()[:] = m.entries()
    return out


def from_object_array(a: np.ndarray) -> fmpq_mat:
    r, c = a.shape
    if r == 0 or c == 0:
        return fmpq_mat(r, c)
    return fmpq_mat(r, c, [fmpq(x) if not isinstance(x, flint.fmpq) else x for x in a.ravel()])


def is_zero(m: fmpq_mat) -> bool:
    return all(x == 0 for x in entries(m))


def column(m: fmpq_mat, j: int) -> list:
    return [m[i, j] for i in range(m.nrows())]


def from_columns(cols: Sequence[Sequence], nrows: int) -> fmpq_mat:
    out = fmpq_mat(nrows, len(cols))
    for j, col in enumerate(cols):
        for i, x in enumerate(col):
            if x != 0:
                out[i, j] = x
    return out


def rref(m: fmpq_mat) -> tuple[fmpq_mat, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    if m.nrows() == 0 or m.ncols() == 0:
        return fmpq_mat(m.nrows(), m.ncols()), []
    r, rank = m.rref()
    pivots = []
    ncols = m.ncols()
    col = 0
    for i in range(rank):
        while r[i, col] == 0:
            col += 1
        pivots.append(col)
        col += 1
        if col > ncols:
            break
    return r, pivots


def rank(m: fmpq_mat) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    # clearing one common denominator keeps the rank; the integer routine is fraction free
    num, _ = m.numer_denom()
    return num.rank()


def kernel_basis(m: fmpq_mat) -> list[list]:
    """Canonical kernel basis: one vector per free column, 1 at that column.

    Coordinates of a kernel vector in this basis are its entries at the free
    columns, which :class:`Kernel` exploits.
    """
    return Kernel(m).basis


class Kernel:
    """Kernel of a matrix with the rref-canonical basis."""

    def __init__(self, m: fmpq_mat, rank: int | None = None):
        """``rank`` may be passed when known; a full column rank skips elimination."""
        self.ncols = m.ncols()
        if rank == self.ncols:
            self.pivots = list(range(self.ncols))
            self.free = []
            self.basis = []
            return
        r, pivots = rref(m)
        pivset = set(pivots)
        self.pivots = pivots
        self.free = [j for j in range(self.ncols) if j not in pivset]
        basis = []
        for f in self.free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for row, p in enumerate(pivots):
                x = r[row, f]
                if x != 0:
                    v[p] = -x
            basis.append(v)
        self.basis = basis

    @classmethod
    def from_basis(cls, vectors: Sequence[Sequence], ncols: int) -> "Kernel":
        """Wrap a known basis of some subspace, normalised to reduced echelon form.

        The coordinate positions are then the pivot columns of that form.
        """
        self = cls.__new__(cls)
        self.ncols = ncols
        r, pivots = rref(mat(vectors, len(vectors), ncols))
        if len(pivots) != len(vectors):
            raise ValueError("vectors are linearly dependent")
        self.pivots = []
        self.free = pivots
        self.basis = [[r[i, j] for j in range(ncols)] for i in range(len(pivots))]
        return self

    @property
    def dim(self) -> int:
        return len(self.free)

    def coords(self, v: Sequence) -> list:
        """Coordinates of a vector already known to lie in the kernel."""
        return [v[f] for f in self.free]

    def combine(self, coords: Sequence) -> list:
        out = [ZERO] * self.ncols
        for c, b in zip(coords, self.basis):
            if c != 0:
                for i, x in enumerate(b):
                    if x != 0:
                        out[i] += c * x
        return out


class Quotient:
    """The quotient ``F^ambient / span(generators)`` with a fixed complement.

    The complement is spanned by the standard basis vectors at the non-pivot
    columns of the rref of the generators, so each class has a unique
    representative supported there and its coordinates are read off directly.
    """

    def __init__(self, ambient: int, generators: fmpq_mat | None, rank: int | None = None):
        """``generators`` holds the spanning vectors as ROWS.

        Passing ``rank == ambient`` (a zero quotient) skips elimination.
        """
        self.ambient = ambient
        self._full = rank == ambient and ambient > 0
        if self._full:
            self._rows = []
            self._pivots = list(range(ambient))
        elif generators is None or generators.nrows() == 0 or ambient == 0:
            self._rows = []
            self._pivots = []
        else:
            r, pivots = rref(generators)
            self._rows = [[r[i, j] for j in range(ambient)] for i in range(len(pivots))]
            self._pivots = pivots
        pivset = set(self._pivots)
        self.complement = [j for j in range(ambient) if j not in pivset]

    @property
    def dim(self) -> int:
        return len(self.complement)

    @property
    def image_dim(self) -> int:
        return len(self._pivots)

    def reduce(self, v: Sequence) -> list:
        if self._full:
            return [ZERO] * self.ambient
        out = list(v)
        for row, p in zip(self._rows, self._pivots):
            x = out[p]
            if x != 0:
                for j, y in enumerate(row):
                    if y != 0:
                        out[j] -= x * y
        return out

    def coords(self, v: Sequence) -> list:
        red = self.reduce(v)
        return [red[j] for j in self.complement]

    def representative(self, coords: Sequence) -> list:
        out = [ZERO] * self.ambient
        for c, j in zip(coords, self.complement):
            out[j] = fmpq(c)
        return out

    def basis(self) -> list[list]:
        return [self.representative([ONE if t == s else ZERO for t in range(self.dim)]) for s in range(self.dim)]

    def contains(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.coords(v))


def block_kron_rows(blocks: Iterable[tuple[int, np.ndarray]], ncols: int) -> np.ndarray:
    """Stack ``(column offset, block)`` pieces that share the same rows."""
    blocks = list(blocks)
    nrows = blocks[0][1].shape[0] if blocks else 0
    out = np.zeros((nrows, ncols), dtype=object)
    out[...] = ZERO
    for off, b in blocks:
        out[:, off:off + b.shape[1]] += b
    return out


def rank_of_columns(cols: Sequence[Sequence], nrows: int) -> int:
    if not cols or nrows == 0:
        return 0
    return rank(from_columns(cols, nrows))
