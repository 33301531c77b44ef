import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvectors import kernels


def reference_mutation(b, c, k):
    """Textbook rule: b'_ij = b_ij + sgn(b_ik) [b_ik b_kj]_+, with C treated as extra rows."""
    rows = [list(r) for r in b] + [list(r) for r in c]
    n = len(b)
    out = []
    for i, row in enumerate(rows):
        new = []
        for j in range(n):
            if j == k or i == k:
                new.append(-row[j])
            else:
                bik, bkj = row[k], b[k][j]
                sgn = (bik > 0) - (bik < 0)
                new.append(row[j] + sgn * max(bik * bkj, 0))
        out.append(new)
    return out[:n], out[n:]


@st.composite
def seeds(draw, max_n=6, bound=3):
    n = draw(st.integers(1, max_n))
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(st.integers(-bound, bound))
            b[i][j], b[j][i] = v, -v
    c = [[draw(st.integers(-bound, bound)) for _ in range(n)] for _ in range(n)]
    k = draw(st.integers(0, n - 1))
    return b, c, k


@given(seeds())
@settings(max_examples=300, deadline=None)
def test_kernel_matches_reference(case):
    b, c, k = case
    want_b, want_c = reference_mutation(b, c, k)
    for use_numba in (True, False):
        nb, nc = kernels.mutate_arrays(np.array(b, dtype=np.int64), np.array(c, dtype=np.int64), k, use_numba=use_numba)
        assert nb.tolist() == want_b
        assert nc.tolist() == want_c


@given(seeds(max_n=5))
@settings(max_examples=100, deadline=None)
def test_all_children_match_single_mutations(case):
    b, c, _ = case
    b = np.array(b, dtype=np.int64)
    c = np.array(c, dtype=np.int64)
    kids = kernels.all_children(b, c)
    for k, (nb, nc) in enumerate(kids):
        eb, ec = kernels.mutate_arrays(b, c, k, use_numba=False)
        assert np.array_equal(nb, eb) and np.array_equal(nc, ec)


def test_promotion_to_python_ints_is_exact():
    big = kernels.LIMIT - 1
    b = np.array([[0, big], [-big, 0]], dtype=np.int64)
    c = np.array([[big, 0], [0, 1]], dtype=np.int64)
    nb, nc = kernels.mutate_arrays(b, c, 0)
    # column 1 picks up c_00 * b_01 = big**2, which no longer fits
    assert nc.dtype == object
    assert nc[0, 1] == big * big
    assert nb.dtype == np.int64
    back_b, back_c = kernels.mutate_arrays(nb, nc, 0)
    assert back_b.tolist() == b.tolist() and back_c.tolist() == c.tolist()
    assert back_c.dtype == np.int64


@pytest.mark.parametrize("value, dtype", [(5, np.int64), (kernels.LIMIT, object), (-kernels.LIMIT, object)])
def test_normalize_storage(value, dtype):
    a = kernels.normalize(np.array([[value]], dtype=object))
    assert a.dtype == dtype
    assert int(a[0, 0]) == value


def test_index_out_of_range():
    with pytest.raises(IndexError):
        kernels.mutate_arrays(np.zeros((2, 2), dtype=np.int64), np.eye(2, dtype=np.int64), 2)


def test_env_flag_disables_numba():
    code = "from cvectors import kernels; print(kernels.USING_NUMBA)"
    env = dict(os.environ, CVECTORS_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
