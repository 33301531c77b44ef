import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvectors import seeds
from cvectors.dynkin import ClassificationError, DynkinType
from cvectors.roots import positive_roots
from conftest import dynkin_b, random_skew

# clusters per type: Catalan numbers for A_n, (3n-2)/n * C(2n-2, n-1) for D_n
CLUSTERS = {"A2": 5, "A3": 14, "A4": 42, "D4": 50, "D5": 182}


@pytest.mark.parametrize("name", sorted(CLUSTERS))
def test_labelled_seed_count(name):
    # principal coefficients separate the n! labellings of each cluster
    n = DynkinType.parse(name).rank
    en = seeds.enumerate_seeds(dynkin_b(name))
    assert en.exhaustive
    assert len(en.seeds) == CLUSTERS[name] * math.factorial(n)


def test_budget_flag():
    en = seeds.enumerate_seeds(dynkin_b("A3"), budget=20)
    assert not en.exhaustive
    assert len(en.seeds) == 20
    with pytest.raises(ValueError):
        seeds.enumerate_seeds(dynkin_b("A3"), budget=0)


def test_enumeration_order_and_words():
    en = seeds.enumerate_seeds(dynkin_b("A3"))
    depths = [len(s.word) for s in en.seeds]
    assert depths == sorted(depths)
    for s in en.seeds[:30]:
        assert seeds.mutate_word(seeds.initial_seed(dynkin_b("A3")), s.word) == s


@pytest.mark.parametrize("workers", [2, 8])
def test_enumeration_independent_of_workers(workers):
    b = dynkin_b("D4")
    one = seeds.enumerate_seeds(b, workers=1, edges=True)
    many = seeds.enumerate_seeds(b, workers=workers, edges=True)
    assert [s.to_json() for s in one.seeds] == [s.to_json() for s in many.seeds]
    assert one.edges == many.edges


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "D4", "D5"])
def test_positive_c_vectors_are_positive_roots(name):
    res = seeds.positive_c_vectors(dynkin_b(name))
    assert res.exhaustive
    assert res.vectors == frozenset(positive_roots(name))


def test_a2_c_vectors():
    res = seeds.c_vectors(dynkin_b("A2"))
    pos = {(1, 0), (0, 1), (1, 1)}
    assert res.vectors == pos | {tuple(-x for x in v) for v in pos}


@given(st.integers(0, 10_000), st.integers(1, 5), st.lists(st.integers(0, 4), max_size=30))
@settings(max_examples=200, deadline=None)
def test_involution_unimodularity_and_sign_coherence(seed, n, word):
    b = random_skew(np.random.default_rng(seed), n)
    s = seeds.initial_seed(b)
    for k in word:
        k %= n
        t = seeds.mutate_seed(s, k)
        assert seeds.mutate_seed(t, k) == s
        assert (t.b == -t.b.T).all()
        assert abs(seeds.det(t.c)) == 1
        assert seeds.is_sign_coherent(t.c)
        s = t


def test_det():
    assert seeds.det(np.array([[2, 1], [1, 1]])) == 1
    assert seeds.det(np.array([[0, 1], [1, 0]])) == -1
    assert seeds.det(np.array([[1, 2], [2, 4]])) == 0


@pytest.mark.parametrize("bad", [[[0, 1], [1, 0]], [[0, 1, 2]], [[0, 0.5], [-0.5, 0]]])
def test_exchange_matrix_rejects(bad):
    with pytest.raises(seeds.SkewSymmetryError):
        seeds.exchange_matrix(bad)


def test_opposite():
    b = dynkin_b("A3")
    assert (seeds.opposite(b) == -b).all()
    assert (seeds.opposite(seeds.opposite(b)) == b).all()


def test_seed_json_and_digest():
    s = seeds.mutate_word(seeds.initial_seed(dynkin_b("A2")), [0])
    assert s.to_json() == {"b": [[0, -1], [1, 0]], "c": [[-1, 1], [0, 1]], "word": [1]}
    same = seeds.Seed(s.b, s.c, ())
    assert same == s and same.digest() == s.digest()


CYCLE3 = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]
AFFINE = [[0, 1, 1], [-1, 0, 1], [-1, -1, 0]]


@pytest.mark.parametrize("b, expected", [
    (CYCLE3, "A3"),
    (AFFINE, "infinite"),
    (dynkin_b("E8"), "E8"),
    (dynkin_b("D6"), "D6"),
    ([[0, 2], [-2, 0]], "infinite"),
    ([[0, 3, 0], [-3, 0, 1], [0, -1, 0]], "infinite"),
])
def test_detect_finite_type(b, expected):
    got = seeds.detect_finite_type(b)
    assert str(got) == expected


def test_classify_word_reaches_acyclic_member():
    res = seeds.classify(CYCLE3)
    s = seeds.mutate_word(seeds.initial_seed(CYCLE3), res.word)
    assert seeds.is_acyclic(s.b)
    assert (s.b == res.acyclic_b).all()


def test_classify_budget_and_disconnected():
    member = seeds.mutate_word(seeds.initial_seed(dynkin_b("D5")), [1, 3, 2]).b
    assert not seeds.is_acyclic(member)
    assert seeds.classify(member, budget=2) == "budget-exhausted"
    with pytest.raises(ClassificationError):
        seeds.classify(np.zeros((2, 2), dtype=np.int64))
