import json

import numpy as np
import pytest

from cvectors import seeds, verify
from cvectors.category import ClusterCategory, CObject
from cvectors.roots import positive_roots
from conftest import dynkin_b

CYCLE3 = [[0, 1, -1], [-1, 0, 1], [1, -1, 0]]


def test_c_family_a1():
    ls = verify.Lockstep(ClusterCategory.from_exchange_matrix([[0]]))
    fam = verify.c_family(ls, CObject.shifted_projective(0), depth=3)
    # one mutation flips the sign of the only c-vector
    assert fam.vectors == {(-1,)}
    assert fam.first_depth == {(-1,): 1}
    assert fam.exhausted and not fam.unreachable


def test_c_family_a2_simple():
    cat = ClusterCategory.from_exchange_matrix(dynkin_b("A2"))
    ls = verify.Lockstep(cat)
    S2 = CObject.module((0, 1))
    fam = verify.c_family(ls, S2, depth=10)
    assert (1, 1) in fam.vectors
    assert fam.positive == fam.vectors
    assert fam.witnesses[(1, 1)] == ((0,), 1)


def test_c_family_unreachable_flag():
    cat = ClusterCategory.from_exchange_matrix(dynkin_b("A3"))
    ls = verify.Lockstep(cat)
    fam = verify.c_family(ls, CObject.module((9, 9, 9)), depth=4)
    assert fam.unreachable and not fam.vectors


def test_example10_cokernel():
    a = verify.example10_cokernel()
    assert a["found"]
    assert a["neg"] == (0, 1, 1) and not any(a["pos"])
    assert a["c"] == (0, -1, -1)
    # the map comes from two copies of Sigma^-1 T1
    assert a["b_minus"] == {"M(2,2,1)": 2}
    assert len(a["word"]) == 3


def test_lockstep_rejects_wrong_matrix():
    cat = ClusterCategory.from_exchange_matrix(dynkin_b("A3"))
    with pytest.raises(verify.LockstepError) as exc:
        verify.Lockstep(cat, b=-dynkin_b("A3"))
    assert exc.value.word == ()


def test_lockstep_for_non_acyclic():
    ls = verify.lockstep_for(CYCLE3)
    assert seeds.is_acyclic(ls.cat.quiver.exchange_matrix())
    assert ls.b0.tolist() == CYCLE3
    with pytest.raises(ValueError):
        verify.lockstep_for([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def test_theorem6_oriented_cycle():
    rep = verify.check_theorem6(CYCLE3)
    assert rep.status == "pass"
    assert len(rep.witnesses["lhs"]) == len(rep.witnesses["rhs"]) == 6
    assert rep.witnesses["lhs"] == rep.witnesses["rhs"]


def test_theorem6_a2_sets():
    rep = verify.check_theorem6(dynkin_b("A2"))
    assert rep.witnesses["rhs"] == [[0, 1], [1, 0], [1, 1]]


def test_theorem6_sampled_branch():
    rep = verify.check_theorem6(dynkin_b("D4"), budget=50, walks=4, walk_length=10)
    assert rep.status == "pass (sampled, coverage 12/12)"
    assert rep.summary["directed_coverage"] == 12
    assert not rep.witnesses["outside_rhs"]


@pytest.mark.parametrize("b", [dynkin_b("A3"), CYCLE3, dynkin_b("D4")])
def test_theorem2_short_walks(b):
    rep = verify.check_theorem2(b, max_length=4)
    assert rep.status == "pass"
    assert rep.summary["violations"] == 0
    assert rep.summary["states"] == sum(len(b) ** k for k in range(5))


def test_theorem2_initial_seed_only():
    rep = verify.check_theorem2(dynkin_b("A2"), max_length=0)
    assert rep.summary == {"states": 1, "checks": 2, "violations": 0, "sign_violations": 0}


@pytest.mark.parametrize("b, status", [(dynkin_b("A3"), "pass"), (dynkin_b("D4"), "pass"), ([[0, 1], [-1, 0]], "pass")])
def test_remark7(b, status):
    assert verify.check_remark7(b).status == status


def test_remark7_infinite_type_is_bound_limited():
    rep = verify.check_remark7([[0, 1, 1], [-1, 0, 1], [-1, -1, 0]], budget=200)
    assert rep.status == "bound-limited"
    assert not rep.passed


def test_bound_small_ranks():
    rep = verify.check_bound(rank_cap=5, walks=4, walk_length=10)
    assert rep.status == "pass"
    rows = {r["type"]: r for r in rep.witnesses["types"]}
    assert rows["A5"]["max"] == 1 and rows["D5"]["max"] == 2


def test_mutation_class_members():
    members = verify.mutation_class_members(dynkin_b("A4"), 5, 8, rng_seed=3)
    assert len(members) == 5
    keys = set()
    for word, b in members:
        assert not seeds.is_acyclic(b)
        assert (seeds.mutate_word(seeds.initial_seed(dynkin_b("A4")), word).b == b).all()
        keys.add(b.tobytes())
    assert len(keys) == 5
    assert verify.mutation_class_members(dynkin_b("A2"), 5) == []


def test_directed_search_d5():
    ls = verify.Lockstep(ClusterCategory.from_exchange_matrix(dynkin_b("D5")))
    targets = verify.category_dim_vectors(ls)
    assert set(targets) == set(positive_roots("D5"))
    found = verify.directed_search(ls, targets)
    assert not found.missing
    for d, (word, j) in found.witnesses.items():
        assert seeds.mutate_word(seeds.initial_seed(dynkin_b("D5")), word).c_vector(j) == d


def test_report_json_is_deterministic():
    a = verify.check_theorem2(dynkin_b("A3"), random_walks=5, walk_length=6, rng_seed=9)
    b = verify.check_theorem2(dynkin_b("A3"), random_walks=5, walk_length=6, rng_seed=9)
    assert a.to_json() == b.to_json()
    assert "timing_seconds" not in json.loads(a.to_json())
    assert "timing_seconds" in json.loads(a.to_json(timing=True))


def test_random_words_are_non_backtracking():
    for w in verify.random_words(4, 20, 15, rng_seed=1):
        assert len(w) == 15
        assert all(a != b for a, b in zip(w, w[1:]))
    assert verify.random_words(3, 2, 5, 0) == verify.random_words(3, 2, 5, 0)
