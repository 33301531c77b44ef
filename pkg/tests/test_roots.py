import pytest

from cvectors.dynkin import DynkinType, all_types
from cvectors.roots import (has_connected_support, highest_root, max_coefficient, positive_roots,
                            reflect, reflection_closure)

# Bourbaki tables, in the labelling used here (E: vertex 2 hangs off vertex 4)
HIGHEST = {
    "A1": (1,),
    "A4": (1, 1, 1, 1),
    "D4": (1, 2, 1, 1),
    "D6": (1, 2, 2, 2, 1, 1),
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
}


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_root_counts(t):
    roots = positive_roots(t)
    assert len(roots) == t.num_positive_roots()
    assert len(set(roots)) == len(roots)


@pytest.mark.parametrize("name, top", sorted(HIGHEST.items()))
def test_highest_root(name, top):
    assert highest_root(name) == top


@pytest.mark.parametrize("name, value, where", [
    ("A5", 1, [0, 1, 2, 3, 4]),
    ("D5", 2, [1, 2]),
    ("E6", 3, [3]),
    ("E7", 4, [3]),
    ("E8", 6, [3]),
])
def test_max_coefficient(name, value, where):
    assert max_coefficient(name) == (value, where)


def test_six_only_at_trivalent_vertex_of_e8():
    t = DynkinType.parse("E8")
    hits = {i for r in positive_roots(t) for i, x in enumerate(r) if x == 6}
    assert hits == {t.trivalent}
    for s in all_types(7):
        assert max_coefficient(s)[0] < 6


@pytest.mark.parametrize("t", all_types(8), ids=str)
def test_roots_are_real_with_connected_support(t):
    cartan = t.cartan().tolist()
    for r in positive_roots(t):
        # (r, r) = 2 for real roots of a simply-laced system
        q = sum(r[i] * cartan[i][j] * r[j] for i in range(t.rank) for j in range(t.rank))
        assert q == 2
        assert has_connected_support(r, t)


def test_reflection_order_does_not_matter():
    cartan = DynkinType.parse("E6").cartan().tolist()
    assert reflection_closure(cartan) == reflection_closure(cartan, order=[5, 3, 1, 0, 4, 2])


def test_reflect_simple_root():
    cartan = DynkinType.parse("A2").cartan().tolist()
    assert reflect((1, 0), 0, cartan) == (-1, 0)
    assert reflect((1, 0), 1, cartan) == (1, 1)


def test_parse():
    assert DynkinType.parse("e_8") == DynkinType("E", 8)
    with pytest.raises(ValueError):
        DynkinType.parse("E9")
    with pytest.raises(ValueError):
        DynkinType.parse("B3")
