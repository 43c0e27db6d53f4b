from hypothesis import given, settings
import pytest

from hyperkernel import (
    CapacityError,
    Hypergraph,
    INFEASIBLE,
    UnknownIdError,
    apply,
    find_edge_dominations,
    find_node_dominations,
    is_hitting_set,
    min_hitting_set,
)
from hg_fixtures import exhaustive_min_hitting_set, h_alt, h_twin, hypergraphs


def test_is_hitting_set_twin():
    assert is_hitting_set(h_twin(), {"v1"})
    assert is_hitting_set(h_twin(), {"v2"})
    assert not is_hitting_set(h_twin(), set())


def test_is_hitting_set_alt_example():
    assert is_hitting_set(h_alt(), {"v2", "v4", "v5", "v7"})
    assert not is_hitting_set(h_alt(), {"v2", "v4", "v6"})


def test_is_hitting_set_rejects_foreign_nodes():
    with pytest.raises(UnknownIdError, match="v9"):
        is_hitting_set(h_twin(), {"v9"})


def test_min_twin():
    got = min_hitting_set(h_twin())
    assert got.feasible and got.size == 1
    assert got.witness == {"v1"}  # lex-least of the two singletons


def test_min_infeasible_with_empty_edge():
    h = Hypergraph(["v"], ["f"], [])
    assert min_hitting_set(h) == INFEASIBLE


def test_min_no_edges_is_zero():
    got = min_hitting_set(Hypergraph(["a", "b"], [], []))
    assert got.feasible and got.size == 0 and got.witness == frozenset()


def test_min_alt_is_four():
    oracle = exhaustive_min_hitting_set(h_alt())
    assert oracle[1] == 4
    got = min_hitting_set(h_alt())
    assert got.size == 4
    assert got.witness == oracle[2]
    assert is_hitting_set(h_alt(), got.witness)


def test_capacity_bound():
    h = Hypergraph(["a", "b", "c"], [], [])
    with pytest.raises(CapacityError):
        min_hitting_set(h, max_nodes=2)
    assert min_hitting_set(h, max_nodes=3).size == 0


@settings(max_examples=150)
@given(hypergraphs(max_nodes=6, max_edges=6))
def test_matches_exhaustive_oracle(h):
    feasible, size, witness = exhaustive_min_hitting_set(h)
    got = min_hitting_set(h)
    assert got.feasible == feasible
    if feasible:
        assert got.size == size
        assert got.witness == witness  # same lex-least witness
        assert is_hitting_set(h, got.witness)


@settings(max_examples=60)
@given(hypergraphs(max_nodes=5, max_edges=5))
def test_single_steps_preserve_size_status(h):
    before = min_hitting_set(h)
    key = (before.feasible, before.size)
    for rule in find_node_dominations(h) + find_edge_dominations(h):
        after = min_hitting_set(apply(h, rule))
        assert (after.feasible, after.size) == key


def test_wider_instances_match_oracle():
    from hyperkernel import GeneratorParams, random_hypergraph

    for i in range(25):
        h = random_hypergraph(GeneratorParams(12, 7, 0.3, 1, 4200 + i))
        feasible, size, witness = exhaustive_min_hitting_set(h)
        got = min_hitting_set(h)
        assert (got.feasible, got.size, got.witness) == (feasible, size, witness)
