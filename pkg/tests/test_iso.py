import itertools

from hypothesis import given, settings, strategies as st
import pytest

from hyperkernel import (
    CapacityError,
    Hypergraph,
    LEX_EDGE_FIRST,
    brute_force_isomorphic,
    canonical_form,
    is_isomorphic,
    reduce,
    relabel,
    verify_witness,
)
from hg_fixtures import all_hypergraphs, bits_under, h_twin, hypergraphs, lexmin_bits


def test_canonical_twin():
    c = canonical_form(h_twin())
    assert c.shape == (2, 1) and c.bits == "11"
    assert c.render() == "2x1:11"


def test_canonical_singleton():
    c = canonical_form(Hypergraph(["v"], ["e"], [("v", "e")]))
    assert c.shape == (1, 1) and c.bits == "1"


def test_canonical_empty():
    c = canonical_form(Hypergraph())
    assert c.render() == "0x0:"


def test_canonical_orders_reproduce_bits():
    for h in (h_twin(), Hypergraph(["a", "b", "c"], ["x", "y"], [("a", "x"), ("b", "y")])):
        c = canonical_form(h)
        assert bits_under(h, c.node_order, c.edge_order) == c.bits


def test_twin_reductions_share_canonical_form():
    h = h_twin()
    left = h.remove_node("v1")
    right = h.remove_node("v2")
    assert left != right
    assert canonical_form(left) == canonical_form(right)


def test_canonical_bits_equal_permutation_minimum_exhaustively():
    for h in all_hypergraphs(2, 2):
        c = canonical_form(h)
        assert c.bits == lexmin_bits(h)
        assert bits_under(h, c.node_order, c.edge_order) == c.bits


@settings(max_examples=60)
@given(hypergraphs(max_nodes=3, max_edges=3))
def test_canonical_bits_equal_permutation_minimum(h):
    assert canonical_form(h).bits == lexmin_bits(h)


@given(hypergraphs(), st.integers(0, 2**32 - 1))
def test_canonical_form_is_relabeling_invariant(h, seed):
    import random

    rng = random.Random(seed)
    xs = list(range(len(h.nodes)))
    ys = list(range(len(h.edges)))
    rng.shuffle(xs)
    rng.shuffle(ys)
    node_map = {v: f"n{k}" for v, k in zip(sorted(h.nodes), xs)}
    edge_map = {e: f"m{k}" for e, k in zip(sorted(h.edges), ys)}
    renamed = relabel(h, node_map, edge_map)
    assert canonical_form(h) == canonical_form(renamed)


def test_is_isomorphic_twin_reductions_with_witness():
    h = h_twin()
    left, right = h.remove_node("v1"), h.remove_node("v2")
    w = is_isomorphic(left, right)
    assert w is not None
    assert w.node_map == {"v1": "v2"} and w.edge_map == {"e": "e"}
    assert verify_witness(left, right, w)


def test_is_isomorphic_self_gives_valid_witness():
    h = h_twin()
    w = is_isomorphic(h, h)
    assert w is not None and verify_witness(h, h, w)


def test_path_vs_disjoint_edges_not_isomorphic():
    path = Hypergraph(
        ["a", "b", "c", "d"],
        ["x", "y"],
        [("a", "x"), ("b", "x"), ("b", "y"), ("c", "y")],
    )
    disjoint = Hypergraph(
        ["a", "b", "c", "d"],
        ["x", "y"],
        [("a", "x"), ("b", "x"), ("c", "y"), ("d", "y")],
    )
    assert is_isomorphic(path, disjoint) is None
    assert not brute_force_isomorphic(path, disjoint)


def test_brute_force_shape_mismatch_is_false():
    assert not brute_force_isomorphic(h_twin(), Hypergraph(["v"], [], []))


def test_brute_force_capacity_error():
    big = Hypergraph([f"v{i}" for i in range(6)], [f"e{i}" for i in range(5)], [])
    with pytest.raises(CapacityError):
        brute_force_isomorphic(big, big)


def test_oracle_agreement_exhaustive_small():
    universe = list(all_hypergraphs(2, 2))
    for a, b in itertools.combinations(universe, 2):
        assert (is_isomorphic(a, b) is not None) == brute_force_isomorphic(a, b)


@settings(max_examples=60)
@given(hypergraphs(max_nodes=3, max_edges=3), hypergraphs(max_nodes=3, max_edges=3))
def test_oracle_agreement_random(a, b):
    w = is_isomorphic(a, b)
    assert (w is not None) == brute_force_isomorphic(a, b)
    if w is not None:
        assert verify_witness(a, b, w)


@given(hypergraphs(max_nodes=4, max_edges=4))
def test_isomorphism_is_reflexive_and_symmetric(h):
    assert is_isomorphic(h, h) is not None
    other = relabel(
        h,
        {v: f"n{v}" for v in h.nodes},
        {e: f"m{e}" for e in h.edges},
    )
    assert (is_isomorphic(h, other) is not None) == (is_isomorphic(other, h) is not None)


def test_transitivity_through_canonical_forms():
    h = h_twin()
    a = relabel(h, {"v1": "p", "v2": "q"}, {"e": "r"})
    b = relabel(h, {"v1": "s", "v2": "t"}, {"e": "u"})
    assert is_isomorphic(h, a) and is_isomorphic(a, b) and is_isomorphic(h, b)


def test_size_guard_rejects_oversized():
    big = Hypergraph([f"v{i}" for i in range(41)], [], [])
    with pytest.raises(CapacityError):
        canonical_form(big)
    assert canonical_form(big, size_guard=50).shape == (41, 0)


def test_size_guard_env_override(monkeypatch):
    big = Hypergraph([f"v{i}" for i in range(41)], [], [])
    monkeypatch.setenv("HYPERKERNEL_SIZE_GUARD", "100")
    assert canonical_form(big).shape == (41, 0)
    monkeypatch.setenv("HYPERKERNEL_SIZE_GUARD", "5")
    with pytest.raises(CapacityError):
        canonical_form(Hypergraph([f"v{i}" for i in range(4)], ["e1", "e2"], []))
    with pytest.raises(CapacityError):
        is_isomorphic(big, big, size_guard=3)


def test_size_guard_env_rejects_garbage(monkeypatch):
    from hyperkernel import HypergraphError, default_size_guard

    monkeypatch.setenv("HYPERKERNEL_SIZE_GUARD", "many")
    with pytest.raises(HypergraphError):
        default_size_guard()


def test_reduced_forms_of_symmetric_instances_match():
    # pendant pairs plus a cycle, the shape minimal forms tend to take
    h = Hypergraph(
        ["p1", "p2", "c1", "c2", "c3"],
        ["q1", "q2", "d1", "d2", "d3"],
        [
            ("p1", "q1"),
            ("p2", "q2"),
            ("c1", "d1"),
            ("c2", "d1"),
            ("c2", "d2"),
            ("c3", "d2"),
            ("c3", "d3"),
            ("c1", "d3"),
        ],
    )
    renamed = relabel(
        h,
        {v: f"z{i}" for i, v in enumerate(sorted(h.nodes))},
        {e: f"w{i}" for i, e in enumerate(sorted(h.edges))},
    )
    assert canonical_form(h) == canonical_form(renamed)
    assert canonical_form(reduce(h, LEX_EDGE_FIRST)[0]) == canonical_form(h)
