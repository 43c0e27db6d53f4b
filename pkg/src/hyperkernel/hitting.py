"""Exact minimum hitting set computation.

A hitting set is a set of nodes meeting every edge; the oracle here reports
the least possible cardinality together with one witness of that size.  It
exists to confirm that domination rewrites leave the minimum hitting set
size unchanged, so it favors being obviously correct over scaling: a node
bound (default 20) rejects instances the branch-and-bound is not meant for.

An edge incident to no node cannot be hit, so such instances are reported
infeasible rather than rejected; a hypergraph with no edges at all has the
empty set as its (size 0) minimum.  Among equal-size witnesses the
lexicographically least one is returned, which keeps output stable for
golden tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import CapacityError, Hypergraph, UnknownIdError

DEFAULT_NODE_BOUND = 20


@dataclass(frozen=True)
class HittingSetResult:
    feasible: bool
    size: int | None = None
    witness: frozenset[str] | None = None


INFEASIBLE = HittingSetResult(False)


def is_hitting_set(h: Hypergraph, candidate: Iterable[str]) -> bool:
    """True when every edge of h contains at least one node of candidate."""
    chosen = frozenset(candidate)
    unknown = chosen - h.nodes
    if unknown:
        raise UnknownIdError(f"unknown node ids {sorted(unknown)}")
    return all(h.incident_nodes(e) & chosen for e in h.edges)


def _packing_lower_bound(edge_sets) -> int:
    # pairwise disjoint edges each need their own node
    used: set[str] = set()
    count = 0
    for es in sorted(edge_sets, key=lambda s: (len(s), sorted(s))):
        if not (es & used):
            count += 1
            used |= es
    return count


def _greedy_cover(edge_sets, nodes) -> set[str]:
    uncovered = list(edge_sets)
    chosen: set[str] = set()
    while uncovered:
        best_v = min(nodes, key=lambda v: (-sum(1 for es in uncovered if v in es), v))
        chosen.add(best_v)
        uncovered = [es for es in uncovered if best_v not in es]
    return chosen


def min_hitting_set(h: Hypergraph, max_nodes: int | None = None) -> HittingSetResult:
    """Minimum hitting set of h, or INFEASIBLE when an empty edge exists.

    Exact search: branch and bound over nodes in descending-degree order,
    seeded with a greedy upper bound and pruned by a disjoint-edge packing
    lower bound.  A second pass rebuilds the lexicographically least witness
    of the optimal size.
    """
    bound = DEFAULT_NODE_BOUND if max_nodes is None else max_nodes
    if len(h.nodes) > bound:
        raise CapacityError(
            f"hitting-set search is limited to {bound} nodes, got {len(h.nodes)}"
        )
    edge_sets = [h.incident_nodes(e) for e in sorted(h.edges)]
    if any(not es for es in edge_sets):
        return INFEASIBLE
    if not edge_sets:
        return HittingSetResult(True, 0, frozenset())
    # identical edges impose identical constraints
    edge_sets = sorted(set(edge_sets), key=lambda s: (len(s), sorted(s)))

    nodes = sorted(h.nodes)
    order = sorted(nodes, key=lambda v: (-len(h.incident_edges(v)), v))
    best = len(_greedy_cover(edge_sets, nodes))

    def search(i: int, chosen_count: int, uncovered: tuple) -> None:
        nonlocal best
        if not uncovered:
            best = min(best, chosen_count)
            return
        if chosen_count + _packing_lower_bound(uncovered) >= best:
            return
        if i == len(order):
            return
        remaining = frozenset(order[i:])
        if any(es.isdisjoint(remaining) for es in uncovered):
            return
        v = order[i]
        still_uncovered = tuple(es for es in uncovered if v not in es)
        if len(still_uncovered) < len(uncovered):
            search(i + 1, chosen_count + 1, still_uncovered)
        search(i + 1, chosen_count, uncovered)

    search(0, 0, tuple(edge_sets))

    def can_cover(uncovered: tuple, allowed: frozenset, budget: int) -> bool:
        if not uncovered:
            return True
        if budget <= 0 or _packing_lower_bound(uncovered) > budget:
            return False
        pivot = min(uncovered, key=lambda s: (len(s & allowed), sorted(s)))
        for v in sorted(pivot & allowed):
            rest = tuple(s for s in uncovered if v not in s)
            if can_cover(rest, allowed - {v}, budget - 1):
                return True
        return False

    # minimum witnesses contain no redundant node, so extending the prefix
    # with the least node that still fits the optimum yields the lex-least one
    witness: list[str] = []
    uncovered = tuple(edge_sets)
    start = 0
    while uncovered:
        for j in range(start, len(nodes)):
            v = nodes[j]
            after = tuple(s for s in uncovered if v not in s)
            if len(after) == len(uncovered):
                continue
            if can_cover(after, frozenset(nodes[j + 1:]), best - len(witness) - 1):
                witness.append(v)
                uncovered = after
                start = j + 1
                break
        else:  # pragma: no cover - best is achievable by construction
            raise AssertionError("failed to rebuild a witness of optimal size")
    assert len(witness) == best
    return HittingSetResult(True, best, frozenset(witness))
