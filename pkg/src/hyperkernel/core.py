"""Hypergraph data model: node set, edge set, and an explicit incidence relation.

A hypergraph is a triple (nodes, edges, incidence) where incidence is a set of
(node, edge) pairs.  Ids are plain strings; the node and edge namespaces are
separate roles, so the same string may appear in both without them ever being
compared.  Degenerate shapes are all legal: empty node set, empty edge set,
edges incident to no node, nodes incident to no edge.

Values are immutable.  Removal operations return new hypergraphs, which lets
callers hold many one-step variants of the same input at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class HypergraphError(Exception):
    """Base class for every error raised by this package."""


class DomainError(HypergraphError):
    """A precondition on ids, orders, or rule applicability was violated."""


class UnknownIdError(DomainError):
    """An id was not found in the hypergraph; the message names the id."""


class CapacityError(HypergraphError):
    """An input exceeded a configured size bound."""


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph.  Constructor arguments may be any iterables and
    are normalized to frozensets, so duplicate incidence pairs collapse."""

    nodes: frozenset[str] = frozenset()
    edges: frozenset[str] = frozenset()
    incidence: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", frozenset(self.edges))
        object.__setattr__(
            self, "incidence", frozenset(tuple(pair) for pair in self.incidence)
        )
        edges_of: dict[str, set[str]] = {v: set() for v in self.nodes}
        nodes_of: dict[str, set[str]] = {e: set() for e in self.edges}
        for pair in self.incidence:
            if len(pair) != 2:
                continue  # malformed pairs are reported by validate()
            v, e = pair
            if v in edges_of and e in nodes_of:
                edges_of[v].add(e)
                nodes_of[e].add(v)
        object.__setattr__(
            self, "_edges_of", {v: frozenset(s) for v, s in edges_of.items()}
        )
        object.__setattr__(
            self, "_nodes_of", {e: frozenset(s) for e, s in nodes_of.items()}
        )

    def __repr__(self) -> str:
        return (
            f"Hypergraph(nodes={sorted(self.nodes)}, edges={sorted(self.edges)}, "
            f"incidence={sorted(self.incidence)})"
        )

    @property
    def size(self) -> int:
        """Total object count, |nodes| + |edges|."""
        return len(self.nodes) + len(self.edges)

    def incident_edges(self, v: str) -> frozenset[str]:
        """All edges incident to node v."""
        try:
            return self._edges_of[v]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownIdError(f"unknown node id {v!r}") from None

    def incident_nodes(self, e: str) -> frozenset[str]:
        """All nodes the edge e is incident to."""
        try:
            return self._nodes_of[e]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownIdError(f"unknown edge id {e!r}") from None

    def remove_node(self, v: str) -> Hypergraph:
        """New hypergraph without node v; its incidence pairs are dropped."""
        if v not in self.nodes:
            raise UnknownIdError(f"unknown node id {v!r}")
        return Hypergraph(
            self.nodes - {v},
            self.edges,
            frozenset(p for p in self.incidence if p[0] != v),
        )

    def remove_edge(self, e: str) -> Hypergraph:
        """New hypergraph without edge e; its incidence pairs are dropped."""
        if e not in self.edges:
            raise UnknownIdError(f"unknown edge id {e!r}")
        return Hypergraph(
            self.nodes,
            self.edges - {e},
            frozenset(p for p in self.incidence if p[1] != e),
        )

    def incidence_matrix(
        self,
        node_order: Iterable[str] | None = None,
        edge_order: Iterable[str] | None = None,
    ) -> IncidenceMatrix:
        """0/1 matrix view, rows = nodes, columns = edges.

        Orders default to sorted ids; explicit orders must be permutations of
        the node and edge sets.
        """
        n_order = tuple(node_order) if node_order is not None else tuple(sorted(self.nodes))
        e_order = tuple(edge_order) if edge_order is not None else tuple(sorted(self.edges))
        if len(n_order) != len(self.nodes) or set(n_order) != self.nodes:
            raise DomainError(f"node order {list(n_order)!r} is not a permutation of the node set")
        if len(e_order) != len(self.edges) or set(e_order) != self.edges:
            raise DomainError(f"edge order {list(e_order)!r} is not a permutation of the edge set")
        bits = tuple(
            tuple(1 if (v, e) in self.incidence else 0 for e in e_order)
            for v in n_order
        )
        return IncidenceMatrix(n_order, e_order, bits)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Row-major 0/1 matrix with explicit row (node) and column (edge) orders."""

    node_order: tuple[str, ...]
    edge_order: tuple[str, ...]
    bits: tuple[tuple[int, ...], ...]


def hypergraph_from_matrix(matrix: IncidenceMatrix) -> Hypergraph:
    """Rebuild the hypergraph an incidence matrix was taken from."""
    incidence = {
        (v, e)
        for i, v in enumerate(matrix.node_order)
        for j, e in enumerate(matrix.edge_order)
        if matrix.bits[i][j]
    }
    return Hypergraph(matrix.node_order, matrix.edge_order, incidence)


def _id_problems(role: str, ident: object) -> list[str]:
    problems = []
    if not isinstance(ident, str):
        problems.append(f"{role} id {ident!r} is not a string")
    elif not ident:
        problems.append(f"{role} id is empty")
    elif any(ch.isspace() for ch in ident):
        problems.append(f"{role} id {ident!r} contains whitespace")
    return problems


def validate(h: Hypergraph) -> list[str]:
    """Check structural invariants; returns one message per violation.

    An empty list means the hypergraph is well formed.  Violations are data,
    not errors, so malformed values can be inspected rather than rejected.
    """
    violations: list[str] = []
    for v in sorted(h.nodes, key=repr):
        violations.extend(_id_problems("node", v))
    for e in sorted(h.edges, key=repr):
        violations.extend(_id_problems("edge", e))
    for pair in sorted(h.incidence, key=repr):
        if len(pair) != 2:
            violations.append(f"incidence entry {pair!r} is not a (node, edge) pair")
            continue
        v, e = pair
        if v not in h.nodes:
            violations.append(f"incidence pair {pair!r} references unknown node {v!r}")
        if e not in h.edges:
            violations.append(f"incidence pair {pair!r} references unknown edge {e!r}")
    return violations


def relabel(
    h: Hypergraph,
    node_map: Mapping[str, str] | None = None,
    edge_map: Mapping[str, str] | None = None,
) -> Hypergraph:
    """Rename nodes and edges through the given injective maps.

    Ids missing from a map keep their name.  The resulting id sets must stay
    collision free within each role.
    """
    nm = dict(node_map or {})
    em = dict(edge_map or {})
    new_nodes = [nm.get(v, v) for v in h.nodes]
    new_edges = [em.get(e, e) for e in h.edges]
    if len(set(new_nodes)) != len(h.nodes):
        raise DomainError("node relabeling is not injective")
    if len(set(new_edges)) != len(h.edges):
        raise DomainError("edge relabeling is not injective")
    return Hypergraph(
        new_nodes,
        new_edges,
        {(nm.get(v, v), em.get(e, e)) for v, e in h.incidence},
    )
