"""Hypergraph isomorphism via canonical forms.

The canonical form of a hypergraph is the lexicographically least bit string
obtainable by writing out its incidence matrix (rows concatenated) under any
node-row order combined with any edge-column order.  Row and column
permutations are independent and never mix roles, so two hypergraphs have
equal canonical forms exactly when they are isomorphic.

The search fixes rows one at a time.  Choosing a node refines an ordered
partition of the edge columns (for each block, columns the node misses come
before columns it hits), which freezes that node's row as the minimum the
current partition allows.  Since prefixes decide lexicographic comparisons,
only nodes achieving the level-minimal row need to be branched on; ties are
further pruned by a symmetry check (two candidates whose incidence sets can
be swapped by a block-preserving column involution that fixes every other
remaining node lead to identical subtrees).  A global best bound prunes the
rest.  Worst-case cost is exponential, which is acceptable at the intended
instance sizes; a size guard protects interactive use.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import permutations

from .core import CapacityError, Hypergraph, HypergraphError

DEFAULT_SIZE_GUARD = 40
SIZE_GUARD_ENV = "HYPERKERNEL_SIZE_GUARD"
BRUTE_FORCE_LIMIT = 10


def default_size_guard() -> int:
    """Configured size guard: the env override if set, else the default."""
    raw = os.environ.get(SIZE_GUARD_ENV)
    if raw is None:
        return DEFAULT_SIZE_GUARD
    try:
        return int(raw)
    except ValueError:
        raise HypergraphError(
            f"invalid {SIZE_GUARD_ENV} value {raw!r}, expected an integer"
        ) from None


@dataclass(frozen=True)
class CanonicalForm:
    """Order-independent fingerprint of an isomorphism class.

    ``bits`` is the minimal incidence-matrix bit string; ``shape`` is
    (|nodes|, |edges|).  The orders that achieved the minimum are carried
    along for witness extraction but do not take part in equality.
    """

    shape: tuple[int, int]
    bits: str
    node_order: tuple[str, ...] = field(compare=False, repr=False, default=())
    edge_order: tuple[str, ...] = field(compare=False, repr=False, default=())

    def render(self) -> str:
        return f"{self.shape[0]}x{self.shape[1]}:{self.bits}"


@dataclass(frozen=True)
class IsomorphismWitness:
    """Certifying bijections, mapping the second hypergraph onto the first."""

    node_map: dict[str, str]
    edge_map: dict[str, str]


def _check_guard(h: Hypergraph, guard: int | None) -> int:
    limit = default_size_guard() if guard is None else guard
    if h.size > limit:
        raise CapacityError(
            f"hypergraph has {h.size} objects, size guard is {limit} "
            f"(override with {SIZE_GUARD_ENV} or an explicit size_guard)"
        )
    return limit


def _split(blocks, hit):
    out = []
    for b in blocks:
        inter = b & hit
        if inter and len(inter) < len(b):
            out.append(b - inter)
            out.append(inter)
        else:
            out.append(b)
    return tuple(out)


def canonical_form(h: Hypergraph, size_guard: int | None = None) -> CanonicalForm:
    """Compute the canonical form of h.

    Raises CapacityError when |nodes| + |edges| exceeds the size guard
    (default 40, overridable per call or via HYPERKERNEL_SIZE_GUARD).
    """
    _check_guard(h, size_guard)
    nodes = sorted(h.nodes)
    edges = sorted(h.edges)
    eidx = {e: i for i, e in enumerate(edges)}
    inc = {v: frozenset(eidx[e] for e in h.incident_edges(v)) for v in nodes}
    init_blocks = (frozenset(range(len(edges))),) if edges else ()

    best_rows: list[tuple[int, ...]] | None = None
    best_order: tuple[str, ...] | None = None

    def dfs(remaining: frozenset[str], blocks, rows: list, order: list) -> None:
        nonlocal best_rows, best_order
        if best_rows is not None:
            # relate the current prefix to the incumbent; equal prefixes must
            # keep searching, larger ones can never win
            tight = True
            for mine, theirs in zip(rows, best_rows):
                if mine < theirs:
                    tight = False
                    break
                if mine > theirs:
                    return
        else:
            tight = False
        if not remaining:
            if best_rows is None or rows < best_rows:
                best_rows = list(rows)
                best_order = tuple(order)
            return
        row_of = {v: tuple(len(b & inc[v]) for b in blocks) for v in remaining}
        min_row = min(row_of.values())
        if tight and min_row > best_rows[len(rows)]:
            return
        reps: list[str] = []
        for v in sorted(r for r in remaining if row_of[r] == min_row):
            interchangeable = False
            for w in reps:
                diff = inc[v] ^ inc[w]
                if not diff or all(
                    not (diff & inc[u]) for u in remaining if u != v and u != w
                ):
                    interchangeable = True
                    break
            if not interchangeable:
                reps.append(v)
        rows.append(min_row)
        for v in reps:
            order.append(v)
            dfs(remaining - {v}, _split(blocks, inc[v]), rows, order)
            order.pop()
        rows.pop()

    dfs(frozenset(nodes), init_blocks, [], [])
    assert best_order is not None

    blocks = init_blocks
    parts = []
    for v in best_order:
        hit = inc[v]
        parts.append(
            "".join(
                "0" * (len(b) - len(b & hit)) + "1" * len(b & hit) for b in blocks
            )
        )
        blocks = _split(blocks, hit)
    edge_order = tuple(edges[i] for b in blocks for i in sorted(b))
    return CanonicalForm(
        (len(nodes), len(edges)), "".join(parts), best_order, edge_order
    )


def verify_witness(h1: Hypergraph, h2: Hypergraph, w: IsomorphismWitness) -> bool:
    """Check that w maps h2 onto h1: bijective on both roles and incidence
    preserving in both directions."""
    if set(w.node_map) != h2.nodes or set(w.node_map.values()) != h1.nodes:
        return False
    if set(w.edge_map) != h2.edges or set(w.edge_map.values()) != h1.edges:
        return False
    if len(set(w.node_map.values())) != len(w.node_map):
        return False
    if len(set(w.edge_map.values())) != len(w.edge_map):
        return False
    return all(
        ((v, e) in h2.incidence) == ((w.node_map[v], w.edge_map[e]) in h1.incidence)
        for v in h2.nodes
        for e in h2.edges
    )


def is_isomorphic(
    h1: Hypergraph, h2: Hypergraph, size_guard: int | None = None
) -> IsomorphismWitness | None:
    """Witness mapping h2 onto h1 if the two are isomorphic, else None.

    Decided by canonical-form equality; the witness pairs up the canonical
    orders of the two inputs.
    """
    c1 = canonical_form(h1, size_guard)
    c2 = canonical_form(h2, size_guard)
    if c1 != c2:
        return None
    witness = IsomorphismWitness(
        dict(zip(c2.node_order, c1.node_order)),
        dict(zip(c2.edge_order, c1.edge_order)),
    )
    if not verify_witness(h1, h2, witness):
        raise HypergraphError("internal error: canonical orders disagree")
    return witness


def brute_force_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    """Isomorphism decision by exhaustive bijection enumeration.

    Testing oracle, independent of the canonical-form path.  Either input
    with more than BRUTE_FORCE_LIMIT combined objects raises CapacityError.
    """
    for h in (h1, h2):
        if h.size > BRUTE_FORCE_LIMIT:
            raise CapacityError(
                f"brute-force search is limited to {BRUTE_FORCE_LIMIT} objects, "
                f"got {h.size}"
            )
    if len(h1.nodes) != len(h2.nodes) or len(h1.edges) != len(h2.edges):
        return False
    if len(h1.incidence) != len(h2.incidence):
        return False
    nodes1, nodes2 = sorted(h1.nodes), sorted(h2.nodes)
    edges1, edges2 = sorted(h1.edges), sorted(h2.edges)
    ndeg1 = {v: len(h1.incident_edges(v)) for v in nodes1}
    ndeg2 = {v: len(h2.incident_edges(v)) for v in nodes2}
    edeg1 = {e: len(h1.incident_nodes(e)) for e in edges1}
    edeg2 = {e: len(h2.incident_nodes(e)) for e in edges2}
    if sorted(ndeg1.values()) != sorted(ndeg2.values()):
        return False
    if sorted(edeg1.values()) != sorted(edeg2.values()):
        return False
    pairs2 = h2.incidence
    for f_images in permutations(nodes1):
        if any(ndeg2[v] != ndeg1[fv] for v, fv in zip(nodes2, f_images)):
            continue
        f = dict(zip(nodes2, f_images))
        for g_images in permutations(edges1):
            if any(edeg2[e] != edeg1[ge] for e, ge in zip(edges2, g_images)):
                continue
            g = dict(zip(edges2, g_images))
            if all((f[v], g[e]) in h1.incidence for v, e in pairs2):
                return True
    return False
