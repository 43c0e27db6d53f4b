"""Domination rewrite rules and reduction to minimal form.

Two rules shrink a hypergraph without changing its minimum hitting set:

* edge domination removes an edge whose node set contains another edge's
  node set (the superset edge goes, the contained edge is the witness);
* node domination removes a node whose edge set is contained in another
  node's edge set (the subset node goes, the covering node is the witness).

Inclusions are plain set inclusion, so empty objects participate: an edge
incident to no node dominates every other edge, and a node incident to no
edge is dominated by every other node.  Twins (equal incidence sets) yield
rules in both directions.

A hypergraph is minimal when neither rule applies.  ``reduce`` repeatedly
applies rules chosen by a strategy until minimal, recording a trace; every
reduction halts within |nodes| + |edges| steps because each step deletes
exactly one object.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .core import DomainError, Hypergraph


class RuleKind(enum.Enum):
    NODE = "node"
    EDGE = "edge"


class RuleNotApplicableError(DomainError):
    """The rule's inclusion precondition does not hold on this hypergraph."""


@dataclass(frozen=True)
class RuleApplication:
    """One rewrite step: the object deleted and the counterpart justifying it.

    For EDGE rules both ids are edges and the witness's node set must be
    contained in the removed edge's node set.  For NODE rules both ids are
    nodes and the removed node's edge set must be contained in the witness's.
    """

    kind: RuleKind
    removed: str
    witness: str

    def to_line(self) -> str:
        return f"{self.kind.value} remove={self.removed} witness={self.witness}"


def rule_from_line(line: str) -> RuleApplication:
    """Parse the one-line trace form, ``<kind> remove=<id> witness=<id>``."""
    parts = line.split()
    if (
        len(parts) != 3
        or parts[0] not in ("node", "edge")
        or not parts[1].startswith("remove=")
        or not parts[2].startswith("witness=")
    ):
        raise DomainError(f"malformed trace line {line!r}")
    return RuleApplication(
        RuleKind(parts[0]),
        parts[1][len("remove="):],
        parts[2][len("witness="):],
    )


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered rule applications taking an input to a reduced hypergraph."""

    steps: tuple[RuleApplication, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def to_text(self) -> str:
        return "".join(step.to_line() + "\n" for step in self.steps)


_STRATEGY_KINDS = ("lex-node-first", "lex-edge-first", "random")


@dataclass(frozen=True)
class Strategy:
    """Deterministic rule-selection policy.

    ``lex-node-first`` picks the lexicographically first node rule, falling
    back to the first edge rule; ``lex-edge-first`` is symmetric.  ``random``
    draws uniformly from the concatenated candidate list (node rules first)
    using a Mersenne Twister seeded with ``seed``, so the same hypergraph and
    strategy always select the same rule on any platform.
    """

    kind: str
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _STRATEGY_KINDS:
            raise ValueError(f"unknown strategy kind {self.kind!r}")
        if self.kind == "random" and self.seed is None:
            raise ValueError("random strategy requires a seed")
        if self.kind != "random" and self.seed is not None:
            raise ValueError(f"{self.kind} strategy takes no seed")


LEX_NODE_FIRST = Strategy("lex-node-first")
LEX_EDGE_FIRST = Strategy("lex-edge-first")


def random_strategy(seed: int) -> Strategy:
    return Strategy("random", seed)


def find_edge_dominations(h: Hypergraph) -> list[RuleApplication]:
    """All applicable edge-domination rules, ordered by (removed, witness).

    A pair is applicable when the edges differ and the witness's node set is
    a subset of the removed edge's node set.
    """
    out = []
    edges = sorted(h.edges)
    for removed in edges:
        covered = h.incident_nodes(removed)
        for witness in edges:
            if witness != removed and h.incident_nodes(witness) <= covered:
                out.append(RuleApplication(RuleKind.EDGE, removed, witness))
    return out


def find_node_dominations(h: Hypergraph) -> list[RuleApplication]:
    """All applicable node-domination rules, ordered by (removed, witness).

    A pair is applicable when the nodes differ and the removed node's edge
    set is a subset of the witness's edge set.
    """
    out = []
    nodes = sorted(h.nodes)
    for removed in nodes:
        mine = h.incident_edges(removed)
        for witness in nodes:
            if witness != removed and mine <= h.incident_edges(witness):
                out.append(RuleApplication(RuleKind.NODE, removed, witness))
    return out


def apply(h: Hypergraph, rule: RuleApplication) -> Hypergraph:
    """Apply one rule, checking its precondition against h first."""
    if rule.removed == rule.witness:
        raise RuleNotApplicableError(
            f"removed and witness coincide ({rule.removed!r})"
        )
    if rule.kind is RuleKind.EDGE:
        witness_nodes = h.incident_nodes(rule.witness)
        removed_nodes = h.incident_nodes(rule.removed)
        if not witness_nodes <= removed_nodes:
            raise RuleNotApplicableError(
                f"edge rule needs nodes({rule.witness}) ⊆ nodes({rule.removed}) "
                f"but {sorted(witness_nodes)} ⊄ {sorted(removed_nodes)}"
            )
        return h.remove_edge(rule.removed)
    removed_edges = h.incident_edges(rule.removed)
    witness_edges = h.incident_edges(rule.witness)
    if not removed_edges <= witness_edges:
        raise RuleNotApplicableError(
            f"node rule needs edges({rule.removed}) ⊆ edges({rule.witness}) "
            f"but {sorted(removed_edges)} ⊄ {sorted(witness_edges)}"
        )
    return h.remove_node(rule.removed)


def is_minimal(h: Hypergraph) -> bool:
    """True when no rewrite rule applies."""
    return not find_node_dominations(h) and not find_edge_dominations(h)


def step(
    h: Hypergraph, strategy: Strategy
) -> tuple[RuleApplication, Hypergraph] | None:
    """Select and apply one rule per the strategy; None when h is minimal."""
    node_rules = find_node_dominations(h)
    edge_rules = find_edge_dominations(h)
    if not node_rules and not edge_rules:
        return None
    if strategy.kind == "lex-node-first":
        rule = (node_rules or edge_rules)[0]
    elif strategy.kind == "lex-edge-first":
        rule = (edge_rules or node_rules)[0]
    else:
        candidates = node_rules + edge_rules
        rule = candidates[random.Random(strategy.seed).randrange(len(candidates))]
    return rule, apply(h, rule)


def reduce(h: Hypergraph, strategy: Strategy) -> tuple[Hypergraph, ReductionTrace]:
    """Iterate ``step`` until no rule applies; returns the minimal form and
    the trace that produced it.  Replaying the trace from h with ``apply``
    reproduces the result exactly."""
    steps = []
    current = h
    while True:
        picked = step(current, strategy)
        if picked is None:
            return current, ReductionTrace(tuple(steps))
        rule, current = picked
        steps.append(rule)
