"""Random instances and executable checks of the rewrite system's guarantees.

The checks turn the theory into runnable predicates:

* ``check_diamond``: every pair of distinct one-step rewrites rejoins to
  isomorphic hypergraphs within at most one further step on each side;
* ``check_confluence``: all strategies reach isomorphic minimal forms;
* ``check_rule_lifting``: renaming ids maps the applicable-rule set onto the
  renamed hypergraph's rule set and commutes with application;
* ``check_hs_preservation``: single steps and full reduction leave the
  minimum hitting set status and size untouched.

Plain sparse random hypergraphs rarely admit any rule, so the generator can
plant dominations by overwriting one object's incidence set with a subset
(nodes) or superset (edges) of another's.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Hypergraph, relabel
from .hitting import min_hitting_set
from .iso import canonical_form
from .rewrite import (
    LEX_NODE_FIRST,
    RuleApplication,
    RuleKind,
    Strategy,
    apply,
    find_edge_dominations,
    find_node_dominations,
    reduce,
)


@dataclass(frozen=True)
class GeneratorParams:
    """Knobs for the random instance generator; equal params give the exact
    same hypergraph on every run and platform."""

    max_nodes: int
    max_edges: int
    density: float
    planted_dominations: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be at least 1")
        if self.max_edges < 0:
            raise ValueError("max_edges must be nonnegative")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must be within [0, 1]")
        if self.planted_dominations < 0:
            raise ValueError("planted_dominations must be nonnegative")


@dataclass(frozen=True)
class DiamondReport:
    """Outcome of the one-step rejoin check on a single instance."""

    instance: Hypergraph
    divergent_pairs_checked: int
    failures: tuple[tuple[RuleApplication, RuleApplication], ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def random_hypergraph(params: GeneratorParams) -> Hypergraph:
    """Seeded random instance: node count uniform in [1, max_nodes], edge
    count uniform in [0, max_edges], each incidence pair kept with the given
    density, then the requested number of planted dominations."""
    rng = random.Random(params.seed)
    n = rng.randint(1, params.max_nodes)
    m = rng.randint(0, params.max_edges)
    nodes = [f"v{i}" for i in range(1, n + 1)]
    edges = [f"e{j}" for j in range(1, m + 1)]
    node_sets = {v: {e for e in edges if rng.random() < params.density} for v in nodes}
    for _ in range(params.planted_dominations):
        plant_node = rng.random() < 0.5
        if plant_node and n >= 2:
            victim, donor = rng.sample(nodes, 2)
            node_sets[victim] = {
                e for e in sorted(node_sets[donor]) if rng.random() < 0.5
            }
        elif not plant_node and m >= 2:
            witness, grown = rng.sample(edges, 2)
            for v in nodes:
                if witness in node_sets[v] or rng.random() < 0.5:
                    node_sets[v].add(grown)
                else:
                    node_sets[v].discard(grown)
    incidence = {(v, e) for v in nodes for e in node_sets[v]}
    return Hypergraph(nodes, edges, incidence)


def chain_hypergraph(length: int) -> Hypergraph:
    """Alternating chain of the given length (at least 7, congruent 3 mod 4).

    Nodes v1..vL and edges e1..eL with each vi on ei, each vi (i >= 2) also
    on e(i-1), and one closing pair putting v((L+3)/2) on eL.  The closing
    pair turns the upper half into a cycle, so reduction burns down the lower
    half in (L+1)/2 forced steps that strictly alternate between node and
    edge removals.  The congruence keeps the tail's node count even; with an
    odd tail the last forced step strands a pendant edge on the cycle and the
    burn continues through it.
    """
    if length < 7 or length % 4 != 3:
        raise ValueError("chain length must be at least 7 and congruent to 3 mod 4")
    width = len(str(length))
    node = [f"v{i:0{width}d}" for i in range(1, length + 1)]
    edge = [f"e{i:0{width}d}" for i in range(1, length + 1)]
    incidence = {(node[i], edge[i]) for i in range(length)}
    incidence |= {(node[i], edge[i - 1]) for i in range(1, length)}
    incidence.add((node[(length + 3) // 2 - 1], edge[length - 1]))
    return Hypergraph(node, edge, incidence)


def _all_rules(h: Hypergraph) -> list[RuleApplication]:
    return find_node_dominations(h) + find_edge_dominations(h)


def check_diamond(h: Hypergraph, size_guard: int | None = None) -> DiamondReport:
    """Try to rejoin every unordered pair of distinct applicable rules.

    A pair fails when no hypergraph reachable from one side in zero or one
    further step is isomorphic to one reachable from the other side.  The
    zero-step case matters: removing one of two twin objects can make the
    other removal inapplicable while the two results are already isomorphic.
    """
    rules = _all_rules(h)
    reachable: list[frozenset] = []
    for rule in rules:
        h1 = apply(h, rule)
        forms = {canonical_form(h1, size_guard)}
        for follow_up in _all_rules(h1):
            forms.add(canonical_form(apply(h1, follow_up), size_guard))
        reachable.append(frozenset(forms))
    failures = []
    checked = 0
    for i in range(len(rules)):
        for j in range(i + 1, len(rules)):
            checked += 1
            if reachable[i].isdisjoint(reachable[j]):
                failures.append((rules[i], rules[j]))
    return DiamondReport(h, checked, tuple(failures))


def check_confluence(
    h: Hypergraph, strategies: list[Strategy], size_guard: int | None = None
) -> bool:
    """True when all strategies reduce h to pairwise isomorphic minimal forms."""
    if not strategies:
        raise ValueError("at least one strategy is required")
    forms = {canonical_form(reduce(h, s)[0], size_guard) for s in strategies}
    return len(forms) == 1


def _relabeling(h: Hypergraph, seed: int) -> tuple[dict[str, str], dict[str, str]]:
    rng = random.Random(seed)
    node_slots = list(range(len(h.nodes)))
    edge_slots = list(range(len(h.edges)))
    rng.shuffle(node_slots)
    rng.shuffle(edge_slots)
    node_map = {v: f"x{k}" for v, k in zip(sorted(h.nodes), node_slots)}
    edge_map = {e: f"y{k}" for e, k in zip(sorted(h.edges), edge_slots)}
    return node_map, edge_map


def check_rule_lifting(h: Hypergraph, relabel_seed: int) -> bool:
    """Rename all ids with a seeded shuffle and confirm that applicable rules
    and their results transport across the renaming."""
    node_map, edge_map = _relabeling(h, relabel_seed)
    return check_rule_lifting_with(h, node_map, edge_map)


def check_rule_lifting_with(
    h: Hypergraph, node_map: dict[str, str], edge_map: dict[str, str]
) -> bool:
    """Rule-lifting check against an explicit relabeling."""
    renamed = relabel(h, node_map, edge_map)
    original_rules = _all_rules(h)
    transported = []
    for rule in original_rules:
        table = node_map if rule.kind is RuleKind.NODE else edge_map
        transported.append(
            RuleApplication(
                rule.kind,
                table.get(rule.removed, rule.removed),
                table.get(rule.witness, rule.witness),
            )
        )
    if set(transported) != set(_all_rules(renamed)):
        return False
    for rule, image in zip(original_rules, transported):
        if canonical_form(apply(h, rule)) != canonical_form(apply(renamed, image)):
            return False
    return True


def check_hs_preservation(h: Hypergraph, max_nodes: int | None = None) -> bool:
    """Minimum hitting set status and size must survive every single rule
    application and a full reduction."""
    base = min_hitting_set(h, max_nodes)
    signature = (base.feasible, base.size)
    for rule in _all_rules(h):
        after = min_hitting_set(apply(h, rule), max_nodes)
        if (after.feasible, after.size) != signature:
            return False
    reduced, _ = reduce(h, LEX_NODE_FIRST)
    final = min_hitting_set(reduced, max_nodes)
    return (final.feasible, final.size) == signature
