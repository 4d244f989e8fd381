"""Core graph types, validation, conversions, and solution checking.

An and/or graph is an acyclic digraph with a distinguished source that
reaches every vertex.  Each vertex is labeled "and" (a solution must take
all of its out-edges) or "or" (exactly one).  An x-y graph generalizes the
labels: a vertex labeled x-y has out-degree y and a solution must take
exactly x of its out-edges.  Sinks are labeled 0-0 and carry no obligation.

A solution subgraph is stored as a bare edge set; its vertex set is the
source plus every endpoint of a chosen edge.  Every vertex of a feasible
solution must be reachable from the source inside the solution itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

VertexId = str
Edge = tuple[VertexId, VertexId]

AND = "and"
OR = "or"

# weights are machine integers; sums beyond 2**63-1 are reported, not wrapped
MAX_WEIGHT = 2**31 - 1
MAX_SUM = 2**63 - 1


class InvalidGraphError(ValueError):
    """An operation received a graph that fails validation."""


class ValidationReport(NamedTuple):
    ok: bool
    violations: tuple[str, ...] = ()


class VerifyResult(NamedTuple):
    """Feasibility verdict: unpacks as (feasible, weight, violations)."""

    feasible: bool
    weight: int
    violations: tuple[str, ...] = ()


@dataclass(frozen=True)
class AndOrGraph:
    """And/or graph: vertex labels, weighted edges, source.

    ``labels`` maps vertex id to "and" or "or"; ``edges`` maps (tail, head)
    to a weight.  Instances are treated as immutable; the dict fields must
    not be mutated after construction.  ``zero_weights_allowed`` relaxes the
    positive-weight requirement to nonnegative.
    """

    labels: dict[VertexId, str]
    edges: dict[Edge, int]
    source: VertexId
    zero_weights_allowed: bool = False

    @cached_property
    def out_adj(self) -> dict[VertexId, list[tuple[VertexId, int]]]:
        """Out-adjacency, (head, weight) pairs sorted by head id."""
        return _out_adj(self.labels, self.edges)

    @cached_property
    def in_degrees(self) -> dict[VertexId, int]:
        return _in_degrees(self.labels, self.edges)

    def out_degree(self, v: VertexId) -> int:
        return len(self.out_adj[v])

    def is_sink(self, v: VertexId) -> bool:
        return not self.out_adj[v]

    def total_weight(self) -> int:
        return sum(self.edges.values())


@dataclass(frozen=True)
class XYGraph:
    """x-y graph: ``labels`` maps vertex id to an (x, y) pair."""

    labels: dict[VertexId, tuple[int, int]]
    edges: dict[Edge, int]
    source: VertexId
    zero_weights_allowed: bool = False

    @cached_property
    def out_adj(self) -> dict[VertexId, list[tuple[VertexId, int]]]:
        return _out_adj(self.labels, self.edges)

    @cached_property
    def in_degrees(self) -> dict[VertexId, int]:
        return _in_degrees(self.labels, self.edges)

    def out_degree(self, v: VertexId) -> int:
        return len(self.out_adj[v])

    def is_sink(self, v: VertexId) -> bool:
        return not self.out_adj[v]

    def total_weight(self) -> int:
        return sum(self.edges.values())


@dataclass(frozen=True)
class FGraph:
    """Dependency hypergraph: arcs from a single tail to a nonempty head set."""

    vertices: frozenset[VertexId]
    farcs: tuple[tuple[VertexId, frozenset[VertexId]], ...]


@dataclass(frozen=True)
class SolutionSubgraph:
    """A candidate solution: a set of (tail, head) edges."""

    edges: frozenset[Edge]

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self.edges

    def vertices(self, source: VertexId) -> set[VertexId]:
        vs = {source}
        for t, h in self.edges:
            vs.add(t)
            vs.add(h)
        return vs

    def __len__(self) -> int:
        return len(self.edges)


def _out_adj(labels, edges) -> dict[VertexId, list[tuple[VertexId, int]]]:
    adj: dict[VertexId, list[tuple[VertexId, int]]] = {v: [] for v in labels}
    for (t, h), w in edges.items():
        if t in adj:
            adj[t].append((h, w))
    for lst in adj.values():
        lst.sort()
    return adj


def _in_degrees(labels, edges) -> dict[VertexId, int]:
    deg = {v: 0 for v in labels}
    for (t, h) in edges:
        if h in deg:
            deg[h] += 1
    return deg


def _find_cycle(vertices, out_heads) -> list[VertexId]:
    """Return one directed cycle as a vertex sequence (first == last)."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in vertices}
    parent: dict[VertexId, VertexId] = {}
    for start in sorted(vertices):
        if color[start] != WHITE:
            continue
        stack = [(start, iter(out_heads.get(start, ())))]
        color[start] = GRAY
        while stack:
            v, it = stack[-1]
            advanced = False
            for h in it:
                if h not in color:
                    continue
                if color[h] == GRAY:
                    # walk parents back from v to h
                    cyc = [v]
                    cur = v
                    while cur != h:
                        cur = parent[cur]
                        cyc.append(cur)
                    cyc.reverse()
                    cyc.append(cyc[0])
                    return cyc
                if color[h] == WHITE:
                    color[h] = GRAY
                    parent[h] = v
                    stack.append((h, iter(out_heads.get(h, ()))))
                    advanced = True
                    break
            if not advanced:
                color[v] = BLACK
                stack.pop()
    return []


def _structural_violations(labels, edges, source, zero_ok) -> list[str]:
    out: list[str] = []
    if source not in labels:
        out.append(f"source {source!r} is not a declared vertex")
        return out

    out_heads: dict[VertexId, list[VertexId]] = {v: [] for v in labels}
    indeg = {v: 0 for v in labels}
    bad_endpoint = False
    for (t, h), w in edges.items():
        if t not in labels or h not in labels:
            out.append(f"edge ({t}, {h}) references an undeclared vertex")
            bad_endpoint = True
            continue
        if t == h:
            out.append(f"cycle: {t} -> {h}")
            bad_endpoint = True
            continue
        out_heads[t].append(h)
        indeg[h] += 1
        if not isinstance(w, int) or isinstance(w, bool):
            out.append(f"edge ({t}, {h}) has a non-integer weight")
        elif w < 0:
            out.append(f"edge ({t}, {h}) has negative weight {w}")
        elif w == 0 and not zero_ok:
            out.append(f"zero-weight edge ({t}, {h}) but zero weights are not allowed")
        elif w > MAX_WEIGHT:
            out.append(f"edge ({t}, {h}) weight {w} exceeds the cap {MAX_WEIGHT}")

    if indeg[source] > 0:
        out.append(f"source {source} has in-degree {indeg[source]}")

    if not bad_endpoint:
        # acyclicity via Kahn's algorithm; name one cycle when it fails
        order: list[VertexId] = [v for v in labels if indeg[v] == 0]
        deg = dict(indeg)
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for h in out_heads[v]:
                deg[h] -= 1
                if deg[h] == 0:
                    order.append(h)
        if len(order) < len(labels):
            cyc = _find_cycle([v for v in labels if deg[v] > 0], out_heads)
            if cyc:
                out.append("cycle: " + " -> ".join(cyc))
            else:
                out.append("cycle: graph is not acyclic")

    # reachability from the source
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for h in out_heads.get(v, ()):
            if h not in seen:
                seen.add(h)
                stack.append(h)
    for v in sorted(labels):
        if v not in seen:
            out.append(f"unreachable: {v}")
    return out


def validate_andor(g: AndOrGraph) -> ValidationReport:
    """Check every and/or graph invariant; never raises on bad structure."""
    out = _structural_violations(g.labels, g.edges, g.source, g.zero_weights_allowed)
    for v, lab in g.labels.items():
        if lab not in (AND, OR):
            out.append(f"vertex {v} has label {lab!r}, expected 'and' or 'or'")
    return ValidationReport(not out, tuple(out))


def validate_xy(g: XYGraph) -> ValidationReport:
    """Check x-y graph invariants: y matches out-degree, 0 <= x <= y, 0-0 sinks."""
    out = _structural_violations(g.labels, g.edges, g.source, g.zero_weights_allowed)
    outdeg: dict[VertexId, int] = {v: 0 for v in g.labels}
    for (t, h) in g.edges:
        if t in outdeg:
            outdeg[t] += 1
    for v in sorted(g.labels):
        lab = g.labels[v]
        if (
            not isinstance(lab, tuple)
            or len(lab) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in lab)
        ):
            out.append(f"vertex {v} has label {lab!r}, expected an (x, y) pair")
            continue
        x, y = lab
        d = outdeg[v]
        if d == 0:
            if (x, y) != (0, 0):
                out.append(f"sink label at {v}: got {x}-{y}, a sink must be 0-0")
            continue
        if y != d:
            out.append(f"y mismatch at {v}: label says {y}, out-degree is {d}")
        if x < 0 or x > y:
            out.append(f"x out of range at {v}: {x} not in [0, {y}]")
    return ValidationReport(not out, tuple(out))


def require_valid_andor(g: AndOrGraph) -> None:
    rep = validate_andor(g)
    if not rep.ok:
        raise InvalidGraphError("; ".join(rep.violations))


def require_valid_xy(g: XYGraph) -> None:
    rep = validate_xy(g)
    if not rep.ok:
        raise InvalidGraphError("; ".join(rep.violations))


def andor_to_xy(g: AndOrGraph) -> XYGraph:
    """Rewrite and/or labels as x-y pairs over the same vertices and edges.

    Sinks become 0-0, an and-vertex of out-degree d becomes d-d, and an
    or-vertex of out-degree d becomes 1-d.  Feasibility of any edge set is
    preserved exactly.
    """
    require_valid_andor(g)
    labels: dict[VertexId, tuple[int, int]] = {}
    for v, lab in g.labels.items():
        d = len(g.out_adj[v])
        if d == 0:
            labels[v] = (0, 0)
        elif lab == AND:
            labels[v] = (d, d)
        else:
            labels[v] = (1, d)
    return XYGraph(labels, dict(g.edges), g.source, g.zero_weights_allowed)


def fgraph_to_andor(h: FGraph, root: VertexId) -> AndOrGraph:
    """Encode a dependency hypergraph as a unit-weight and/or graph.

    Every original vertex becomes an or-vertex.  An arc with a single head
    becomes a plain edge; an arc with two or more heads routes through a
    fresh and-vertex.  All edges get weight 1.
    """
    if root not in h.vertices:
        raise ValueError(f"root {root!r} is not a vertex of the hypergraph")
    for i, (tail, heads) in enumerate(h.farcs):
        if tail not in h.vertices:
            raise ValueError(f"arc {i}: tail {tail!r} is not a declared vertex")
        if not heads:
            raise ValueError(f"arc {i}: empty head set")
        for w in heads:
            if w not in h.vertices:
                raise ValueError(f"arc {i}: head {w!r} is not a declared vertex")

    # reachability through arcs, before committing to a construction
    seen = {root}
    changed = True
    while changed:
        changed = False
        for tail, heads in h.farcs:
            if tail in seen and not heads <= seen:
                seen |= heads
                changed = True
    missing = sorted(h.vertices - seen)
    if missing:
        raise ValueError(f"root does not reach all vertices: missing {', '.join(missing)}")

    labels: dict[VertexId, str] = {v: OR for v in h.vertices}
    edges: dict[Edge, int] = {}
    for i, (tail, heads) in enumerate(h.farcs):
        if len(heads) == 1:
            (head,) = heads
            edges[(tail, head)] = 1
        else:
            name = f"andarc{i}"
            while name in labels:
                name += "_"
            labels[name] = AND
            edges[(tail, name)] = 1
            for head in sorted(heads):
                edges[(name, head)] = 1

    out = AndOrGraph(labels, edges, root)
    rep = validate_andor(out)
    if not rep.ok:
        raise InvalidGraphError("hypergraph conversion failed: " + "; ".join(rep.violations))
    return out


def verify_solution_andor(g: AndOrGraph, h: SolutionSubgraph) -> VerifyResult:
    """Check feasibility of an edge set against an and/or graph.

    Returns the weight and a list of violated rules.  Raises ValueError if
    the solution references an edge the host graph does not have.
    """
    _check_edges_known(g.edges, h)
    vs = h.vertices(g.source)
    chosen_out: dict[VertexId, int] = {}
    for (t, _h2) in h.edges:
        chosen_out[t] = chosen_out.get(t, 0) + 1

    violations: list[str] = []
    for v in sorted(vs):
        d = len(g.out_adj.get(v, ()))
        if d == 0:
            continue  # sinks carry no obligation
        got = chosen_out.get(v, 0)
        if g.labels[v] == AND:
            if got != d:
                violations.append(f"and vertex {v} must take all {d} out-edges, has {got}")
        else:
            if got != 1:
                violations.append(f"or vertex {v} must take exactly one out-edge, has {got}")
    violations.extend(_unreached(g.source, vs, h))
    weight = sum(g.edges[e] for e in h.edges)
    return VerifyResult(not violations, weight, tuple(violations))


def verify_solution_xy(g: XYGraph, h: SolutionSubgraph) -> VerifyResult:
    """Check feasibility of an edge set against an x-y graph."""
    _check_edges_known(g.edges, h)
    vs = h.vertices(g.source)
    chosen_out: dict[VertexId, int] = {}
    for (t, _h2) in h.edges:
        chosen_out[t] = chosen_out.get(t, 0) + 1

    violations: list[str] = []
    for v in sorted(vs):
        x = g.labels[v][0]
        got = chosen_out.get(v, 0)
        if got != x:
            violations.append(f"vertex {v} must take exactly {x} out-edges, has {got}")
    violations.extend(_unreached(g.source, vs, h))
    weight = sum(g.edges[e] for e in h.edges)
    return VerifyResult(not violations, weight, tuple(violations))


def _check_edges_known(edges: dict[Edge, int], h: SolutionSubgraph) -> None:
    for e in h.edges:
        if e not in edges:
            raise ValueError(f"solution edge ({e[0]}, {e[1]}) is not an edge of the host graph")


def _unreached(source, vs, h: SolutionSubgraph) -> list[str]:
    adj: dict[VertexId, list[VertexId]] = {}
    for t, hd in h.edges:
        adj.setdefault(t, []).append(hd)
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for nb in adj.get(v, ()):
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return [
        f"vertex {v} is not reachable from the source inside the solution"
        for v in sorted(vs - seen)
    ]


def is_xy_tree(g: XYGraph) -> bool:
    """True when the graph is an out-tree: every non-source vertex has in-degree 1."""
    require_valid_xy(g)
    return all(d == 1 for v, d in g.in_degrees.items() if v != g.source)


def is_andor_tree(g: AndOrGraph) -> bool:
    """True when the and/or graph is an out-tree rooted at the source."""
    require_valid_andor(g)
    return all(d == 1 for v, d in g.in_degrees.items() if v != g.source)


def is_in_family_F(g: AndOrGraph) -> bool:
    """Membership in the restricted hard family.

    Requires unit weights everywhere, or-vertices of out-degree at most 2,
    and every vertex with in-degree above 1 to be a sink or have a sink
    among its out-neighbors.
    """
    require_valid_andor(g)
    if any(w != 1 for w in g.edges.values()):
        return False
    for v, lab in g.labels.items():
        if lab == OR and len(g.out_adj[v]) > 2:
            return False
    for v, d in g.in_degrees.items():
        if d <= 1:
            continue
        adj = g.out_adj[v]
        if adj and not any(not g.out_adj[head] for head, _w in adj):
            return False
    return True
