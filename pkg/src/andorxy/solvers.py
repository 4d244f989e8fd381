"""Solvers and bounds for minimum-weight solution subgraphs.

Tree inputs admit a linear-time recurrence.  General DAGs get a sandwich of
bounds (a scheduling-style lower bound and a sharing-blind upper bound) and
an exact branch-and-bound search over choice vertices.  Shared substructure
is why the exact search cannot memoize: the cost of a subgraph depends on
which edges the rest of the solution already pays for.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from time import monotonic

import numpy as np

from .graphs import (
    MAX_SUM,
    MAX_WEIGHT,
    AND,
    OR,
    AndOrGraph,
    InvalidGraphError,
    SolutionSubgraph,
    VertexId,
    XYGraph,
    validate_andor,
    validate_xy,
)


class BudgetExceededError(RuntimeError):
    """The exact solver ran out of its wall-clock budget."""


@dataclass(frozen=True)
class SolveResult:
    """Optimum (or bound) value plus a feasible witness achieving it."""

    optimum: int
    witness: SolutionSubgraph
    nodes: int = 0
    prunes: int = 0

    @property
    def stats(self) -> tuple[int, int]:
        return (self.nodes, self.prunes)


@dataclass(frozen=True)
class ScheduleResult:
    """Earliest-completion times per vertex; times[source] bounds the optimum from below."""

    times: dict[VertexId, int]


def _check_sum(s: int) -> int:
    if s > MAX_SUM:
        raise OverflowError(f"weight sum exceeds {MAX_SUM}")
    return s


class _Indexed:
    """Integer-indexed view of a graph, topologically ordered from the source."""

    __slots__ = ("names", "pos", "adj", "src", "order", "indeg", "n")

    def __init__(self, names, pos, adj, src, order, indeg):
        self.names = names
        self.pos = pos
        self.adj = adj
        self.src = src
        self.order = order
        self.indeg = indeg
        self.n = len(names)


def _index(g: AndOrGraph | XYGraph) -> _Indexed:
    """Build the indexed view; reject invalid graphs with a full report.

    Adjacency lists are sorted by head index, which equals lexicographic
    order of head ids, so "first minimum" scans honor the tie-break rule.
    """
    labels, edges, source = g.labels, g.edges, g.source
    names = sorted(labels)
    pos = {v: i for i, v in enumerate(names)}
    n = len(names)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    indeg = [0] * n
    ok = source in pos
    if ok:
        try:
            for (t, h), w in edges.items():
                adj[pos[t]].append((pos[h], w))
                indeg[pos[h]] += 1
        except KeyError:
            ok = False
    if ok and edges:
        lo = min(edges.values())
        hi = max(edges.values())
        if lo < (0 if g.zero_weights_allowed else 1) or hi > MAX_WEIGHT:
            ok = False
    if ok:
        for lst in adj:
            lst.sort()
        src = pos[source]
        if indeg[src] != 0:
            ok = False
    if ok:
        order = [src]
        deg = indeg[:]
        i = 0
        while i < len(order):
            for h, _w in adj[order[i]]:
                deg[h] -= 1
                if deg[h] == 0:
                    order.append(h)
            i += 1
        if len(order) != n:
            ok = False
    if not ok:
        rep = validate_xy(g) if isinstance(g, XYGraph) else validate_andor(g)
        raise InvalidGraphError("; ".join(rep.violations) or "invalid graph")
    return _Indexed(names, pos, adj, src, order, indeg)


def _require_tree(idx: _Indexed) -> None:
    for v in range(idx.n):
        if v != idx.src and idx.indeg[v] != 1:
            raise InvalidGraphError(
                f"not an out-tree: vertex {idx.names[v]} has in-degree {idx.indeg[v]}"
            )


def _xy_demands(g: XYGraph, idx: _Indexed) -> list[int]:
    """Per-vertex x values, cross-checked against actual out-degrees."""
    xs = [0] * idx.n
    for v in range(idx.n):
        x, y = g.labels[idx.names[v]]
        if y != len(idx.adj[v]) or not 0 <= x <= y:
            rep = validate_xy(g)
            raise InvalidGraphError("; ".join(rep.violations) or "bad x-y labels")
        xs[v] = x
    return xs


def _andor_demands(g: AndOrGraph, idx: _Indexed) -> list[int]:
    """And/or labels as demands: sinks 0, and-vertices full degree, or-vertices 1."""
    labels = g.labels
    if not set(labels.values()) <= {AND, OR}:
        rep = validate_andor(g)
        raise InvalidGraphError("; ".join(rep.violations) or "bad vertex labels")
    xs = [0] * idx.n
    names = idx.names
    adj = idx.adj
    for v in range(idx.n):
        d = len(adj[v])
        if d:
            xs[v] = d if labels[names[v]] == AND else 1
    return xs


def _witness(idx: _Indexed, pairs) -> SolutionSubgraph:
    names = idx.names
    return SolutionSubgraph(frozenset((names[t], names[h]) for t, h in pairs))


# trees at or above this size take the vectorized path; kept as a module
# global so tests can force either implementation and compare them
_FAST_MIN_N = 4096


def _ragged(starts, lens):
    """Concatenated integer ranges [starts[i], starts[i]+lens[i]) as one array."""
    total = int(lens.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64)
    block_out = np.cumsum(lens) - lens
    block = np.repeat(np.arange(len(starts), dtype=np.int64), lens)
    return np.arange(total, dtype=np.int64) - block_out[block] + starts[block]


def _solve_tree_fast(g: AndOrGraph | XYGraph, xy: bool) -> SolveResult | None:
    """Array-based tree solve: CSR layout, one vectorized pass per depth layer.

    Selection semantics match the scalar path exactly: per vertex, edges
    ranked by (weight + child cost, head id), the x cheapest chosen.
    Returns None for degenerate shapes (depth comparable to n) where the
    per-layer overhead would lose to the scalar loop.
    """
    labels, edges, source = g.labels, g.edges, g.source
    n = len(labels)
    m = len(edges)
    names = sorted(labels)
    pos = {v: i for i, v in enumerate(names)}

    def bail():
        rep = (validate_xy if xy else validate_andor)(g)
        if not rep.ok:
            raise InvalidGraphError("; ".join(rep.violations))
        # structurally valid, so the remaining complaint must be tree shape
        indeg = {v: 0 for v in labels}
        for (_t, h) in edges:
            indeg[h] += 1
        for v in names:
            if v != source and indeg[v] != 1:
                raise InvalidGraphError(
                    f"not an out-tree: vertex {v} has in-degree {indeg[v]}"
                )
        raise InvalidGraphError("invalid graph")

    if source not in pos or m != n - 1:
        bail()
    keys = list(edges)
    tails, heads = zip(*keys) if m else ((), ())
    try:
        ti = np.fromiter(map(pos.__getitem__, tails), np.int64, count=m)
        hi = np.fromiter(map(pos.__getitem__, heads), np.int64, count=m)
        wv = np.asarray(list(edges.values()), dtype=np.int64)
    except (KeyError, OverflowError):
        bail()
    if m:
        wmin = 0 if g.zero_weights_allowed else 1
        if int(wv.min()) < wmin or int(wv.max()) > MAX_WEIGHT:
            bail()
        if bool((ti == hi).any()):
            bail()
    _check_sum(sum(edges.values()))  # all int64 arithmetic below stays in range

    eorder = np.lexsort((hi, ti))
    ti = ti[eorder]
    hi = hi[eorder]
    wv = wv[eorder]
    if m > 1 and bool(((ti[1:] == ti[:-1]) & (hi[1:] == hi[:-1])).any()):
        bail()  # parallel edge
    counts = np.bincount(ti, minlength=n)
    offs = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=offs[1:])
    src = pos[source]
    indeg = np.bincount(hi, minlength=n)
    if int(indeg[src]) != 0 or int((indeg == 1).sum()) != n - 1:
        bail()

    if xy:
        try:
            xs_np = np.fromiter((labels[v][0] for v in names), np.int64, count=n)
            ys_np = np.fromiter((labels[v][1] for v in names), np.int64, count=n)
        except (TypeError, IndexError, OverflowError):
            bail()
        if not np.array_equal(ys_np, counts) or bool((xs_np < 0).any()) or bool(
            (xs_np > ys_np).any()
        ):
            bail()
    else:
        if not set(labels.values()) <= {AND, OR}:
            bail()
        is_and = np.fromiter((labels[v] == AND for v in names), bool, count=n)
        xs_np = np.where(is_and, counts, np.minimum(counts, np.int64(1)))

    # breadth-first order; in a tree it is also a topological order, and the
    # generation boundaries give the depth layers for the vectorized passes
    offs_l = offs.tolist()
    heads_l = hi.tolist()
    order = [src]
    bounds = [0]
    start = 0
    while start < len(order):
        end = len(order)
        bounds.append(end)
        for v in order[start:end]:
            order.extend(heads_l[offs_l[v] : offs_l[v + 1]])
        start = end
    if len(order) != n:
        bail()  # some vertex is unreachable
    layer_count = len(bounds) - 1
    if layer_count > max(64, n // 64):
        return None

    order_np = np.asarray(order, dtype=np.int64)
    c = np.zeros(n, dtype=np.int64)
    for li in range(layer_count - 1, -1, -1):
        verts = order_np[bounds[li] : bounds[li + 1]]
        verts = verts[xs_np[verts] > 0]
        if verts.size == 0:
            continue
        vlens = counts[verts]
        eidx = _ragged(offs[verts], vlens)
        vals = wv[eidx] + c[hi[eidx]]
        seg = np.repeat(np.arange(verts.size, dtype=np.int64), vlens)
        so = np.lexsort((hi[eidx], vals, seg))
        cums = np.cumsum(vals[so])
        segstart = np.cumsum(vlens) - vlens
        last = segstart + xs_np[verts] - 1
        base = np.where(segstart > 0, cums[segstart - 1], 0)
        c[verts] = cums[last] - base

    chosen = []
    frontier = np.asarray([src], dtype=np.int64)
    while frontier.size:
        verts = frontier[xs_np[frontier] > 0]
        if verts.size == 0:
            break
        vlens = counts[verts]
        eidx = _ragged(offs[verts], vlens)
        vals = wv[eidx] + c[hi[eidx]]
        seg = np.repeat(np.arange(verts.size, dtype=np.int64), vlens)
        so = np.lexsort((hi[eidx], vals, seg))
        segstart = np.cumsum(vlens) - vlens
        selpos = _ragged(segstart, xs_np[verts])
        eids = eidx[so[selpos]]
        chosen.append(eids)
        frontier = hi[eids]
    all_e = np.concatenate(chosen) if chosen else np.empty(0, dtype=np.int64)
    gname = names.__getitem__
    pairs = zip(map(gname, ti[all_e].tolist()), map(gname, hi[all_e].tolist()))
    return SolveResult(int(c[src]), SolutionSubgraph(frozenset(pairs)), nodes=n)


def solve_andor_tree(g: AndOrGraph) -> SolveResult:
    """Minimum solution of an and/or out-tree by the bottom-up recurrence.

    Sinks cost 0; an and-vertex pays every child edge plus child cost; an
    or-vertex takes the cheapest child, ties broken toward the smaller head
    id.  Linear in the size of the tree.
    """
    if len(g.labels) >= _FAST_MIN_N:
        res = _solve_tree_fast(g, xy=False)
        if res is not None:
            return res
    idx = _index(g)
    _require_tree(idx)
    labels, names, adj = g.labels, idx.names, idx.adj
    n = idx.n
    c = [0] * n
    pick = [0] * n
    for v in reversed(idx.order):
        lst = adj[v]
        if not lst:
            continue
        if labels[names[v]] == AND:
            s = 0
            for h, w in lst:
                s += w + c[h]
            c[v] = _check_sum(s)
        else:
            best = lst[0][1] + c[lst[0][0]]
            bj = 0
            for j in range(1, len(lst)):
                h, w = lst[j]
                t = w + c[h]
                if t < best:
                    best = t
                    bj = j
            c[v] = best
            pick[v] = bj

    pairs = []
    stack = [idx.src]
    while stack:
        v = stack.pop()
        lst = adj[v]
        if not lst:
            continue
        if labels[names[v]] == AND:
            for h, _w in lst:
                pairs.append((v, h))
                stack.append(h)
        else:
            h = lst[pick[v]][0]
            pairs.append((v, h))
            stack.append(h)
    return SolveResult(c[idx.src], _witness(idx, pairs), nodes=n)


def solve_xy_tree(g: XYGraph) -> SolveResult:
    """Minimum solution of an x-y out-tree.

    Each vertex takes its x cheapest child options (edge weight plus child
    cost); ties go to smaller head ids.  Selection uses a bounded heap per
    vertex, keeping the whole solve near-linear in the tree size.
    """
    if len(g.labels) >= _FAST_MIN_N:
        res = _solve_tree_fast(g, xy=True)
        if res is not None:
            return res
    idx = _index(g)
    _require_tree(idx)
    xs = _xy_demands(g, idx)
    adj = idx.adj
    n = idx.n
    c = [0] * n
    pick: list[tuple[int, ...] | None] = [None] * n  # None means all out-edges
    nsmallest = heapq.nsmallest
    for v in reversed(idx.order):
        x = xs[v]
        if x == 0:
            pick[v] = ()
            continue
        lst = adj[v]
        if x == len(lst):
            s = 0
            for h, w in lst:
                s += w + c[h]
            c[v] = _check_sum(s)
        elif x == 1:
            best = lst[0][1] + c[lst[0][0]]
            bj = 0
            for j in range(1, len(lst)):
                h, w = lst[j]
                t = w + c[h]
                if t < best:
                    best = t
                    bj = j
            c[v] = best
            pick[v] = (bj,)
        else:
            sel = nsmallest(x, [(w + c[h], j) for j, (h, w) in enumerate(lst)])
            c[v] = _check_sum(sum(t for t, _ in sel))
            pick[v] = tuple(j for _, j in sel)

    pairs = []
    stack = [idx.src]
    while stack:
        v = stack.pop()
        ch = pick[v]
        lst = adj[v]
        if ch is None:
            for h, _w in lst:
                pairs.append((v, h))
                stack.append(h)
        else:
            for j in ch:
                h = lst[j][0]
                pairs.append((v, h))
                stack.append(h)
    return SolveResult(c[idx.src], _witness(idx, pairs), nodes=n)


def schedule_lower_bound(g: AndOrGraph) -> ScheduleResult:
    """Earliest-completion times: 0 at sinks, max over out-edges at and-vertices,
    min at or-vertices, working backward through a topological order.

    times[source] never exceeds the optimum solution weight, because any
    feasible solution pays for at least one full chain the recurrence counts.
    """
    idx = _index(g)
    labels, names, adj = g.labels, idx.names, idx.adj
    t = [0] * idx.n
    for v in reversed(idx.order):
        lst = adj[v]
        if not lst:
            continue
        if labels[names[v]] == AND:
            t[v] = _check_sum(max(w + t[h] for h, w in lst))
        else:
            t[v] = min(w + t[h] for h, w in lst)
    return ScheduleResult({names[i]: t[i] for i in range(idx.n)})


def dp_upper_bound(g: AndOrGraph) -> SolveResult:
    """Feasible solution from the tree recurrence applied to a DAG.

    The recurrence ignores edge sharing, so its value can overshoot; the
    returned optimum is the true weight of the materialized witness (shared
    edges counted once), which upper-bounds the exact optimum.
    """
    idx = _index(g)
    labels, names, adj = g.labels, idx.names, idx.adj
    n = idx.n
    c = [0] * n
    pick = [0] * n
    for v in reversed(idx.order):
        lst = adj[v]
        if not lst:
            continue
        if labels[names[v]] == AND:
            s = 0
            for h, w in lst:
                s += w + c[h]
            c[v] = _check_sum(s)
        else:
            best = lst[0][1] + c[lst[0][0]]
            bj = 0
            for j in range(1, len(lst)):
                h, w = lst[j]
                t = w + c[h]
                if t < best:
                    best = t
                    bj = j
            c[v] = best
            pick[v] = bj

    seen = bytearray(n)
    seen[idx.src] = 1
    stack = [idx.src]
    pairs = []
    weight = 0
    while stack:
        v = stack.pop()
        lst = adj[v]
        if not lst:
            continue
        take = lst if labels[names[v]] == AND else (lst[pick[v]],)
        for h, w in take:
            pairs.append((v, h))
            weight += w
            if not seen[h]:
                seen[h] = 1
                stack.append(h)
    return SolveResult(_check_sum(weight), _witness(idx, pairs), nodes=n)


def _xy_schedule(idx: _Indexed, xs: list[int]) -> list[int]:
    """Generalized completion-time lower bound: the x-th smallest option.

    Any solution through v takes some x out-edges, so it pays at least the
    x-th smallest of (weight + bound below head); sharing cannot undercut a
    single chain.
    """
    t = [0] * idx.n
    for v in reversed(idx.order):
        x = xs[v]
        if x:
            vals = sorted(w + t[h] for h, w in idx.adj[v])
            t[v] = vals[x - 1]
    return t


def _greedy_incumbent(idx: _Indexed, xs, offs, ehead, ew):
    """Sharing-blind recurrence plus materialization: a feasible starting point."""
    adj = idx.adj
    n = idx.n
    c = [0] * n
    pick: list[tuple[int, ...] | None] = [None] * n
    for v in reversed(idx.order):
        x = xs[v]
        if x == 0:
            pick[v] = ()
            continue
        lst = adj[v]
        if x == len(lst):
            c[v] = _check_sum(sum(w + c[h] for h, w in lst))
        else:
            sel = heapq.nsmallest(x, [(w + c[h], j) for j, (h, w) in enumerate(lst)])
            c[v] = _check_sum(sum(t for t, _ in sel))
            pick[v] = tuple(j for _, j in sel)

    seen = bytearray(n)
    seen[idx.src] = 1
    stack = [idx.src]
    eids = []
    weight = 0
    while stack:
        v = stack.pop()
        ch = pick[v]
        base = offs[v]
        js = range(len(idx.adj[v])) if ch is None else ch
        for j in js:
            eid = base + j
            eids.append(eid)
            weight += ew[eid]
            h = ehead[eid]
            if not seen[h]:
                seen[h] = 1
                stack.append(h)
    return weight, eids


_OP_EDGE, _OP_VERT, _OP_PEND, _OP_UNPEND = 0, 1, 2, 3


def _exact_min(idx: _Indexed, xs: list[int], budget_s: float | None) -> SolveResult:
    """Branch-and-bound over choice-vertex decisions.

    A partial state commits edges forced by fully-determined vertices and
    keeps undecided choice vertices pending.  The bound adds, per pending
    vertex, the sum of its x cheapest out-edge weights; those edges are
    pairwise distinct and not yet committed, so the bound never overshoots
    a completion.  Correctness does not depend on how sharp the bound is.
    No memoization: shared substructure makes subproblem costs non-additive.
    """
    adj = idx.adj
    n = idx.n
    offs = [0] * (n + 1)
    for v in range(n):
        offs[v + 1] = offs[v] + len(adj[v])
    ecount = offs[n]
    ehead = [0] * ecount
    ew = [0] * ecount
    etail = [0] * ecount
    for v in range(n):
        base = offs[v]
        for j, (h, w) in enumerate(adj[v]):
            ehead[base + j] = h
            ew[base + j] = w
            etail[base + j] = v

    tsch = _xy_schedule(idx, xs)
    minw = [0] * n
    for v in range(n):
        x = xs[v]
        if x:
            minw[v] = sum(sorted(w for _h, w in adj[v])[:x])

    ub_w, ub_eids = _greedy_incumbent(idx, xs, offs, ehead, ew)
    if tsch[idx.src] == ub_w:
        return SolveResult(
            ub_w, _witness(idx, [(etail[i], ehead[i]) for i in ub_eids]), nodes=1
        )

    deadline = None
    if budget_s is not None:
        deadline = monotonic() + budget_s
        if budget_s <= 0 or monotonic() > deadline:
            raise BudgetExceededError("exact solve exceeded its time budget")

    included = bytearray(n)
    in_sol = bytearray(ecount)
    pending: set[int] = set()
    trail: list[tuple[int, int]] = []
    state = [0, 0]  # committed weight, sum of pending floors
    best = [ub_w, list(ub_eids)]
    counters = [0, 0]  # nodes, prunes

    def include(v0: int) -> None:
        stack = [v0]
        while stack:
            v = stack.pop()
            if included[v]:
                continue
            included[v] = 1
            trail.append((_OP_VERT, v))
            x = xs[v]
            if x == 0:
                continue
            base = offs[v]
            top = offs[v + 1]
            if x == top - base:
                for eid in range(base, top):
                    if not in_sol[eid]:
                        in_sol[eid] = 1
                        state[0] += ew[eid]
                        trail.append((_OP_EDGE, eid))
                        stack.append(ehead[eid])
            else:
                pending.add(v)
                state[1] += minw[v]
                trail.append((_OP_PEND, v))

    def undo(mark: int) -> None:
        while len(trail) > mark:
            op, a = trail.pop()
            if op == _OP_EDGE:
                in_sol[a] = 0
                state[0] -= ew[a]
            elif op == _OP_VERT:
                included[a] = 0
            elif op == _OP_PEND:
                pending.discard(a)
                state[1] -= minw[a]
            else:
                pending.add(a)
                state[1] += minw[a]

    def estimate(u: int) -> int:
        vals = sorted(
            w + (0 if included[h] else tsch[h]) for h, w in adj[u]
        )
        return sum(vals[: xs[u]])

    def search() -> None:
        counters[0] += 1
        if deadline is not None and counters[0] & 63 == 0 and monotonic() > deadline:
            raise BudgetExceededError("exact solve exceeded its time budget")
        if state[0] + state[1] >= best[0]:
            counters[1] += 1
            return
        if not pending:
            best[0] = state[0]
            best[1] = [i for i in range(ecount) if in_sol[i]]
            return
        # fail-first: decide the pending vertex with the costliest cheap completion
        v = -1
        vkey = None
        for u in pending:
            key = (estimate(u), -u)
            if vkey is None or key > vkey:
                vkey = key
                v = u
        pending.discard(v)
        state[1] -= minw[v]
        trail.append((_OP_UNPEND, v))

        lst = adj[v]
        base = offs[v]
        x = xs[v]
        opt_vals = [w + (0 if included[h] else tsch[h]) for h, w in lst]
        if x == 1:
            opts: list[tuple[int, ...]] = [(j,) for j in sorted(range(len(lst)), key=lambda j: (opt_vals[j], j))]
        else:
            opts = sorted(combinations(range(len(lst)), x), key=lambda c: (sum(opt_vals[j] for j in c), c))
        for combo in opts:
            mark = len(trail)
            for j in combo:
                eid = base + j
                if not in_sol[eid]:
                    in_sol[eid] = 1
                    state[0] += ew[eid]
                    trail.append((_OP_EDGE, eid))
                    include(ehead[eid])
            search()
            undo(mark)

    include(idx.src)
    search()
    return SolveResult(
        best[0],
        _witness(idx, [(etail[i], ehead[i]) for i in best[1]]),
        nodes=counters[0],
        prunes=counters[1],
    )


def solve_exact_andor(g: AndOrGraph, budget_s: float | None = None) -> SolveResult:
    """Exact minimum over all feasible solution subgraphs of an and/or DAG.

    Branches over the out-edge choices of or-vertices that are reachable
    under the partial assignment, pruning with a weight-safe frontier bound.
    ``budget_s`` caps wall-clock time; exceeding it raises, never returns a
    wrong value.
    """
    idx = _index(g)
    return _exact_min(idx, _andor_demands(g, idx), budget_s)


def solve_exact_xy(g: XYGraph, budget_s: float | None = None) -> SolveResult:
    """Exact minimum for an x-y DAG; branches over x-subsets at choice vertices."""
    idx = _index(g)
    return _exact_min(idx, _xy_demands(g, idx), budget_s)


def decide_min_andor(g: AndOrGraph, k: int) -> bool:
    """True when some feasible solution has weight at most k."""
    return solve_exact_andor(g).optimum <= k


def _bit_positions(m: int) -> list[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def decide_exact_weight_xy_tree(g: XYGraph, k: int):
    """Does an x-y tree have a solution of weight exactly k?

    Bottom-up subset-sum over achievable solution weights, every set capped
    at k (heavier partial solutions can never come back down, weights being
    positive).  Returns (exists, witness); the witness is None on a negative
    answer.  Rejects non-trees, zero weights, and negative k.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    idx = _index(g)
    _require_tree(idx)
    xs = _xy_demands(g, idx)
    if any(w == 0 for w in g.edges.values()):
        raise InvalidGraphError("exact-weight decision requires positive edge weights")

    adj = idx.adj
    n = idx.n
    capmask = (1 << (k + 1)) - 1
    reach = [0] * n
    for v in reversed(idx.order):
        x = xs[v]
        if x == 0:
            reach[v] = 1  # only the empty choice, weight 0
            continue
        cnt = [0] * (x + 1)
        cnt[0] = 1
        for h, w in adj[v]:
            m = (reach[h] << w) & capmask
            if not m:
                continue  # this child admits no affordable subtree
            bits = _bit_positions(m)
            for j in range(x - 1, -1, -1):
                cj = cnt[j]
                if cj:
                    acc = cnt[j + 1]
                    for b in bits:
                        acc |= cj << b
                    cnt[j + 1] = acc & capmask
        reach[v] = cnt[x]

    if not (reach[idx.src] >> k) & 1:
        return False, None

    # reconstruct one witness deterministically: walk children last-to-first,
    # keep a child out of the solution whenever the prefix table allows it,
    # otherwise give it its smallest affordable contribution
    pairs: list[tuple[int, int]] = []
    stack = [(idx.src, k)]
    while stack:
        v, target = stack.pop()
        x = xs[v]
        if x == 0:
            continue
        lst = adj[v]
        y = len(lst)
        masks = [(reach[h] << w) & capmask for h, w in lst]
        pref = [[0] * (x + 1) for _ in range(y + 1)]
        pref[0][0] = 1
        for i in range(1, y + 1):
            mi = masks[i - 1]
            bits = _bit_positions(mi) if mi else []
            row = pref[i]
            prev = pref[i - 1]
            for j in range(x + 1):
                acc = prev[j]
                if j and bits:
                    pj = prev[j - 1]
                    if pj:
                        for b in bits:
                            acc |= pj << b
                row[j] = acc & capmask
        j = x
        t = target
        for i in range(y, 0, -1):
            if (pref[i - 1][j] >> t) & 1:
                continue  # child i-1 stays out
            h, w = lst[i - 1]
            chosen_b = None
            for b in _bit_positions(masks[i - 1]):
                if b <= t and j > 0 and (pref[i - 1][j - 1] >> (t - b)) & 1:
                    chosen_b = b
                    break
            assert chosen_b is not None, "reconstruction lost the target"
            pairs.append((v, h))
            stack.append((h, chosen_b - w))
            j -= 1
            t -= chosen_b
        assert j == 0 and t == 0, "reconstruction ended off target"

    return True, _witness(idx, pairs)
