"""Brute-force ground truth for flow counting.

Exhaustive depth-first enumeration with per-vertex pruning; exactness over
speed, with a search-size guard instead of silent long runs.  Counts are
plain Python ints, so they never overflow.
"""

from __future__ import annotations

from typing import Callable, TypeVar

from .graph import Orientation, SignedGraph, default_orientation
from .groups import FiniteAbelianGroup, GroupElement

DEFAULT_BUDGET = 10**8

# Above this order, the index tables (order^2 entries) stop paying off and
# the enumeration falls back to plain tuple arithmetic.
_TABLE_MAX_ORDER = 512

FlowAssignment = dict[int, GroupElement]

S = TypeVar("S")


class BudgetExceededError(Exception):
    """The estimated search size exceeds the leaf-visit budget."""

    def __init__(self, message: str, estimated_leaves: int | None = None):
        super().__init__(message)
        self.estimated_leaves = estimated_leaves


def _check_budget(leaves: int, budget: int) -> None:
    if leaves > budget:
        raise BudgetExceededError(
            f"estimated search size {leaves} leaf visits exceeds budget {budget}",
            estimated_leaves=leaves,
        )


def _completion_schedule(g: SignedGraph) -> list[tuple[int, ...]]:
    """For each edge id, the vertices whose incident edges are then all assigned."""
    last = [-1] * g.num_vertices
    for i, e in enumerate(g.edges):
        last[e.u] = max(last[e.u], i)
        last[e.v] = max(last[e.v], i)
    checks: list[list[int]] = [[] for _ in range(g.num_edges)]
    for v, i in enumerate(last):
        if i >= 0:
            checks[i].append(v)
    return [tuple(c) for c in checks]


def verify_flow(
    g: SignedGraph,
    tau: Orientation,
    gamma: FiniteAbelianGroup,
    phi: FlowAssignment,
) -> bool:
    """Whether phi satisfies Kirchhoff's law at every vertex.

    At each vertex the tau-weighted values of all incident half-edges must
    sum to zero; a loop contributes both of its half-edges.  The nowhere-zero
    condition is not checked here.
    """
    if set(phi) != set(range(g.num_edges)):
        raise ValueError("flow assignment must cover every edge id exactly")
    if len(tau.taus) != g.num_edges:
        raise ValueError("orientation does not match the graph's edge count")
    sums = [gamma.zero()] * g.num_vertices
    for i, e in enumerate(g.edges):
        value = phi[i]
        t0, t1 = tau.taus[i]
        sums[e.u] = gamma.add(sums[e.u], value if t0 == 1 else gamma.negate(value))
        sums[e.v] = gamma.add(sums[e.v], value if t1 == 1 else gamma.negate(value))
    return all(not any(s) for s in sums)


def _count_assignments(
    g: SignedGraph,
    tau: Orientation,
    values: list[S],
    add: Callable[[S, S], S],
    neg: Callable[[S], S],
    zero: S,
) -> int:
    """Count total assignments of ``values`` to edges satisfying Kirchhoff.

    Generic driver shared by the tuple-element and integer flows; pruning
    fires as soon as every edge at some vertex has a value.
    """
    m = g.num_edges
    if m == 0:
        return 1
    if not values:
        return 0
    checks = _completion_schedule(g)
    plan = [(e.u, tau.taus[i][0] == -1, e.v, tau.taus[i][1] == -1) for i, e in enumerate(g.edges)]
    sums = [zero] * g.num_vertices

    def rec(i: int) -> int:
        if i == m:
            return 1
        u, f0, v, f1 = plan[i]
        chk = checks[i]
        su, sv = sums[u], sums[v]
        total = 0
        for x in values:
            sums[u] = su
            sums[v] = sv
            sums[u] = add(sums[u], neg(x) if f0 else x)
            sums[v] = add(sums[v], neg(x) if f1 else x)
            ok = True
            for w in chk:
                if sums[w] != zero:
                    ok = False
                    break
            if ok:
                total += rec(i + 1)
        sums[u] = su
        sums[v] = sv
        return total

    return rec(0)


def _count_group_flows_indexed(g: SignedGraph, tau: Orientation, gamma: FiniteAbelianGroup) -> int:
    """Table-driven variant of the same enumeration: elements become indices
    into precomputed addition/negation tables, which keeps the inner loop to
    list lookups."""
    order = gamma.order
    elems = list(gamma.elements())
    index = {a: i for i, a in enumerate(elems)}
    add_t = [[index[gamma.add(a, b)] for b in elems] for a in elems]
    neg_t = [index[gamma.negate(a)] for a in elems]
    ident = list(range(order))

    m = g.num_edges
    checks = _completion_schedule(g)
    ends = [(e.u, e.v) for e in g.edges]
    app0 = [neg_t if tau.taus[i][0] == -1 else ident for i in range(m)]
    app1 = [neg_t if tau.taus[i][1] == -1 else ident for i in range(m)]
    values = range(1, order)
    sums = [0] * g.num_vertices

    def rec(i: int) -> int:
        if i == m:
            return 1
        u, v = ends[i]
        a0, a1 = app0[i], app1[i]
        chk = checks[i]
        su, sv = sums[u], sums[v]
        total = 0
        if u == v:
            for x in values:
                sums[u] = add_t[add_t[su][a0[x]]][a1[x]]
                ok = True
                for w in chk:
                    if sums[w]:
                        ok = False
                        break
                if ok:
                    total += rec(i + 1)
            sums[u] = su
        else:
            row_u = add_t[su]
            row_v = add_t[sv]
            for x in values:
                sums[u] = row_u[a0[x]]
                sums[v] = row_v[a1[x]]
                ok = True
                for w in chk:
                    if sums[w]:
                        ok = False
                        break
                if ok:
                    total += rec(i + 1)
            sums[u] = su
            sums[v] = sv
        return total

    return rec(0)


def count_group_flows(
    g: SignedGraph,
    gamma: FiniteAbelianGroup,
    *,
    tau: Orientation | None = None,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Exact number of nowhere-zero flows with values in ``gamma``.

    Enumerates all (order-1)^m nowhere-zero assignments in edge-id order
    with per-vertex pruning.  The count does not depend on the orientation;
    ``tau`` exists so tests can check exactly that.
    """
    if tau is None:
        tau = default_orientation(g)
    if g.num_edges == 0:
        return 1
    _check_budget((gamma.order - 1) ** g.num_edges, budget)
    if gamma.order <= _TABLE_MAX_ORDER:
        return _count_group_flows_indexed(g, tau, gamma)
    return _count_assignments(
        g, tau, list(gamma.nonzero_elements()), gamma.add, gamma.negate, gamma.zero()
    )


def count_integer_nflows(g: SignedGraph, n: int, *, budget: int = DEFAULT_BUDGET) -> int:
    """Exact number of Z-valued flows using only values k with 0 < |k| < n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if g.num_edges == 0:
        return 1
    _check_budget((2 * n - 2) ** g.num_edges, budget)
    values = [k for a in range(1, n) for k in (a, -a)]
    tau = default_orientation(g)
    return _count_assignments(g, tau, values, int.__add__, int.__neg__, 0)


def count_double_sum_solutions(
    t: int, gamma: FiniteAbelianGroup, *, budget: int = DEFAULT_BUDGET
) -> int:
    """Solutions of 2*x_1 + ... + 2*x_t = 0 with every x_i nonzero, by
    enumeration; t = 0 has the single empty solution."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t == 0:
        return 1
    _check_budget((gamma.order - 1) ** t, budget)
    doubles = [gamma.double(x) for x in gamma.nonzero_elements()]
    zero = gamma.zero()

    def rec(i: int, acc: GroupElement) -> int:
        if i == t:
            return 1 if acc == zero else 0
        return sum(rec(i + 1, gamma.add(acc, d)) for d in doubles)

    return rec(0, zero)
