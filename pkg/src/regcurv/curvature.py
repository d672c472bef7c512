"""Closed-form edge curvature for equal-degree edges, idleness profiles and
graph classification.

For an edge ``x ~ y`` with ``d_x = d_y = d`` every curvature value is an
assignment problem on at most ``d`` vertices with costs in {1, 2, 3}:

* Lin-Lu-Yau ``kappa = (d + 1 - A) / d`` where ``A`` is the optimal
  assignment cost between the exclusive neighbourhoods ``R_x`` and ``R_y``;
* ``kappa_0 = (d - B) / d`` where ``B`` is the optimal assignment cost
  between ``S_1(x)`` and ``S_1(y)`` with the common neighbours removed;
* for ``alpha >= 1/(d+1)`` the idleness function is ``(1 - alpha) kappa``
  and below that it interpolates linearly towards ``kappa_0``.

Edges of unequal degree go through the transport solver instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import lap, transport
from .errors import (
    AlphaOutOfRange,
    Disconnected,
    NoEdges,
    NotAnEdge,
    NotRegular,
    UnequalDegrees,
)
from .graphcore import EdgeContext, Graph, edge_context, pair_costs


def _require_equal(ctx: EdgeContext) -> int:
    if ctx.deg_x != ctx.deg_y:
        raise UnequalDegrees(
            f"edge ({ctx.x}, {ctx.y}) has degrees {ctx.deg_x} != {ctx.deg_y}"
        )
    return ctx.deg_x


def _degenerate(ctx: EdgeContext) -> bool:
    # |triangle| = d - 1: R_x and R_y are empty
    return not ctx.rx


def kappa_lly_formula(ctx: EdgeContext) -> Fraction:
    """Lin-Lu-Yau curvature of an equal-degree edge."""
    d = _require_equal(ctx)
    if _degenerate(ctx):
        return Fraction(d + 1, d)
    cost = lap.solve_auction(ctx.cost).total_cost
    return Fraction(d + 1 - cost, d)


class ModifiedForm(NamedTuple):
    kappa: Fraction
    square_count: int
    pentagon_count: int


def kappa_lly_modified(ctx: EdgeContext) -> ModifiedForm:
    """Curvature through the counts of 4-cycle legs (cost 1) and 5-cycle
    legs (cost 2) of an optimal assignment.

    Among optimal assignments the one with the fewest 5-cycle legs is
    reported; for a fixed optimal total that also maximises the 4-cycle
    legs and the number of cost-3 legs.
    """
    d = _require_equal(ctx)
    t = len(ctx.triangle)
    n = len(ctx.rx)
    if n == 0:
        return ModifiedForm(Fraction(d + 1, d), 0, 0)
    # total cost dominates; the pentagon count (< n + 1) breaks ties
    tiebreak = [[c * (n + 1) + (c == 2) for c in row] for row in ctx.cost]
    perm = lap.solve_hungarian(tiebreak).perm
    legs = [ctx.cost[i][j] for i, j in enumerate(perm)]
    sq, pent = legs.count(1), legs.count(2)
    kappa = Fraction(-2 * d + 4 + 3 * t + 2 * sq + pent, d)
    return ModifiedForm(kappa, sq, pent)


def kappa_strongly_regular(ctx: EdgeContext, lam: int) -> Fraction:
    """Curvature on an srg(n, d, lam, mu) edge from the 4-cycle leg count
    of an optimal assignment."""
    d = _require_equal(ctx)
    sq = kappa_lly_modified(ctx).square_count
    return Fraction(lam + 2, d) - Fraction(len(ctx.rx) - sq, d)


def zero_idleness_costs(g: Graph, ctx: EdgeContext) -> list[list[int]]:
    """Cost matrix between ``S_1(x)`` and ``S_1(y)`` minus the common
    neighbours; row 0 is ``y`` and column 0 is ``x``."""
    return pair_costs(g, (ctx.y, *ctx.rx), (ctx.x, *ctx.ry))


def kappa_zero_formula(g: Graph, x: int, y: int, ctx: EdgeContext | None = None) -> Fraction:
    """Ollivier-Ricci curvature at idleness 0 of an equal-degree edge."""
    if ctx is None:
        ctx = edge_context(g, x, y)
    d = _require_equal(ctx)
    if _degenerate(ctx):
        return Fraction(d - 1, d)
    cost = lap.solve_auction(zero_idleness_costs(g, ctx)).total_cost
    return Fraction(d - cost, d)


def kappa_zero_via_relation(ctx: EdgeContext) -> Fraction:
    """``kappa_0`` from ``kappa`` and the largest leg over all optimal
    ``R_x -> R_y`` assignments."""
    d = _require_equal(ctx)
    kappa = kappa_lly_formula(ctx)
    if _degenerate(ctx):
        return kappa - Fraction(2, d)
    res = lap.min_assignment_cost_with_max_leg(ctx.cost)
    return kappa - Fraction(3 - res.max_leg, d)


def kappa_alpha_formula(
    ctx: EdgeContext,
    alpha: Fraction | int | str,
    *,
    kappa: Fraction | None = None,
    kappa0: Fraction | None = None,
    g: Graph | None = None,
) -> Fraction:
    """Idleness-``alpha`` curvature of an equal-degree edge.

    ``kappa0`` is only needed below the breakpoint; pass it (or the graph
    ``g`` so it can be computed) in that regime.
    """
    d = _require_equal(ctx)
    alpha = transport.as_rational(alpha)
    if not 0 <= alpha <= 1:
        raise AlphaOutOfRange(f"alpha={alpha} outside [0, 1]")
    if kappa is None:
        kappa = kappa_lly_formula(ctx)
    if alpha >= Fraction(1, d + 1):
        return (1 - alpha) * kappa
    if kappa0 is None:
        kappa0 = (
            kappa_zero_via_relation(ctx)
            if g is None
            else kappa_zero_formula(g, ctx.x, ctx.y, ctx)
        )
    return (1 - alpha) * kappa0 + alpha * d * (kappa - kappa0)


@dataclass(frozen=True)
class IdlenessProfile:
    """Piecewise-linear idleness function ``alpha -> kappa_alpha`` on [0, 1].

    Linear from ``(0, value_at_zero)`` to the breakpoint, then linear down
    to ``(1, 0)`` with slope ``slope_last = -kappa``.
    """

    breakpoint: Fraction
    value_at_zero: Fraction
    slope_first: Fraction
    slope_last: Fraction

    def __call__(self, alpha: Fraction | int | str) -> Fraction:
        alpha = transport.as_rational(alpha)
        if not 0 <= alpha <= 1:
            raise AlphaOutOfRange(f"alpha={alpha} outside [0, 1]")
        if alpha <= self.breakpoint:
            return self.value_at_zero + self.slope_first * alpha
        return -self.slope_last * (1 - alpha)

    @property
    def is_linear(self) -> bool:
        return self.slope_first == self.slope_last

    def segments(self) -> list[tuple[Fraction, Fraction, Fraction, Fraction]]:
        """``(a0, a1, value(a0), value(a1))`` per linear piece."""
        if self.is_linear:
            return [(Fraction(0), Fraction(1), self(0), Fraction(0))]
        b = self.breakpoint
        return [
            (Fraction(0), b, self(0), self(b)),
            (b, Fraction(1), self(b), Fraction(0)),
        ]


def idleness_profile(
    ctx: EdgeContext, *, kappa: Fraction | None = None, kappa0: Fraction | None = None
) -> IdlenessProfile:
    d = _require_equal(ctx)
    if kappa is None:
        kappa = kappa_lly_formula(ctx)
    if kappa0 is None:
        kappa0 = kappa_zero_via_relation(ctx)
    return IdlenessProfile(
        breakpoint=Fraction(1, d + 1),
        value_at_zero=kappa0,
        slope_first=-kappa0 + d * (kappa - kappa0),
        slope_last=-kappa,
    )


@dataclass(frozen=True)
class CurvatureReport:
    x: int
    y: int
    deg_x: int
    deg_y: int
    kappa: Fraction
    kappa0: Fraction
    gap_numerator: int | None
    breakpoint: Fraction
    triangle_count: int
    context: EdgeContext = field(repr=False, compare=False)

    @property
    def equal_degree(self) -> bool:
        return self.deg_x == self.deg_y

    @property
    def is_ricci_flat_edge(self) -> bool:
        return self.kappa == 0

    @property
    def is_zero_ricci_flat_edge(self) -> bool:
        return self.kappa0 == 0

    @property
    def is_bone_idle_edge(self) -> bool:
        return self.kappa == 0 and self.kappa0 == 0

    def kappa_alpha(self, alpha: Fraction | int | str) -> Fraction:
        if self.equal_degree:
            return kappa_alpha_formula(
                self.context, alpha, kappa=self.kappa, kappa0=self.kappa0
            )
        raise UnequalDegrees("use transport.kappa_alpha_direct for unequal degrees")

    def profile(self) -> IdlenessProfile:
        return idleness_profile(self.context, kappa=self.kappa, kappa0=self.kappa0)


def edge_report(g: Graph, x: int, y: int) -> CurvatureReport:
    """All curvature data of the edge ``x ~ y``.

    Equal degrees use the assignment formulas; otherwise both values come
    from exact optimal transport.
    """
    if not g.has_edge(x, y):
        raise NotAnEdge(f"({x}, {y}) is not an edge")
    ctx = edge_context(g, x, y)
    if ctx.equal_degree:
        d = ctx.deg_x
        kappa = kappa_lly_formula(ctx)
        kappa0 = kappa_zero_formula(g, x, y, ctx)
        gap = (kappa - kappa0) * d
        gap_num: int | None = int(gap)
        breakpoint = Fraction(1, d + 1)
    else:
        kappa = transport.kappa_lly_direct(g, x, y)
        kappa0 = transport.kappa_alpha_direct(g, x, y, 0)
        gap_num = None
        breakpoint = Fraction(1, max(ctx.deg_x, ctx.deg_y) + 1)
    return CurvatureReport(
        x, y, ctx.deg_x, ctx.deg_y, kappa, kappa0, gap_num, breakpoint,
        len(ctx.triangle), ctx,
    )


@dataclass(frozen=True)
class GraphClass:
    ric_min: Fraction
    ricci_flat: bool
    zero_ricci_flat: bool
    bone_idle: bool

    @property
    def ric_positive(self) -> bool:
        return self.ric_min > 0


def edge_reports(g: Graph) -> list[CurvatureReport]:
    return [edge_report(g, u, v) for u, v in g.edges()]


def classify_graph(g: Graph, reports: list[CurvatureReport] | None = None) -> GraphClass:
    """Minimum edge curvature plus the Ricci-flat, 0-Ricci-flat and bone
    idle flags of a connected graph."""
    if g.num_edges == 0:
        raise NoEdges("graph has no edges")
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    if reports is None:
        reports = edge_reports(g)
    return GraphClass(
        ric_min=min(r.kappa for r in reports),
        ricci_flat=all(r.is_ricci_flat_edge for r in reports),
        zero_ricci_flat=all(r.is_zero_ricci_flat_edge for r in reports),
        bone_idle=all(r.is_bone_idle_edge for r in reports),
    )


class PositivityAudit(NamedTuple):
    applies: bool
    conclusion_verified: bool | None
    ric_min: Fraction


def check_positivity_bound(g: Graph) -> PositivityAudit:
    """Audit "d-regular with d > 2n/3 - 2 implies Ric > 0" on ``g``.

    ``conclusion_verified`` is ``None`` when the hypothesis does not hold.
    """
    d = g.regular_degree()
    if d is None:
        raise NotRegular("graph is not regular")
    ric_min = classify_graph(g).ric_min
    applies = 3 * d > 2 * g.n - 6
    return PositivityAudit(applies, (ric_min > 0) if applies else None, ric_min)
