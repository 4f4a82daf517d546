"""Calabi-Yau admissibility, fiber inventories and Hodge numbers.

For a cover of the modular base with branch data (n, x, y, z, r) the pulled
back Kummer-fibred threefold has trivial canonical sheaf iff

    k + l + m - n - r = 2  and  (l = 2 with y1, y2 in {1, 2, 4}  or  l = 1 with y1 = 8),

is guaranteed smooth when the cover is unramified over 1/256 (m = n; the
criterion is sufficient only), and, when l = 2, has

    h11 = 12 + sum_{x odd} x^2 + sum_{x even} (x^2 + 1) + s + c1 + c2,
    h21 = k + (m_odd - n)/2 + p_g,

with c_j = 19, 8, 0 for y_j = 1, 2, 4, s the number of components of the
pulled-back fixed curve and p_g its geometric genus.  s and p_g depend on the
actual monodromy tuple, not just the branch data, so the analysis pipeline
consumes explicit tuples (searching for them when only branch data is given)
and emits one report per distinct (s, p_g) outcome, flagged when ambiguous.

The l = 1 (y = 8) case has no tabulated c_j and the Hodge formulas are not
extended to it; requesting them reports "unsupported" instead of a guess.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .hurwitz import (
    BranchData,
    HurwitzCover,
    SearchResult,
    branch_data_of,
    c2_components,
    pullback,
    search_tuples,
    validate,
)


class UnsupportedError(ValueError):
    """The requested quantity is outside the tabulated cases."""


#: New divisor classes contributed over infinity by ramification order.
C_BY_Y = {1: 19, 2: 8, 4: 0}

#: Component counts of the fiber over infinity by ramification order.
COMPONENTS_BY_Y = {1: 20, 2: 9, 4: 1, 8: 1}

#: Multiplicity profiles (multiplicity, how many components) by ramification order.
MULTIPLICITIES_BY_Y = {
    1: ((4, 1), (3, 2), (2, 7), (1, 10)),
    2: ((2, 1), (1, 8)),
    4: ((1, 1),),
    8: ((1, 1),),
}


def cy_condition(b: BranchData) -> bool:
    """Whether the pulled-back threefold has trivial canonical sheaf."""
    if b.k + b.l + b.m - b.n - b.r != 2:
        return False
    if b.l == 2:
        return all(y in (1, 2, 4) for y in b.y)
    if b.l == 1:
        return b.y[0] == 8
    return False


def smoothness(b: BranchData) -> bool:
    """The sufficient smoothness criterion: unramified over 1/256 (m = n).

    False does not imply singular; it only means smoothness is not granted by
    this criterion (the reference quotient model itself is smooth with m < n).
    The actual singularity census is in fiber_inventory.
    """
    return b.m == b.n


def components_over_zero(x: int) -> int:
    """x^2 + 2 components when x is even, x^2 + 1 when odd."""
    return x * x + 2 if x % 2 == 0 else x * x + 1


@dataclass(frozen=True)
class FiberInventory:
    """Component and singularity bookkeeping of the singular fibers.

    zero_fibers: (ramification order x, component count) per point over 0.
    infinity_fibers: (order y, component count or None, multiplicity profile
    or None) per point over infinity; None marks orders with no tabulated
    resolution.  quarter_points: (order z, number of isolated terminal
    points, each of type cA_{z-1}) per point over 1/256.
    """

    zero_fibers: tuple[tuple[int, int], ...]
    infinity_fibers: tuple[tuple[int, int | None, tuple | None], ...]
    quarter_points: tuple[tuple[int, int], ...]

    def terminal_singularity_count(self) -> int:
        return sum(count for _, count in self.quarter_points)


def fiber_inventory(b: BranchData) -> FiberInventory:
    """Counts for every singular fiber of the pulled-back threefold.

    Defined for any branch data (the Calabi-Yau condition is not required).
    Ramification orders over infinity outside {1, 2, 4, 8} carry no tabulated
    fiber and are reported with None counts.
    """
    zero = tuple((x, components_over_zero(x)) for x in b.x)
    infinity = tuple(
        (y, COMPONENTS_BY_Y.get(y), MULTIPLICITIES_BY_Y.get(y)) for y in b.y
    )
    quarter = tuple((z, 2 if z > 1 else 0) for z in b.z)
    return FiberInventory(
        zero_fibers=zero, infinity_fibers=infinity, quarter_points=quarter
    )


def h11(b: BranchData, s: int) -> int:
    """12 + sum over x odd of x^2 + sum over x even of (x^2+1) + s + c1 + c2.

    Requires two points over infinity with orders in {1, 2, 4}; s is the
    number of components of the pulled-back fixed curve.
    """
    if b.l != 2:
        raise UnsupportedError(
            f"h11 formula needs exactly two points over infinity, got l={b.l}"
        )
    try:
        c1, c2 = (C_BY_Y[y] for y in b.y)
    except KeyError:
        raise UnsupportedError(
            f"no divisor-class table for infinity profile {b.y}"
        ) from None
    vertical = sum(x * x if x % 2 else x * x + 1 for x in b.x)
    return 12 + vertical + s + c1 + c2


def h21(b: BranchData, p_g: int) -> int:
    """k + (m_odd - n)/2 + p_g, with the unramified-case identity enforced.

    p_g is the geometric genus of the pulled-back fixed curve (sum of the
    component genera of its normalization).
    """
    if b.l != 2:
        raise UnsupportedError(
            f"h21 formula needs exactly two points over infinity, got l={b.l}"
        )
    if (b.m_odd - b.n) % 2:
        # Unreachable for genuine partitions: n and m_odd always share parity.
        raise UnsupportedError("parity violation in (m_odd - n)/2")
    value = b.k + (b.m_odd - b.n) // 2 + p_g
    if b.m == b.n and cy_condition(b) and value != b.r + p_g:
        raise UnsupportedError(
            "internal inconsistency: unramified case must equal r + p_g"
        )
    return value


@dataclass(frozen=True)
class HodgeTriple:
    h11: int
    h21: int
    euler: int


@dataclass(frozen=True)
class ReferenceConstants:
    """Pinned invariants of the two reference threefolds.

    product_resolution: the rigid Calabi-Yau obtained as a small projective
    resolution of the fiber product of the two rational elliptic surfaces.
    kummer_model: the Calabi-Yau obtained from it by the fibrewise Kummer
    construction (the n = 8 regular-cover member of the family).
    """

    product_resolution: HodgeTriple
    kummer_model: HodgeTriple


def reference_constants() -> ReferenceConstants:
    return ReferenceConstants(
        product_resolution=HodgeTriple(h11=32, h21=0, euler=64),
        kummer_model=HodgeTriple(h11=40, h21=0, euler=80),
    )


# -- the full pipeline ----------------------------------------------------------


@dataclass(frozen=True)
class FixedCurveSummary:
    """Decomposition of the pulled-back fixed curve for one cover tuple."""

    s: int
    genera: tuple[int, ...]
    p_g: int
    component_degrees: tuple[int, ...]


def fixed_curve(g: HurwitzCover) -> FixedCurveSummary:
    """Pull the three fixed-curve components back along g and summarize."""
    genera = []
    degrees = []
    for component in c2_components():
        for report in pullback(component, g):
            genera.append(report.genus)
            degrees.append(report.degree)
    return FixedCurveSummary(
        s=len(genera),
        genera=tuple(sorted(genera)),
        p_g=sum(genera),
        component_degrees=tuple(sorted(degrees)),
    )


@dataclass(frozen=True)
class CYReport:
    """Full analysis of one cover (or one candidate tuple for branch data)."""

    branch: BranchData
    cy: bool
    guaranteed_smooth: bool
    inventory: FiberInventory
    s: int | None = None
    p_g: int | None = None
    genera: tuple[int, ...] | None = None
    c: tuple[int, int] | None = None
    h11: int | None = None
    h21: int | None = None
    euler: int | None = None
    unsupported: str | None = None
    ambiguous: bool = False
    search_truncated: bool = False

    def consistent(self) -> bool:
        if self.h11 is None or self.h21 is None or self.euler is None:
            return True
        return self.euler == 2 * (self.h11 - self.h21)


def _report_for_tuple(b: BranchData, summary: FixedCurveSummary) -> CYReport:
    base = CYReport(
        branch=b,
        cy=cy_condition(b),
        guaranteed_smooth=smoothness(b),
        inventory=fiber_inventory(b),
        s=summary.s,
        p_g=summary.p_g,
        genera=summary.genera,
    )
    if not base.cy:
        return _with(base, unsupported="canonical sheaf is not trivial for this data")
    try:
        c_pair = tuple(C_BY_Y[y] for y in b.y) if b.l == 2 else None
        h11_value = h11(b, summary.s)
        h21_value = h21(b, summary.p_g)
    except UnsupportedError as exc:
        return _with(base, unsupported=str(exc))
    return _with(
        base,
        c=c_pair,
        h11=h11_value,
        h21=h21_value,
        euler=2 * (h11_value - h21_value),
    )


def _with(report: CYReport, **updates) -> CYReport:
    return replace(report, **updates)


def analyze_cover(g: HurwitzCover) -> CYReport:
    """Analysis for an explicit monodromy tuple."""
    problems = validate(g)
    if problems:
        raise UnsupportedError("invalid cover: " + "; ".join(problems))
    return _report_for_tuple(branch_data_of(g), fixed_curve(g))


def analyze_branch_data(
    b: BranchData, limit: int = 16, max_candidates: int = 2_000_000
) -> list[CYReport]:
    """Analysis for bare branch data, one report per distinct (s, p_g) outcome.

    Different tuples with the same branch data can pull the fixed curve back
    differently; when they do, every outcome is reported and each report is
    flagged ambiguous.  When no tuple realizes the data, a single report with
    the inventory (and no curve data) is returned.
    """
    result: SearchResult = search_tuples(b, limit=limit, max_candidates=max_candidates)
    outcomes: dict[tuple[int, int], CYReport] = {}
    for cover in result.covers:
        summary = fixed_curve(cover)
        key = (summary.s, summary.p_g)
        if key not in outcomes:
            outcomes[key] = _report_for_tuple(b, summary)
    reports = list(outcomes.values())
    if not reports:
        note = (
            "no transitive monodromy tuple realizes this branch data"
            if not result.truncated
            else "tuple search truncated before finding a realization"
        )
        return [
            _with(
                CYReport(
                    branch=b,
                    cy=cy_condition(b),
                    guaranteed_smooth=smoothness(b),
                    inventory=fiber_inventory(b),
                ),
                unsupported=note,
                search_truncated=result.truncated,
            )
        ]
    ambiguous = len(reports) > 1
    return [
        _with(r, ambiguous=ambiguous, search_truncated=result.truncated)
        for r in reports
    ]
