"""Branched covers of the projective line as permutation monodromy data.

A cover of degree d over the three-marked base (lambda = 1/256, infinity, 0,
plus anonymous extra branch points) is a list of permutations in S_d, one per
mark, with identity product and (when connected) transitive action.  The
product convention everywhere: the first-listed mark's permutation acts
first, so with marks (quarter256, infinity, zero, extras...) the relation is

    sigma_extras o sigma_zero o sigma_infinity o sigma_quarter256 = identity,

matching the monodromy module's loop relation sigma_0 o sigma_inf o sigma_c = id.

The fixed-curve data of the reference family is hard-coded from its three
printed components (two double covers branched over {0, infinity} and one
four-fold cover with profiles [2,1,1]/[2,2]/[4] over 1/256, 0, infinity); the
orbit model of a normalized fiber product then computes pullbacks, component
decompositions, profiles and genera for arbitrary covers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .monodromy import REFERENCE_TABLE
from .permutations import (
    Permutation,
    compose_all,
    group_closure,
    is_transitive,
    orbits,
)

MARK_QUARTER256 = "quarter256"
MARK_INFINITY = "infinity"
MARK_ZERO = "zero"
SPECIAL_MARKS = (MARK_QUARTER256, MARK_INFINITY, MARK_ZERO)


class HurwitzError(ValueError):
    """Structurally invalid cover data."""


@dataclass(frozen=True)
class HurwitzCover:
    """Monodromy tuple of a branched cover of the marked line."""

    degree: int
    marks: tuple[str, ...]
    permutations: tuple[Permutation, ...]

    @staticmethod
    def make(
        degree: int,
        quarter256: Permutation | None = None,
        infinity: Permutation | None = None,
        zero: Permutation | None = None,
        extras: tuple[Permutation, ...] = (),
    ) -> "HurwitzCover":
        ident = Permutation.identity(degree)
        perms = [quarter256 or ident, infinity or ident, zero or ident, *extras]
        marks = list(SPECIAL_MARKS) + [f"extra{i + 1}" for i in range(len(extras))]
        return HurwitzCover(degree=degree, marks=tuple(marks), permutations=tuple(perms))

    def permutation_at(self, mark: str) -> Permutation:
        try:
            return self.permutations[self.marks.index(mark)]
        except ValueError:
            return Permutation.identity(self.degree)

    @property
    def extras(self) -> tuple[Permutation, ...]:
        return self.permutations[3:]

    def product(self) -> Permutation:
        """Composite with the first-listed mark acting first."""
        return compose_all(self.permutations, self.degree)

    def profile(self, mark: str) -> tuple[int, ...]:
        return self.permutation_at(mark).cycle_type()

    def extra_ramification(self) -> int:
        return sum(
            sum(length - 1 for length in p.cycle_type()) for p in self.extras
        )


def validate(cover: HurwitzCover) -> list[str]:
    """Structured violation list; empty means the cover is well formed."""
    violations = []
    if cover.degree < 1:
        violations.append(f"degree must be positive, got {cover.degree}")
        return violations
    if len(cover.marks) != len(cover.permutations):
        violations.append("marks and permutations differ in length")
        return violations
    if cover.marks[:3] != SPECIAL_MARKS:
        violations.append(f"first marks must be {SPECIAL_MARKS}, got {cover.marks[:3]}")
    if len(set(cover.marks)) != len(cover.marks):
        violations.append("duplicate mark names")
    for mark, perm in zip(cover.marks, cover.permutations):
        if perm.degree != cover.degree:
            violations.append(
                f"permutation at {mark} acts on {perm.degree} points, cover degree is {cover.degree}"
            )
            return violations
    prod = cover.product()
    if not prod.is_identity:
        violations.append(f"monodromy product is {prod.cycle_string()}, not the identity")
    if not is_transitive(cover.degree, cover.permutations):
        violations.append("monodromy group is not transitive (cover is disconnected)")
    return violations


def genus(cover: HurwitzCover) -> int:
    """Genus of the connected cover, by Riemann-Hurwitz over a rational base."""
    problems = validate(cover)
    if problems:
        raise HurwitzError("; ".join(problems))
    ram = sum(
        sum(length - 1 for length in perm.cycle_type())
        for perm in cover.permutations
    )
    two_g = ram - 2 * cover.degree + 2
    if two_g % 2:
        raise HurwitzError("Riemann-Hurwitz parity violated")  # impossible with id product
    g = two_g // 2
    if g < 0:
        raise HurwitzError(f"negative genus {g} from inconsistent data")
    return g


# -- branch data ----------------------------------------------------------------


@dataclass(frozen=True)
class BranchData:
    """Combinatorial shell of a cover: degree and ramification partitions.

    x, y, z are the profiles over lambda = 0, infinity, 1/256 respectively;
    r is the total extra simple ramification away from the three marks.
    """

    n: int
    x: tuple[int, ...]
    y: tuple[int, ...]
    z: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(sorted((int(v) for v in self.x), reverse=True)))
        object.__setattr__(self, "y", tuple(sorted((int(v) for v in self.y), reverse=True)))
        object.__setattr__(self, "z", tuple(sorted((int(v) for v in self.z), reverse=True)))
        for name, part in (("x", self.x), ("y", self.y), ("z", self.z)):
            if any(v < 1 for v in part):
                raise HurwitzError(f"partition {name} has nonpositive parts: {part}")
            if sum(part) != self.n:
                raise HurwitzError(f"partition {name}={part} does not sum to n={self.n}")
        if self.r < 0:
            raise HurwitzError(f"negative extra ramification r={self.r}")

    @property
    def k(self) -> int:
        return len(self.x)

    @property
    def l(self) -> int:
        return len(self.y)

    @property
    def m(self) -> int:
        return len(self.z)

    @property
    def m_odd(self) -> int:
        return sum(1 for v in self.z if v % 2)

    def total_ramification(self) -> int:
        return (
            sum(v - 1 for v in self.x)
            + sum(v - 1 for v in self.y)
            + sum(v - 1 for v in self.z)
            + self.r
        )

    def admits_rational_cover(self) -> bool:
        """Riemann-Hurwitz for a genus-0 source: total ramification = 2n - 2."""
        return self.total_ramification() == 2 * self.n - 2


def branch_data_of(cover: HurwitzCover) -> BranchData:
    return BranchData(
        n=cover.degree,
        x=cover.profile(MARK_ZERO),
        y=cover.profile(MARK_INFINITY),
        z=cover.profile(MARK_QUARTER256),
        r=cover.extra_ramification(),
    )


# -- normalized fiber products -----------------------------------------------------


@dataclass(frozen=True)
class ComponentReport:
    """One component of a normalized fiber product, as a cover of the base.

    degree is the degree over the common (moduli) base; profiles map each
    mark to the cycle lengths of the pair permutation on the component, so
    Riemann-Hurwitz reads 2g - 2 = -2 degree + sum(e - 1) over all entries.
    """

    degree: int
    profiles: dict[str, tuple[int, ...]]
    genus: int

    def ramification_total(self) -> int:
        return sum(
            sum(e - 1 for e in lengths) for lengths in self.profiles.values()
        )


def _merged_marks(a: HurwitzCover, b: HurwitzCover) -> list[str]:
    marks = list(SPECIAL_MARKS)
    for cover, tag in ((a, "a"), (b, "b")):
        for mark in cover.marks[3:]:
            marks.append(f"{tag}:{mark}")
    return marks


def pullback(base_cover: HurwitzCover, g: HurwitzCover) -> list[ComponentReport]:
    """Components of the normalized pullback of base_cover along g.

    Both covers live over the same marked line; their extra branch points
    are treated as distinct.  The product representation acts on label pairs
    (i, j) in {1..d} x {1..n}; orbits are the components, cycle types of each
    generator restricted to an orbit give its profiles (a pair of local
    indices e, e' meets in gcd(e, e') points of index lcm(e, e')), and the
    genus comes from Riemann-Hurwitz.
    """
    for cover, name in ((base_cover, "base_cover"), (g, "g")):
        problems = [v for v in validate(cover) if "transitive" not in v]
        if problems:
            raise HurwitzError(f"{name}: " + "; ".join(problems))
    d, n = base_cover.degree, g.degree

    def pair_index(i: int, j: int) -> int:
        return (i - 1) * n + j

    def pair_perm(pa: Permutation, pb: Permutation) -> Permutation:
        images = [0] * (d * n)
        for i in range(1, d + 1):
            for j in range(1, n + 1):
                images[pair_index(i, j) - 1] = pair_index(pa(i), pb(j))
        return Permutation(images)

    marks = _merged_marks(base_cover, g)
    generators: dict[str, Permutation] = {}
    for mark in marks:
        if mark.startswith("a:"):
            pa = base_cover.permutation_at(mark[2:])
            pb = Permutation.identity(n)
        elif mark.startswith("b:"):
            pa = Permutation.identity(d)
            pb = g.permutation_at(mark[2:])
        else:
            pa = base_cover.permutation_at(mark)
            pb = g.permutation_at(mark)
        generators[mark] = pair_perm(pa, pb)

    components = []
    for orbit in orbits(d * n, generators.values()):
        inside = set(orbit)
        profiles = {}
        ram = 0
        for mark, perm in generators.items():
            lengths = []
            seen = set()
            for start in orbit:
                if start in seen:
                    continue
                length = 0
                p = start
                while True:
                    seen.add(p)
                    length += 1
                    p = perm(p)
                    if p == start:
                        break
                    if p not in inside:
                        raise HurwitzError("orbit not invariant; internal error")
                lengths.append(length)
            profiles[mark] = tuple(sorted(lengths, reverse=True))
            ram += sum(e - 1 for e in lengths)
        two_g = ram - 2 * len(orbit) + 2
        components.append(
            ComponentReport(degree=len(orbit), profiles=profiles, genus=two_g // 2)
        )
    components.sort(key=lambda c: (c.degree, sorted(c.profiles.items()), c.genus))
    return components


# -- the fixed curve of the reference family ----------------------------------------


def c2_components() -> tuple[HurwitzCover, HurwitzCover, HurwitzCover]:
    """The three components of the fixed curve over the modular base.

    Two double covers branched over {0, infinity}, and one four-fold cover
    with profiles [2,1,1] over 1/256, [2,2] over 0 and [4] over infinity.
    The four-fold tuple is pinned once; the exhaustive search oracle shows it
    is the unique such tuple up to simultaneous conjugation.
    """
    swap = Permutation.from_cycles(2, [(1, 2)])
    double = HurwitzCover.make(2, infinity=swap, zero=swap)
    quadruple = HurwitzCover.make(
        4,
        quarter256=Permutation.from_cycles(4, [(1, 3)]),
        infinity=Permutation.from_cycles(4, [(1, 4, 3, 2)]),
        zero=Permutation.from_cycles(4, [(1, 2), (3, 4)]),
    )
    return double, double, quadruple


def regular_deck_cover() -> HurwitzCover:
    """The degree-8 regular cover attached to the monodromy group.

    Fiber points are the elements of the group generated by the reference
    loop permutations; each loop acts by left multiplication.  Its branch
    data is (k, l, m, n, r) = (4, 2, 4, 8, 0) with x = z = [2,2,2,2] and
    y = [4,4].
    """
    gens = [REFERENCE_TABLE["zero"], REFERENCE_TABLE["quarter256"]]
    elements = group_closure(gens)
    if len(elements) != 8:
        raise HurwitzError(f"deck group has order {len(elements)}, expected 8")
    index = {e: i + 1 for i, e in enumerate(elements)}

    def left_mult(gamma: Permutation) -> Permutation:
        images = [0] * len(elements)
        for e, i in index.items():
            images[i - 1] = index[gamma * e]
        return Permutation(images)

    ginf = REFERENCE_TABLE["zero"].inverse() * REFERENCE_TABLE["quarter256"].inverse()
    return HurwitzCover.make(
        8,
        quarter256=left_mult(REFERENCE_TABLE["quarter256"]),
        infinity=left_mult(ginf),
        zero=left_mult(REFERENCE_TABLE["zero"]),
    )


# -- exhaustive tuple search -----------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    covers: tuple[HurwitzCover, ...]
    truncated: bool


@lru_cache(maxsize=64)
def _permutations_of_type(n: int, cycle_type: tuple[int, ...]) -> tuple[Permutation, ...]:
    want = tuple(sorted(cycle_type, reverse=True))
    out = []
    for images in itertools.permutations(range(1, n + 1)):
        p = Permutation(images)
        if p.cycle_type() == want:
            out.append(p)
    return tuple(out)


def _canonical_representative(n: int, cycle_type: tuple[int, ...]) -> Permutation:
    """Cycles filled with consecutive points, e.g. [4,2] -> (1 2 3 4)(5 6)."""
    cycles = []
    next_point = 1
    for length in sorted(cycle_type, reverse=True):
        if length > 1:
            cycles.append(tuple(range(next_point, next_point + length)))
        next_point += length
    return Permutation.from_cycles(n, cycles)


def _canonical_key(n: int, perms: tuple[Permutation, ...]):
    """Simultaneous-conjugation invariant of a transitive tuple.

    Breadth-first relabeling from every base point, taking the least
    resulting image table.
    """
    best = None
    for start in range(1, n + 1):
        relabel = {start: 1}
        order = [start]
        for p in order:
            for perm in perms:
                q = perm(p)
                if q not in relabel:
                    relabel[q] = len(relabel) + 1
                    order.append(q)
        if len(relabel) != n:
            raise HurwitzError("canonical key requires a transitive tuple")
        key = tuple(
            tuple(relabel[perm(p)] for p in order) for perm in perms
        )
        if best is None or key < best:
            best = key
    return best


def search_tuples(
    b: BranchData, limit: int = 16, max_candidates: int = 2_000_000
) -> SearchResult:
    """All realizations of the branch data, up to simultaneous conjugation.

    Covers by the projective line only: data whose total ramification is not
    2n - 2 has no realization and yields the empty list.  Extra branch points
    are simple (transpositions).  The enumeration fixes a canonical
    representative over infinity, runs over the full conjugacy class over
    1/256 and all ordered tuples of extra transpositions, solves for the
    permutation over 0 from the product relation, and keeps transitive hits.
    Results are truncated (flagged) at `limit` tuples or `max_candidates`
    candidate combinations.
    """
    if b.n > 9:
        raise HurwitzError("exhaustive search supports degree at most 9")
    if not b.admits_rational_cover():
        return SearchResult(covers=(), truncated=False)

    n = b.n
    sigma_inf = _canonical_representative(n, b.y)
    sigma_inf_inv = sigma_inf.inverse()
    z_class = _permutations_of_type(n, b.z)
    transpositions = [
        Permutation.from_cycles(n, [(i, j)])
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    want_x = tuple(sorted(b.x, reverse=True))

    z_class_inv = [(p, p.inverse()) for p in z_class]
    found: dict[object, HurwitzCover] = {}
    truncated = False
    candidates = 0
    extra_iter = (
        itertools.product(transpositions, repeat=b.r) if b.r else [()]
    )
    for extras in extra_iter:
        if truncated:
            break
        extras_composite_inv = Permutation.identity(n)
        for tau in extras:
            extras_composite_inv = extras_composite_inv * tau  # transpositions self-inverse
        lead = extras_composite_inv
        for sigma_c, sigma_c_inv in z_class_inv:
            candidates += 1
            if candidates > max_candidates:
                truncated = True
                break
            sigma_0 = lead * sigma_c_inv * sigma_inf_inv
            if sigma_0.cycle_type() != want_x:
                continue
            perms = (sigma_c, sigma_inf, sigma_0, *extras)
            if not is_transitive(n, perms):
                continue
            key = _canonical_key(n, perms)
            if key in found:
                continue
            found[key] = HurwitzCover.make(
                n, quarter256=sigma_c, infinity=sigma_inf, zero=sigma_0, extras=extras
            )
            if len(found) >= limit:
                truncated = True
                break
    return SearchResult(covers=tuple(found.values()), truncated=truncated)
