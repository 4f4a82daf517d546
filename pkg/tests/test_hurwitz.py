"""Branched-cover combinatorics: validation, genus, pullbacks, tuple search."""

import math
import random

import pytest

from kumfib.hurwitz import (
    MARK_INFINITY,
    MARK_QUARTER256,
    MARK_ZERO,
    BranchData,
    HurwitzCover,
    HurwitzError,
    branch_data_of,
    c2_components,
    genus,
    pullback,
    regular_deck_cover,
    search_tuples,
    validate,
)
from kumfib.permutations import Permutation


def perm(n, *cycles):
    return Permutation.from_cycles(n, cycles)


class TestValidate:
    def test_double_cover_ok(self):
        cover = HurwitzCover.make(2, infinity=perm(2, (1, 2)), zero=perm(2, (1, 2)))
        assert validate(cover) == []

    def test_bad_product(self):
        cover = HurwitzCover.make(2, zero=perm(2, (1, 2)))
        problems = validate(cover)
        assert any("product" in p for p in problems)

    def test_quadruple_component_ok(self):
        quad = c2_components()[2]
        assert validate(quad) == []

    def test_disconnected_flagged(self):
        cover = HurwitzCover.make(
            4, infinity=perm(4, (1, 2)), zero=perm(4, (1, 2))
        )
        problems = validate(cover)
        assert any("transitive" in p for p in problems)

    def test_degree_mismatch(self):
        cover = HurwitzCover(
            degree=3,
            marks=(MARK_QUARTER256, MARK_INFINITY, MARK_ZERO),
            permutations=(
                Permutation.identity(2),
                Permutation.identity(3),
                Permutation.identity(3),
            ),
        )
        assert validate(cover)


class TestGenus:
    def test_two_point_double_cover(self):
        cover = HurwitzCover.make(2, infinity=perm(2, (1, 2)), zero=perm(2, (1, 2)))
        assert genus(cover) == 0

    def test_c2_components(self):
        assert [genus(c) for c in c2_components()] == [0, 0, 0]

    def test_quintic_normalization_profiles(self):
        # degree 4 with [2,2], [4], [1,1,1,1] over the marks and five simple
        # extra branch points realizes a genus-2 curve
        extras = (
            perm(4, (1, 2)),
            perm(4, (1, 3)),
            perm(4, (1, 4)),
            perm(4, (1, 2)),
            perm(4, (1, 2)),
        )
        cover = HurwitzCover.make(
            4,
            infinity=perm(4, (1, 2, 3, 4)),
            zero=perm(4, (1, 3), (2, 4)),
            extras=extras,
        )
        assert validate(cover) == []
        assert genus(cover) == 2

    def test_disconnected_rejected(self):
        cover = HurwitzCover.make(4, infinity=perm(4, (1, 2)), zero=perm(4, (1, 2)))
        with pytest.raises(HurwitzError):
            genus(cover)


class TestBranchData:
    def test_partitions_must_sum(self):
        with pytest.raises(HurwitzError):
            BranchData(n=4, x=(2, 1), y=(4,), z=(4,), r=0)

    def test_part_counts(self):
        b = BranchData(n=8, x=(2, 2, 2, 2), y=(4, 4), z=(2, 2, 2, 2), r=0)
        assert (b.k, b.l, b.m, b.m_odd) == (4, 2, 4, 0)

    def test_of_cover(self):
        b = branch_data_of(regular_deck_cover())
        assert (b.n, b.x, b.y, b.z, b.r) == (8, (2, 2, 2, 2), (4, 4), (2, 2, 2, 2), 0)


class TestPullback:
    def test_identity_pullback_returns_the_cover(self):
        quad = c2_components()[2]
        identity_cover = HurwitzCover.make(1)
        reports = pullback(quad, identity_cover)
        assert len(reports) == 1
        report = reports[0]
        assert report.degree == 4
        assert report.genus == genus(quad)
        assert report.profiles[MARK_QUARTER256] == (2, 1, 1)
        assert report.profiles[MARK_ZERO] == (2, 2)
        assert report.profiles[MARK_INFINITY] == (4,)

    def test_regular_cover_pullback_components(self):
        cover = regular_deck_cover()
        counts = []
        for component in c2_components():
            reports = pullback(component, cover)
            counts.append(len(reports))
            assert all(r.genus == 0 for r in reports)
            assert all(r.degree == 8 for r in reports)
        assert counts == [2, 2, 4]  # eight components in total

    def test_relabeling_invariance(self):
        quad = c2_components()[2]
        rho = perm(4, (1, 2, 3))
        conjugated = HurwitzCover.make(
            4,
            quarter256=quad.permutation_at(MARK_QUARTER256).conjugate_by(rho),
            infinity=quad.permutation_at(MARK_INFINITY).conjugate_by(rho),
            zero=quad.permutation_at(MARK_ZERO).conjugate_by(rho),
        )
        g = regular_deck_cover()
        original = [(r.degree, sorted(r.profiles.items()), r.genus) for r in pullback(quad, g)]
        relabeled = [(r.degree, sorted(r.profiles.items()), r.genus) for r in pullback(conjugated, g)]
        assert original == relabeled

    def test_pair_cycle_lengths_are_lcms(self):
        rng = random.Random(6)
        for _ in range(20):
            d, n = rng.randint(2, 6), rng.randint(2, 6)

            def rand_cover(k):
                ps = []
                for _ in range(2):
                    images = list(range(1, k + 1))
                    rng.shuffle(images)
                    ps.append(Permutation(images))
                closing = (ps[1] * ps[0]).inverse()
                return HurwitzCover.make(k, quarter256=ps[0], infinity=ps[1], zero=closing)

            a, g = rand_cover(d), rand_cover(n)
            reports = pullback(a, g)
            assert sum(r.degree for r in reports) == d * n
            for mark in (MARK_QUARTER256, MARK_INFINITY, MARK_ZERO):
                pa = a.permutation_at(mark)
                pg = g.permutation_at(mark)
                expected = sorted(
                    (
                        math.lcm(len(ca), len(cg))
                        for ca in pa.cycles(include_fixed=True)
                        for cg in pg.cycles(include_fixed=True)
                        for _ in range(math.gcd(len(ca), len(cg)))
                    ),
                    reverse=True,
                )
                got = sorted(
                    (e for r in reports for e in r.profiles[mark]), reverse=True
                )
                assert got == expected

    def test_mark_merge_with_extras(self):
        data = BranchData(n=5, x=(5,), y=(4, 1), z=(1, 1, 1, 1, 1), r=1)
        cover = search_tuples(data).covers[0]
        reports = pullback(c2_components()[0], cover)
        assert len(reports) == 1
        assert reports[0].degree == 10
        assert reports[0].genus == 0


class TestC2Components:
    def test_degrees_and_total(self):
        comps = c2_components()
        assert tuple(c.degree for c in comps) == (2, 2, 4)
        assert sum(c.degree for c in comps) == 8

    def test_profiles(self):
        quad = c2_components()[2]
        assert quad.profile(MARK_QUARTER256) == (2, 1, 1)
        assert quad.profile(MARK_ZERO) == (2, 2)
        assert quad.profile(MARK_INFINITY) == (4,)
        double = c2_components()[0]
        assert double.profile(MARK_ZERO) == (2,)
        assert double.profile(MARK_INFINITY) == (2,)
        assert double.profile(MARK_QUARTER256) == (1, 1)


class TestSearchTuples:
    def test_quadruple_tuple_unique_up_to_conjugation(self):
        data = BranchData(n=4, x=(2, 2), y=(4,), z=(2, 1, 1), r=0)
        result = search_tuples(data)
        assert len(result.covers) == 1 and not result.truncated

    def test_quintic_data_rigid(self):
        data = BranchData(n=5, x=(5,), y=(4, 1), z=(1, 1, 1, 1, 1), r=1)
        result = search_tuples(data)
        assert len(result.covers) == 1 and not result.truncated
        assert genus(result.covers[0]) == 0

    def test_regular_tuple_found(self):
        data = BranchData(n=8, x=(2, 2, 2, 2), y=(4, 4), z=(2, 2, 2, 2), r=0)
        result = search_tuples(data, limit=64)
        from kumfib.hurwitz import _canonical_key

        target = _canonical_key(8, regular_deck_cover().permutations)
        assert any(_canonical_key(8, c.permutations) == target for c in result.covers)

    def test_parity_violation_empty(self):
        # total ramification 3 is odd, can never be 2n-2 = 2
        data = BranchData(n=2, x=(2,), y=(2,), z=(2,), r=0)
        assert search_tuples(data).covers == ()

    def test_wrong_genus_empty(self):
        # consistent parity but genus 1 data: no rational realization
        data = BranchData(n=2, x=(2,), y=(2,), z=(2,), r=1)
        assert search_tuples(data).covers == ()

    def test_budget_truncation_flag(self):
        data = BranchData(n=8, x=(1,) * 8, y=(4, 4), z=(1,) * 8, r=8)
        result = search_tuples(data, limit=2, max_candidates=2000)
        assert result.truncated
