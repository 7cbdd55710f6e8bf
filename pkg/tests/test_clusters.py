"""Cluster pictures: frozen worked-example pictures, then structural laws."""

import random

import pytest
from gmpy2 import mpq

from helpers import ex316_roots, random_cluster_roots, rational_roots, ve_poly

from hyperred.clusters import (
    build_cluster_picture,
    cluster_distance,
    disc_valuation,
    parse_ascii,
    render_ascii,
)
from hyperred.errors import DomainError, E_INFINITE_ROOT, E_NOT_SQUAREFREE, E_SINGLETON
from hyperred.valfield import INF, RationalAtP, RootPair, ValuedElement


def _cluster_by_members(cp, members):
    for c in cp.clusters:
        if c.members == frozenset(members):
            return c
    raise AssertionError(f"no cluster {members}")


class TestStarExamplePicture:
    def test_depths_and_relative_depths(self):
        cp = build_cluster_picture(ex316_roots())
        twin5 = _cluster_by_members(cp, {0, 1})
        twin7 = _cluster_by_members(cp, {2, 3})
        quad = _cluster_by_members(cp, {0, 1, 2, 3})
        twin1 = _cluster_by_members(cp, {4, 5})
        top = cp.top
        assert twin5.depth == 5 and twin5.relative_depth == 3
        assert twin7.depth == 7 and twin7.relative_depth == 5
        assert quad.depth == 2 and quad.relative_depth == 2
        assert twin1.depth == 1 and twin1.relative_depth == 1
        assert top.depth == 0
        # exactly these proper clusters and nothing else
        assert sorted(c.size for c in cp.proper_clusters()) == [2, 2, 2, 4, 6]

    def test_all_units_at_p7(self):
        cp = build_cluster_picture(rational_roots([0, 1, 2, 3, 4, 5], 7))
        assert [c.size for c in cp.proper_clusters()] == [6]
        assert cp.top.depth == 0

    def test_two_twins_brute_force(self):
        roots = [
            RootPair.finite(ve_poly((0, 0))),            # 0
            RootPair.finite(ve_poly((1, 1))),            # p
            RootPair.finite(ve_poly((0, 1))),            # 1
            RootPair.finite(ve_poly((0, 1), (3, 1))),    # 1 + p^3
        ]
        cp = build_cluster_picture(roots)
        t1 = _cluster_by_members(cp, {0, 1})
        t2 = _cluster_by_members(cp, {2, 3})
        assert t1.relative_depth == 1
        assert t2.relative_depth == 3
        assert cp.top.depth == 0


class TestClusterDistance:
    def test_diagonal(self):
        cp = build_cluster_picture(ex316_roots())
        for c in cp.proper_clusters():
            assert cluster_distance(cp, c, c) == 0

    def test_nested(self):
        cp = build_cluster_picture(ex316_roots())
        twin5 = _cluster_by_members(cp, {0, 1})
        quad = _cluster_by_members(cp, {0, 1, 2, 3})
        assert cluster_distance(cp, twin5, quad) == 3
        assert cluster_distance(cp, quad, twin5) == 3

    def test_across_least_common_ancestor(self):
        cp = build_cluster_picture(ex316_roots())
        twin5 = _cluster_by_members(cp, {0, 1})
        twin7 = _cluster_by_members(cp, {2, 3})
        # depths 5 and 7 meet at the depth-2 cluster: (5-2) + (7-2)
        assert cluster_distance(cp, twin5, twin7) == 8

    def test_singleton_rejected(self):
        cp = build_cluster_picture(ex316_roots())
        single = cp.singleton(0)
        with pytest.raises(DomainError) as err:
            cluster_distance(cp, single, cp.top)
        assert err.value.code == E_SINGLETON

    def test_pseudo_metric_on_random_pictures(self):
        rng = random.Random(31)
        for _ in range(40):
            cp = build_cluster_picture(random_cluster_roots(rng))
            pcs = cp.proper_clusters()
            for a in pcs:
                for b in pcs:
                    dab = cluster_distance(cp, a, b)
                    assert dab == cluster_distance(cp, b, a)
                    assert dab >= 0
                    for c in pcs:
                        assert dab <= cluster_distance(cp, a, c) + cluster_distance(cp, c, b)


class TestDiscValuation:
    def test_monic_units(self):
        roots = rational_roots([0, 1, 2, 3, 4, 6], 7)
        assert disc_valuation(roots, RationalAtP(1, 7), 2) == 0

    def test_star_example_brute_force(self):
        roots = ex316_roots()
        # oracle: direct pairwise sum over the valuation matrix
        cp = build_cluster_picture(roots)
        acc = mpq(0)
        for i in range(6):
            for j in range(i + 1, 6):
                acc += 2 * mpq(cp.pairwise_valuation(i, j))
        got = disc_valuation(roots, ValuedElement.one(), 2)
        assert got == acc == 42

    def test_leading_coefficient_term(self):
        roots = rational_roots([0, 1, 2, 3, 4, 6], 7)
        assert disc_valuation(roots, RationalAtP(49, 7), 2) == 10 * 2


class TestLaminarityAndDepthCorrectness:
    def test_laminar_and_depths_brute_force(self):
        rng = random.Random(77)
        for _ in range(500):
            d = rng.choice([4, 6, 8])
            cp = build_cluster_picture(random_cluster_roots(rng, d=d))
            # laminarity
            for a in cp.clusters:
                for b in cp.clusters:
                    inter = a.members & b.members
                    assert (not inter or a.members <= b.members
                            or b.members <= a.members)
            # depth = brute-force min pairwise valuation
            for c in cp.proper_clusters():
                ms = sorted(c.members)
                brute = min(cp.pairwise_valuation(i, j)
                            for i in ms for j in ms if i < j)
                assert c.depth == brute
            # relative depths positive below the top
            for c in cp.proper_clusters():
                if c is not cp.top:
                    assert c.relative_depth > 0

    def test_duplicate_roots_rejected(self):
        roots = rational_roots([0, 1, 1, 3, 4, 5], 7)
        with pytest.raises(DomainError) as err:
            build_cluster_picture(roots)
        assert err.value.code == E_NOT_SQUAREFREE

    def test_infinity_rejected_with_hint(self):
        roots = rational_roots([0, 1, 2], 7)
        roots.append(RootPair.infinity(RationalAtP(1, 7)))
        with pytest.raises(DomainError) as err:
            build_cluster_picture(roots)
        assert err.value.code == E_INFINITE_ROOT
        assert "Moebius" in err.value.code or "Moebius" in str(err.value)


class TestAsciiRendering:
    def test_star_example_string(self):
        cp = build_cluster_picture(ex316_roots())
        assert render_ascii(cp) == "((●●)_3 (●●)_5)_2 (●●)_1 ; top 0"

    def test_single_cluster_of_six(self):
        cp = build_cluster_picture(rational_roots([0, 1, 2, 3, 4, 5], 7))
        assert render_ascii(cp) == "(●●●●●●)_0"

    def test_round_trip_random(self):
        rng = random.Random(99)
        for _ in range(100):
            cp = build_cluster_picture(random_cluster_roots(rng))
            assert parse_ascii(render_ascii(cp)) == cp.structure()
