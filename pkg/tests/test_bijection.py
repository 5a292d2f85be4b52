import itertools
import math

import pytest

from maxmintrees.bijection import (
    Stem,
    bijection_report,
    stable_region,
    count_perms_by_weight,
    enumerate_stems,
    wide_region,
    stem_count,
    stem_to_partition,
    target_weight,
    verify_bijection,
    verify_stem_totals,
)
from maxmintrees.partitions import enumerate_partitions, t_nk
from maxmintrees.perms import descent_count
from maxmintrees.weights import weight_via_ranges


class TestRegions:
    def test_stable(self):
        assert stable_region(9, 5)
        assert stable_region(5, 2)  # boundary: 2d = n-1
        assert not stable_region(4, 1)

    def test_wide(self):
        assert wide_region(4, 1)
        assert not wide_region(9, 5)

    def test_target_weight(self):
        assert target_weight(9, 5) == 12
        assert target_weight(5, 2) == 2
        assert target_weight(3, 1) == 0


class TestCounts:
    def test_5_2_2(self):
        assert count_perms_by_weight(5, 2, 2) == 11

    def test_3_1_1(self):
        assert count_perms_by_weight(3, 1, 1) == 1

    def test_identity_class(self):
        for n in range(1, 7):
            assert count_perms_by_weight(n, 0, 0) == 1

    def test_against_direct_enumeration(self):
        n, d, w = 6, 3, 4
        direct = sum(
            1
            for p in itertools.permutations(range(1, n + 1))
            if descent_count(p) == d and weight_via_ranges(p) == w
        )
        assert count_perms_by_weight(n, d, w) == direct == 16


class TestVerifyBijection:
    def test_5_2(self):
        assert verify_bijection(5, 2)  # 11 = T(4, 2)

    def test_3_1(self):
        assert verify_bijection(3, 1)  # 3 = T(2, 1)

    def test_6_3(self):
        assert verify_bijection(6, 3)  # 16 = T(5, 3)

    def test_fails_outside_region(self):
        # (4, 1) sits outside 2d >= n-1 and the counts differ (7 vs 6)
        assert count_perms_by_weight(4, 1, target_weight(4, 1)) == 7
        assert t_nk(3, 1) == 6
        assert not verify_bijection(4, 1)

    def test_stable_region_up_to_8(self):
        for n in range(2, 9):
            for d in range(1, n):
                if stable_region(n, d):
                    assert verify_bijection(n, d), (n, d)

    def test_d_range_checked(self):
        with pytest.raises(ValueError):
            verify_bijection(4, 0)


class TestStems:
    def test_9_5_is_the_seven_stems(self):
        assert [s.labels for s in enumerate_stems(9, 5)] == [
            (1, 2, 3, 4),
            (1, 2, 3, 5),
            (1, 2, 3, 6),
            (1, 2, 3, 7),
            (1, 2, 4, 5),
            (1, 2, 4, 6),
            (1, 3, 4, 5),
        ]

    def test_single_nondescent(self):
        for n in range(2, 8):
            stems = enumerate_stems(n, n - 1)
            assert [s.labels for s in stems] == [(1,)]

    def test_4_2(self):
        assert [s.labels for s in enumerate_stems(4, 2)] == [(1, 2), (1, 3)]

    def test_admissibility_enforced(self):
        for s in enumerate_stems(8, 4):
            assert s.is_admissible()
            assert s.labels[0] == 1
            assert s.labels[-1] <= 8

    def test_validation(self):
        with pytest.raises(ValueError, match="start at 1"):
            Stem((2, 3), 4, 2)
        with pytest.raises(ValueError, match="increase"):
            Stem((1, 1), 4, 2)
        with pytest.raises(ValueError, match="exceeds"):
            Stem((1, 5), 4, 2)
        with pytest.raises(ValueError, match="labels"):
            Stem((1, 2, 3), 4, 2)


class TestStemCounts:
    def test_9_5_counts(self):
        counts = [stem_count(s) for s in enumerate_stems(9, 5)]
        assert counts == [56, 21, 6, 1, 6, 1, 1]
        assert sum(counts) == 92

    def test_explicit_cells(self):
        assert stem_count(Stem((1, 2, 3, 4), 9, 5)) == 56
        assert stem_count(Stem((1, 2, 3, 5), 9, 5)) == 21
        assert stem_count(Stem((1, 3, 4, 5), 9, 5)) == 1


class TestStemToPartition:
    def test_9_5_images(self):
        images = [stem_to_partition(s) for s in enumerate_stems(9, 5)]
        assert images == [
            (1, 1, 1, 1, 1, 1, 1, 1),
            (2, 1, 1, 1, 1, 1, 1),
            (3, 1, 1, 1, 1, 1),
            (4, 1, 1, 1, 1),
            (2, 2, 1, 1, 1, 1),
            (3, 2, 1, 1, 1),
            (2, 2, 2, 1, 1),
        ]

    def test_part_count_matches_count(self):
        for n, d in ((9, 5), (8, 4), (7, 4), (5, 2)):
            for s in enumerate_stems(n, d):
                lam = stem_to_partition(s)
                assert sum(lam) == n - 1
                assert math.comb(len(lam), d) == stem_count(s)

    def test_boundary_drops_a_one(self):
        # at 2d = n-1 a stem can overshoot by one unit; the image is still
        # a partition of n-1
        assert stem_to_partition(Stem((1, 2, 5), 5, 2)) == (3, 1)
        assert stem_to_partition(Stem((1, 3, 4), 5, 2)) == (2, 2)

    def test_images_cover_high_part_partitions(self):
        # stems map bijectively onto partitions of n-1 with >= d parts
        for n, d in ((9, 5), (6, 3), (5, 2)):
            images = {stem_to_partition(s) for s in enumerate_stems(n, d)}
            expected = {
                lam for lam in enumerate_partitions(n - 1) if len(lam) >= d
            }
            assert images == expected


class TestStemTotals:
    def test_9_5(self):
        assert verify_stem_totals(9, 5)

    def test_3_1(self):
        assert verify_stem_totals(3, 1)

    def test_diagonal(self):
        for n in range(2, 9):
            assert verify_stem_totals(n, n - 1)

    def test_region_sweep(self):
        for n in range(2, 10):
            for d in range(1, n):
                if stable_region(n, d):
                    assert verify_stem_totals(n, d), (n, d)


class TestThreeWayAgreement:
    def test_stable_region_up_to_8(self):
        for n in range(2, 9):
            for d in range(1, n):
                if not stable_region(n, d):
                    continue
                r = bijection_report(n, d)
                assert r["pass"], r
                assert r["brute_count"] == r["stem_total"] == r["t_value"]

    def test_report_fields(self):
        r = bijection_report(5, 2)
        assert r == {
            "n": 5,
            "d": 2,
            "weight": 2,
            "brute_count": 11,
            "stem_total": 11,
            "t_value": 11,
            "in_stable_region": True,
            "in_wide_region": True,
            "pass": True,
        }
