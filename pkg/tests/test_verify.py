"""Family enumeration, counting functions, checkers, and example sets."""

import pytest

from partition_lab.core import parse, sol
from partition_lab.report import VerificationReport
from partition_lab.shapes import DurfeeType, alternating_index, dur2, dur2_sub
from partition_lab.verify import (
    CHECKERS,
    FamilySpec,
    count_A1,
    count_A2,
    count_B,
    count_D,
    enumerate_family,
    example_sets,
    verify,
    verify_all,
)


class TestEnumerate:
    def test_strict_partitions_of_six(self):
        got = list(enumerate_family(FamilySpec(6, strict=True)))
        assert got == [parse("6"), parse("5+1"), parse("4+2"), parse("3+2+1")]

    def test_odd_partitions_of_five(self):
        got = list(enumerate_family(FamilySpec(5, odd_parts=True)))
        assert got == [parse("5"), parse("3+1+1"), parse("1+1+1+1+1")]

    def test_strict_four_parts_two_odd_runs_of_sixteen(self):
        spec = FamilySpec(16, strict=True, length=4, sol=2)
        got = set(enumerate_family(spec))
        assert got == {
            parse("10+3+2+1"),
            parse("9+4+2+1"),
            parse("8+5+2+1"),
            parse("8+4+3+1"),
            parse("7+4+3+2"),
            parse("6+5+4+1"),
        }

    def test_contradictory_filters_empty(self):
        spec = FamilySpec(5, strict=True, odd_parts=True, length=4)
        assert list(enumerate_family(spec)) == []

    def test_max_part_means_exactly(self):
        got = list(enumerate_family(FamilySpec(6, max_part=3)))
        assert all(p.parts[0] == 3 for p in got)

    def test_determinism(self):
        spec = FamilySpec(12, odd_parts=True)
        assert list(enumerate_family(spec)) == list(enumerate_family(spec))


class TestCounts:
    def test_published_cells(self):
        assert count_A1(16, 2, 1) == 6
        assert count_B(16, 2, 2) == 6
        assert count_D(16, 4, 2) == 6
        assert count_A2(15, 2, 0) == 5
        assert count_B(15, 2, 1) == 5
        assert count_D(15, 3, 1) == 5

    def test_parity_constraint_on_strict_counts(self):
        for n in range(1, 15):
            for k in range(1, n + 1):
                for m in range(0, k + 1):
                    if (k - m) % 2:
                        assert count_D(n, k, m) == 0


class TestCheckers:
    @pytest.mark.parametrize(
        "name,bounds",
        [
            ("PROP_2MEASURE", {"nmax": 16}),
            ("THM11", {"order": 12}),
            ("EQ11", {"order": 10}),
            ("EQ31", {"order": 8}),
            ("EQ_2MEASURE_P", {"order": 8}),
            ("THM12", {"nmax": 12}),
            ("THM13", {"nmax": 12}),
            ("COROLLARY", {"nmax": 12}),
            ("GF4", {"order": 10}),
            ("GF5", {"order": 10}),
            ("SYLVESTER", {"nmax": 12}),
            ("INVOLUTION", {"nmax": 8}),
            ("LEMMA51", {"mmax": 4, "order": 12}),
            ("GLAISHER_COUNTEREX", {}),
            ("FINITE_LEMMAS", {"order": 8}),
        ],
    )
    def test_each_checker_passes_small(self, name, bounds):
        report = verify(name, **bounds)
        assert report.passed, report.witness

    def test_registry_covers_desk_profile(self):
        from partition_lab.verify import DESK_PROFILE

        assert set(DESK_PROFILE) == set(CHECKERS)

    def test_unknown_checker_and_bad_bound(self):
        with pytest.raises(ValueError):
            verify("NOPE")
        with pytest.raises(ValueError):
            verify("THM11", nmax=5)

    def test_trivial_order_zero(self):
        assert verify("THM11", order=0).passed

    def test_verify_all_runs_every_checker(self, monkeypatch):
        # shrink the bounds so the full sweep stays fast
        from partition_lab import verify as verify_module

        small = {
            "PROP_2MEASURE": {"nmax": 10},
            "THM11": {"order": 8},
            "EQ11": {"order": 8},
            "EQ31": {"order": 6},
            "EQ_2MEASURE_P": {"order": 6},
            "THM12": {"nmax": 8},
            "THM13": {"nmax": 8},
            "COROLLARY": {"nmax": 8},
            "GF4": {"order": 8},
            "GF5": {"order": 8},
            "SYLVESTER": {"nmax": 8},
            "INVOLUTION": {"nmax": 6},
            "LEMMA51": {"mmax": 3, "order": 8},
            "GLAISHER_COUNTEREX": {},
            "FINITE_LEMMAS": {"order": 6},
        }
        monkeypatch.setattr(verify_module, "DESK_PROFILE", small)
        reports = verify_all()
        assert [r.name.split()[0] for r in reports] == list(CHECKERS)
        assert all(reports)
        threaded = verify_all(max_workers=4)
        assert [r.line() for r in threaded] == [r.line() for r in reports]


class TestReports:
    def test_line_format(self):
        report = VerificationReport("THM12", {"nmax": 26}, True)
        assert report.line() == "THM12 n<=26 PASS"

    def test_fail_carries_witness(self):
        report = VerificationReport("X", {"order": 3}, False, witness="q^1: 0 != 1")
        assert report.line() == "X order<=3 FAIL"
        assert "counterexample: q^1: 0 != 1" in report.text()
        assert not report

    def test_to_dict_round_trip_fields(self):
        report = VerificationReport("Y", {"nmax": 5}, True, counts={"cells": 7})
        data = report.to_dict()
        assert data["status"] == "PASS" and data["counts"] == {"cells": 7}


class TestExampleSets:
    def test_cardinalities(self):
        for preset, size in (("16-4-2", 6), ("15-3-1", 5)):
            sets = example_sets(preset)
            assert [len(sets[key]) for key in ("A", "B", "D")] == [size] * 3

    def test_published_order_first_entries(self):
        sets = example_sets("16-4-2")
        assert sets["A"][0] == parse("5+5+3+1+1+1")
        assert sets["B"][0] == parse("5+5+3+3")
        assert sets["D"][0] == parse("10+3+2+1")
        sets = example_sets("15-3-1")
        assert sets["A"][0] == parse("11+3+1")
        assert sets["B"][0] == parse("9+3+3")
        assert sets["D"][0] == parse("12+2+1")

    def test_sets_match_enumeration(self):
        sets = example_sets("16-4-2")
        assert set(sets["A"]) == set(
            enumerate_family(
                FamilySpec(
                    16,
                    odd_parts=True,
                    dur2=2,
                    durfee_type=DurfeeType.TYPE_I,
                    dur2_sub=1,
                )
            )
        )
        assert set(sets["B"]) == set(
            enumerate_family(FamilySpec(16, odd_parts=True, dur2=2, alt=2))
        )
        assert set(sets["D"]) == set(
            enumerate_family(FamilySpec(16, strict=True, length=4, sol=2))
        )
        sets = example_sets("15-3-1")
        assert set(sets["A"]) == set(
            enumerate_family(
                FamilySpec(
                    15,
                    odd_parts=True,
                    dur2=2,
                    durfee_type=DurfeeType.TYPE_II,
                    dur2_sub=0,
                )
            )
        )
        assert set(sets["B"]) == set(
            enumerate_family(FamilySpec(15, odd_parts=True, dur2=2, alt=1))
        )
        assert set(sets["D"]) == set(
            enumerate_family(FamilySpec(15, strict=True, length=3, sol=1))
        )

    def test_membership_statistics(self):
        sets = example_sets("16-4-2")
        for p in sets["A"]:
            assert p.is_odd_parts() and dur2(p) == 2
            assert dur2_sub(p) == (DurfeeType.TYPE_I, 1)
        for p in sets["B"]:
            assert dur2(p) == 2 and alternating_index(p) == 2
        for p in sets["D"]:
            assert p.is_strict() and p.length == 4 and sol(p) == 2

    def test_unknown_preset(self):
        with pytest.raises(ValueError):
            example_sets("1-2-3")
