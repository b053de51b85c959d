import csv
import io
import math
from fractions import Fraction

import pytest

from mpx.digraph import gen_family, make_digraph
from mpx.errors import NotAcyclic, UnsupportedParameter
from mpx.harness import (
    expected_homology,
    mu,
    nu,
    reports_to_csv,
    run_check,
    run_suite,
    verify_matching_iso,
    verify_omega,
)


@pytest.mark.parametrize("f, n, want", [
    (nu, 5, 1), (nu, 2, -1), (nu, 9, 3),
    (mu, 5, 1), (mu, 2, -1), (mu, 3, -1), (mu, 4, 0), (mu, 6, 1), (mu, 8, 3),
])
def test_bounds(f, n, want):
    assert f(n) == want


def test_mu_floor_is_exact():
    for n in range(1, 60):
        assert mu(n) == math.floor(Fraction(2 * n - 1, 3) - 2)


class TestExpected:
    @pytest.mark.parametrize("family, n, betti", [
        ("BP", 3, {0: 1, 1: 3, 2: 2}),
        ("BP", 4, {0: 1, 2: 1, 3: 2}),
        ("BP", 2, {0: 2, 1: 2}),
        ("W", 4, {0: 1}),
        ("W", 6, {0: 1, 2: 1}),
        ("BLHAT", 2, {0: 1}),
        ("BLHAT", 1, {0: 2}),
        ("BL", 1, {0: 2}),
        ("TAP2", 6, {0: 1, 2: 1, 5: 1}),
        ("TAP1", 4, {0: 1, 3: 1}),
        ("TAPSTAR", 3, {0: 1, 2: 1}),
        ("C", 4, {0: 1, 3: 1}),
    ])
    def test_tables(self, family, n, betti):
        assert expected_homology(family, n).betti == betti

    def test_conjectural_flag(self):
        assert expected_homology("TAP1", 5).conjectural
        assert not expected_homology("BP", 5).conjectural

    @pytest.mark.parametrize("n", range(2, 12))
    def test_bp_total_rank(self, n):
        total = sum(expected_homology("BP", n).betti.values())
        assert total == 1 + 2 + (3 if n % 4 == 3 else 1)

    @pytest.mark.parametrize("family, n", [("BP", 1), ("K", 3), ("BL", 0)])
    def test_unsupported(self, family, n):
        with pytest.raises(UnsupportedParameter):
            expected_homology(family, n)

    def test_reduced_view(self):
        assert expected_homology("BL", 7).as_result(reduced=True).describe() == "H~3=Z"


class TestRunCheck:
    def test_bl7(self):
        r = run_check("BL", 7, reduced=True)
        assert r.verdict == "MATCH" and r.computed.describe() == "H~3=Z"

    def test_tapstar5(self):
        r = run_check("TAPSTAR", 5, reduced=True)
        assert r.verdict == "MATCH" and r.computed.betti_numbers() == {4: 1}

    def test_bp4(self):
        r = run_check("BP", 4)
        assert r.verdict == "MATCH" and r.computed.describe() == "H0=Z H2=Z H3=Z^2"

    def test_conjectural_mismatch_is_labelled(self):
        r = run_check("TAP2", 3)
        assert r.conjectural
        assert r.note == ("conjectural table" if r.ok else "counterexample candidate")

    def test_skipped_on_budget(self, monkeypatch):
        monkeypatch.setenv("MPX_BUDGET", "3")
        r = run_check("BP", 5)
        assert r.verdict == "SKIPPED" and r.computed is None and "exceeded" in r.note


class TestMatchingIso:
    def test_tt3(self):
        assert verify_matching_iso(gen_family("TT", 3)).verdict == "MATCH"

    def test_i4(self):
        assert verify_matching_iso(gen_family("I", 4)).verdict == "MATCH"

    def test_bp3_rejected(self):
        with pytest.raises(NotAcyclic):
            verify_matching_iso(gen_family("BP", 3))

    def test_bijection_recorded(self):
        r = verify_matching_iso(make_digraph(3, [(0, 1), (1, 2)]))
        assert len(r.details["bijection"]) == 2


class TestOmega:
    def test_n2(self):
        r = verify_omega(2)
        assert r.ok and r.details["mu"] == -1 and r.details["connectivity"] == -1

    def test_n3(self):
        r = verify_omega(3)
        assert r.ok and r.details["mu"] == -1

    def test_n4(self):
        r = verify_omega(4)
        assert r.ok and r.details["mu"] == 0
        assert r.details["sharpness_holds"] and r.details["next_group"] == "Z^7"

    def test_cap(self):
        with pytest.raises(UnsupportedParameter):
            verify_omega(6)
        with pytest.raises(UnsupportedParameter):
            verify_omega(1)


class TestSuites:
    def test_bp_suite(self):
        reports = run_suite("bp", 6)
        assert [(r.n, r.verdict) for r in reports] == [(n, "MATCH") for n in range(2, 7)]

    def test_parallel_matches_serial(self):
        serial = run_suite("w", 6)
        parallel = run_suite("w", 6, jobs=2)
        assert [r.to_json()["computed"] for r in serial] == [r.to_json()["computed"] for r in parallel]

    def test_matching_suite(self):
        reports = run_suite("matching", 4)
        assert all(r.ok for r in reports)
        assert {r.family for r in reports} == {"MATCHING_I", "MATCHING_TT"}

    def test_unknown(self):
        with pytest.raises(UnsupportedParameter):
            run_suite("nope", 3)

    def test_csv(self):
        text = reports_to_csv(run_suite("bl", 3))
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["family", "n", "verdict", "homology", "seconds"]
        assert rows[1][:4] == ["BL", "1", "MATCH", "H0=Z^2"]
        assert len(rows) == 4

    def test_json(self):
        r = run_check("BL", 2)
        j = r.to_json()
        assert j["verdict"] == "MATCH" and j["expected"] == j["computed"]
        assert set(j) >= {"family", "n", "verdict", "conjectural", "seconds"}
