"""Closed forms against frozen golden data, harness behavior on injected
failures, scanners, and the exact kernel-rank estimator."""

import pytest

import reduxwords as rw
from reduxwords.complexity import ComplexityProfile
from reduxwords.errors import ConfigurationError, SmallCaseException

from conftest import (
    ALL_CLAIM_IDS,
    RHO_ABRED_F_22,
    RHO_F_15,
    RHO_RED_F_23,
    RHO_RED_T_23,
    RHO_T_15,
)


class TestClosedForms:
    def test_tm_factor_matches_golden(self):
        assert [rw.tm_factor_count(n) for n in range(1, 16)] == RHO_T_15

    def test_tm_reduced_matches_golden(self):
        assert [rw.tm_reduced_factor_count(n) for n in range(1, 24)] == RHO_RED_T_23

    def test_pf_factor_matches_golden(self):
        assert [rw.pf_factor_count(n) for n in range(1, 16)] == RHO_F_15
        assert rw.pf_factor_count(100) == 400

    def test_pf_reduced_matches_golden(self):
        assert [rw.pf_reduced_factor_count(n) for n in range(2, 24)] == RHO_RED_F_23[1:]

    def test_pf_reduced_abelian_matches_golden(self):
        assert [rw.pf_reduced_abelian_count(n) for n in range(2, 23)] == RHO_ABRED_F_22[1:]
        assert rw.pf_reduced_abelian_count(1000) == 3

    def test_declared_small_case_exceptions(self):
        for fn in (rw.pf_reduced_factor_count, rw.pf_reduced_abelian_count):
            with pytest.raises(SmallCaseException) as excinfo:
                fn(1)
            assert excinfo.value.n == 1
            assert excinfo.value.known_value == 2

    def test_rejects_nonpositive(self):
        for fn in (
            rw.tm_factor_count,
            rw.tm_reduced_factor_count,
            rw.pf_factor_count,
            rw.pf_reduced_factor_count,
            rw.pf_reduced_abelian_count,
        ):
            with pytest.raises(ValueError):
                fn(0)

    def test_large_values_well_founded(self):
        # deep recursion descends by halving, so 10**9 must be instant
        assert rw.tm_factor_count(10**9) > 0
        assert rw.tm_reduced_factor_count(10**9) in range(2, 100)


class TestClaimRegistry:
    def test_registry_is_exactly_the_published_ids(self):
        assert set(rw.CLAIMS) == ALL_CLAIM_IDS

    def test_kinds(self):
        assert rw.CLAIMS["tm_red"].kind == "theorem"
        assert rw.CLAIMS["mu_alternation"].kind == "lemma"
        assert rw.CLAIMS["conj_odd_halving"].kind == "conjecture"
        assert rw.CLAIMS["conj_mod4_gap"].kind == "conjecture"

    def test_unknown_claim(self):
        with pytest.raises(ConfigurationError):
            rw.verify("no_such_claim")

    def test_exhaustive_claim_clamps_range(self):
        # a blanket n_max (e.g. from `verify all`) must not blow up the
        # exponential enumeration; the report shows the range actually run
        report = rw.verify("mu_alternation", 48)
        assert report.ok
        assert report.n_hi == 14

    @pytest.mark.parametrize("claim_id", sorted(ALL_CLAIM_IDS))
    def test_every_claim_passes_at_small_range(self, claim_id):
        n_max = 10 if claim_id == "mu_alternation" else 96
        report = rw.verify(claim_id, n_max)
        assert report.ok, report
        assert report.counterexamples == ()

    def test_declared_exceptions_reported(self):
        for claim_id in ("pf_red", "abred_f", "f_1mod8"):
            report = rw.verify(claim_id, 64)
            assert report.status == "exception-at-small-n"
            assert report.declared_exceptions == {1: 2}


def fake_profile(kind, values):
    return ComplexityProfile(kind=kind, sequence="fake", values=values, certified_window=0)


class TestHarnessFailurePaths:
    def test_wrong_engine_values_fail(self):
        values = {n: rw.tm_reduced_factor_count(n) for n in range(1, 33)}
        values[20] += 2
        report = rw.check_tm_reduced_recursion(32, profile=fake_profile("reduced_factor", values))
        assert report.status == "fail"
        assert not report.ok
        assert report.counterexamples == ((20, rw.tm_reduced_factor_count(20), values[20]),)

    def test_exception_value_is_still_checked(self):
        # the declared n=1 value must match the engine or the claim fails
        values = {n: (2 if n == 1 else rw.pf_reduced_factor_count(n)) for n in range(1, 33)}
        good = rw.check_pf_reduced_closed_form(32, profile=fake_profile("reduced_factor", values))
        assert good.status == "exception-at-small-n"
        values[1] = 4
        bad = rw.check_pf_reduced_closed_form(32, profile=fake_profile("reduced_factor", values))
        assert bad.status == "fail"
        assert bad.counterexamples[0] == (1, 2, 4)


class TestStructuralLemmas:
    def test_mu_alternation_passes(self):
        report = rw.check_mu_alternation(10)
        assert report.status == "pass"
        assert report.details["words_checked"] == 2 * (2**10 - 1)

    def test_mu_alternation_cap(self):
        with pytest.raises(ConfigurationError):
            rw.check_mu_alternation(19)

    def test_extremes_identities(self):
        assert rw.check_extremes_halving(64).status == "pass"
        assert rw.check_extremes_mod4(64).status == "pass"
        combined = rw.check_extremes_recursions(64)
        assert combined.status == "pass"
        assert combined.details["halving_status"] == "pass"
        assert combined.details["mod4_status"] == "pass"

    def test_extremes_identities_shared_table(self, tm_handle):
        table = rw.alternation_extremes(tm_handle, 4 * 64 + 2)
        assert rw.check_extremes_halving(64, table=table).status == "pass"
        assert rw.check_extremes_mod4(64, table=table).status == "pass"

    def test_short_table_rejected(self, tm_handle):
        table = rw.alternation_extremes(tm_handle, 16)
        with pytest.raises(ConfigurationError):
            rw.check_extremes_halving(64, table=table)

    def test_bridge(self):
        report = rw.check_reduced_bridge(64)
        assert report.status == "pass"
        assert report.details["mode"] == "extremes-bridge"

    def test_skeleton_runs(self):
        report = rw.check_alternating_skeleton_runs(65)
        assert report.status == "pass"
        assert report.details["qualifying_windows"] > 0
        assert report.details["odd_start_lengths_missing_qualification"] == 0


class TestConjectureScanners:
    def test_odd_halving_scan(self):
        report = rw.scan_odd_halving(64)
        assert report.status == "pass"
        assert report.details["scanned"] == 65

    def test_mod4_gap_scan(self):
        report = rw.scan_mod4_gap(64)
        assert report.status == "pass"
        signs = report.details["sign_pattern"]
        assert len(signs) == 64
        assert set(signs) <= {"0", "+", "-"}
        total = report.details["zero"] + report.details["positive"] + report.details["negative"]
        assert total == 64

    def test_mod4_gap_known_small_case(self, tm_handle):
        # n=1: values at 6 and 4 differ by one, matching the tm predicate
        profile = rw.reduced_abelian_complexity(tm_handle, 6)
        gap = profile.values[6] - profile.values[4]
        assert abs(gap) == 1
        assert rw.thue_morse_at(2) != rw.thue_morse_at(4)

    def test_scanner_reports_fabricated_counterexample(self):
        values = {n: rw.reduced_abelian_complexity(rw.thue_morse(), 21).values[n] for n in range(1, 22)}
        values[21] += 1  # 21 = 2*10+1 now disagrees with values[11]
        report = rw.scan_odd_halving(10, profile=fake_profile("reduced_abelian", values))
        assert report.status == "fail"
        assert report.counterexamples[-1][0] == 10


class TestKernelRank:
    def test_constant_sequence(self):
        est = rw.kernel_rank([5] * 600, base=2, depth=3, terms=32)
        assert est.ranks == (1, 1, 1, 1)
        assert est.final_rank == 1
        assert est.stabilized

    def test_tm_itself_has_rank_two(self):
        values = [rw.thue_morse_at(n) for n in range(1, 2049)]
        est = rw.kernel_rank(values, base=2, depth=4, terms=64)
        assert est.ranks == (1, 2, 2, 2, 2)

    def test_linear_sequence(self):
        est = rw.kernel_rank(list(range(600)), base=2, depth=3, terms=32)
        assert est.ranks == (1, 2, 2, 2)

    def test_geometric_sequence_keeps_growing(self):
        # 2^n is not base-2 regular; each depth contributes a new ratio
        est = rw.kernel_rank([2**n for n in range(200)], base=2, depth=3, terms=16)
        assert est.ranks == (1, 2, 3, 4)
        assert not est.stabilized

    def test_reduced_profile_rank_stabilizes(self, tm_handle):
        profile = rw.reduced_factor_complexity(tm_handle, 2048)
        est = rw.profile_kernel_rank(profile, base=2, depth=5, terms=64)
        assert est.ranks[-1] == est.ranks[-2]
        assert all(a <= b for a, b in zip(est.ranks, est.ranks[1:]))

    def test_insufficient_length(self):
        with pytest.raises(ConfigurationError, match="2048"):
            rw.kernel_rank([1] * 2047, base=2, depth=5, terms=64)

    def test_parameter_validation(self):
        with pytest.raises(ConfigurationError):
            rw.kernel_rank([1, 2, 3], base=1)
        with pytest.raises(ConfigurationError):
            rw.kernel_rank([1, 2, 3], depth=-1)
        with pytest.raises(ConfigurationError):
            rw.kernel_rank([1, 2, 3], terms=0)

    def test_depth_zero(self):
        est = rw.kernel_rank([1, 2, 3, 4], base=2, depth=0, terms=4)
        assert est.ranks == (1,)
