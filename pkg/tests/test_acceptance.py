"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria 3, 4 and 5 compare against published reference cells that are
internally inconsistent with the method's own defining credibility integral
(see reference_data.SPREAD_CELLS_INCONSISTENT and the module docstring
there). The engine follows the integral, which criteria 7 to 9 enforce, so
those three tests fail on exactly the inconsistent entries. They are kept
verbatim rather than weakened; the failure messages enumerate the deviating
cells.
"""
import time
from contextlib import contextmanager

import numpy as np

from credtopsis import (
    TriangularFuzzyNumber as TFN,
    build_decision_matrix,
    credibility_at_least,
    credibility_at_most,
    evaluate,
    expected_value,
    expected_value_numeric,
    mean_ideals,
    mean_matrix,
    normalize,
    run_sensitivity,
    separations,
    std_dev,
    std_dev_ideals,
    std_dev_matrix,
    variance,
    variance_numeric,
    waste_disposal_scenarios,
)
from bruteforce import straight_line_evaluation
from conftest import make_problem, random_problem
import reference_data as ref


@contextmanager
def criterion(number, label):
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number} ({label}): FAIL")
        raise
    print(f"[acceptance] criterion {number} ({label}): PASS")


def collect_matrix_mismatches(got, expected, tolerance, what):
    """got: callable (alt, col_index) -> value; expected: dict alt -> row."""
    mismatches = []
    for alt in ref.ALTERNATIVES:
        for j, col in enumerate(ref.CRITERIA):
            value = got(alt, j)
            want = expected[alt][j]
            if isinstance(want, tuple):
                deviation = max(abs(v - w) for v, w in zip(value, want))
            else:
                deviation = abs(value - want)
            if deviation > tolerance:
                mismatches.append(f"{what}({alt},{col}): got {value}, reference {want}")
    return mismatches


def test_criterion_1_aggregated_matrix(case_study):
    with criterion(1, "aggregated decision matrix, 1e-3, <10ms"):
        problem, scale = case_study
        start = time.perf_counter()
        matrix = build_decision_matrix(problem, scale)
        elapsed = time.perf_counter() - start
        mismatches = collect_matrix_mismatches(
            lambda alt, j: matrix.cell(alt, ref.CRITERIA[j]).as_tuple(),
            ref.AGGREGATED,
            1e-3,
            "aggregated",
        )
        assert not mismatches, "\n".join(mismatches)
        assert elapsed < 0.010, f"matrix build took {elapsed * 1e3:.2f} ms"


def test_criterion_2_normalized_matrix(case_study):
    with criterion(2, "normalized matrix, both branches, 1e-3"):
        problem, scale = case_study
        matrix = normalize(build_decision_matrix(problem, scale), problem.criteria)
        mismatches = collect_matrix_mismatches(
            lambda alt, j: matrix.cell(alt, ref.CRITERIA[j]).as_tuple(),
            ref.NORMALIZED,
            1e-3,
            "normalized",
        )
        assert not mismatches, "\n".join(mismatches)


def test_criterion_3_mean_and_spread_matrices(case_study):
    with criterion(3, "credibilistic mean and std-dev matrices, 1.5e-3"):
        problem, scale = case_study
        normalized = normalize(build_decision_matrix(problem, scale), problem.criteria)
        means = mean_matrix(normalized)
        spreads = std_dev_matrix(normalized)
        mismatches = collect_matrix_mismatches(
            lambda alt, j: means.cell(alt, ref.CRITERIA[j]), ref.MEANS, 1.5e-3, "mean"
        )
        mismatches += collect_matrix_mismatches(
            lambda alt, j: spreads.cell(alt, ref.CRITERIA[j]),
            ref.SPREADS,
            1.5e-3,
            "std",
        )
        assert not mismatches, (
            f"{len(mismatches)} of 80 entries deviate:\n" + "\n".join(mismatches)
        )


def test_criterion_4_ideals_and_separations(case_study):
    with criterion(4, "ideal vectors and separation measures, 1.5e-3"):
        problem, scale = case_study
        normalized = normalize(build_decision_matrix(problem, scale), problem.criteria)
        means = mean_matrix(normalized)
        spreads = std_dev_matrix(normalized)
        ideals_e = mean_ideals(means)
        ideals_s = std_dev_ideals(spreads)
        mismatches = []
        for j, col in enumerate(ref.CRITERIA):
            for name, got, want in (
                ("mean_pis", ideals_e.pis[j], ref.MEAN_PIS[j]),
                ("mean_nis", ideals_e.nis[j], ref.MEAN_NIS[j]),
                ("std_pis", ideals_s.pis[j], ref.SPREAD_PIS[j]),
                ("std_nis", ideals_s.nis[j], ref.SPREAD_NIS[j]),
            ):
                if abs(got - want) > 1.5e-3:
                    mismatches.append(f"{name}[{col}]: got {got:.4f}, reference {want}")
        d_e = separations(means, ideals_e, ref.CASE_WEIGHTS)
        d_s = separations(spreads, ideals_s, ref.CASE_WEIGHTS)
        for i, alt in enumerate(ref.ALTERNATIVES):
            for name, got, want in (
                ("d_mean_plus", d_e[0][i], ref.D_MEAN_PLUS[i]),
                ("d_mean_minus", d_e[1][i], ref.D_MEAN_MINUS[i]),
                ("d_std_plus", d_s[0][i], ref.D_SPREAD_PLUS[i]),
                ("d_std_minus", d_s[1][i], ref.D_SPREAD_MINUS[i]),
            ):
                if abs(got - want) > 1.5e-3:
                    mismatches.append(f"{name}[{alt}]: got {got:.4f}, reference {want}")
        assert not mismatches, (
            f"{len(mismatches)} of 56 entries deviate:\n" + "\n".join(mismatches)
        )


def test_criterion_5_closeness_and_ranking(case_result):
    with criterion(5, "closeness coefficients 2e-3 and exact ranking"):
        assert case_result.ranking() == ("A3", "A2", "A1", "A4")
        mismatches = []
        for i, alt in enumerate(ref.ALTERNATIVES):
            for name, got, want in (
                ("cc_mean", case_result.cc_mean[i], ref.CC_MEAN[i]),
                ("cc_std", case_result.cc_std[i], ref.CC_SPREAD[i]),
                ("cc_final", case_result.cc_final[i], ref.CC_FINAL[i]),
            ):
                if abs(got - want) > 2e-3:
                    mismatches.append(f"{name}[{alt}]: got {got:.4f}, reference {want}")
        assert not mismatches, (
            f"{len(mismatches)} of 12 coefficients deviate:\n" + "\n".join(mismatches)
        )


def test_criterion_6_scenario_rankings(case_study):
    with criterion(6, "all 24 scenario rank cells exact"):
        problem, scale = case_study
        results = run_sensitivity(problem, waste_disposal_scenarios(), scale)
        for name, result in results:
            assert list(result.ranks) == ref.SCENARIO_RANKS[name], (
                f"{name}: got {result.ranks}, reference {ref.SCENARIO_RANKS[name]}"
            )


def test_criterion_7_oracle_equivalence():
    with criterion(7, "closed forms match quadrature oracles, <5s"):
        rng = np.random.default_rng(20240817)
        start = time.perf_counter()
        for _ in range(1000):
            x = TFN(*sorted(rng.uniform(0.0, 10.0, 3)))
            assert abs(variance(x) - variance_numeric(x)) <= 1e-6
            assert abs(expected_value(x) - expected_value_numeric(x)) <= 1e-8
        for _ in range(1000):
            center = rng.uniform(0.0, 10.0)
            width = rng.uniform(0.0, 5.0)
            sym = TFN(center - width, center, center + width)
            spread = sym.mode - sym.lower
            assert abs(variance(sym) - spread * spread / 6.0) <= 1e-12
            x = TFN(*sorted(rng.uniform(0.0, 10.0, 3)))
            mirrored = TFN(-x.upper, -x.mode, -x.lower)
            assert abs(variance(x) - variance(mirrored)) <= 1e-12
        elapsed = time.perf_counter() - start
        assert elapsed < 5.0, f"oracle comparison took {elapsed:.2f} s"


def test_criterion_8_invariance_suite(case_study):
    with criterion(8, "weight scaling, permutations, credibility duality"):
        problem, scale = case_study
        base = evaluate(problem, scale=scale)
        for k in (0.1, 3.0, 100.0):
            scaled = evaluate(
                problem, scale=scale, weights=[k * w for w in ref.CASE_WEIGHTS]
            )
            assert np.max(np.abs(scaled.cc_mean - base.cc_mean)) <= 1e-12
            assert np.max(np.abs(scaled.cc_std - base.cc_std)) <= 1e-12
            assert np.max(np.abs(scaled.cc_final - base.cc_final)) <= 1e-12
            assert scaled.ranks == base.ranks

        rng = np.random.default_rng(13)
        for _ in range(5):
            cells, kinds, weights = random_problem(rng, p=4, q=10)
            reference = evaluate(make_problem(cells, kinds, weights))
            row_perm = list(rng.permutation(4))
            permuted = evaluate(
                make_problem([cells[i] for i in row_perm], kinds, weights)
            )
            for i, source in enumerate(row_perm):
                assert abs(permuted.cc_final[i] - reference.cc_final[source]) <= 1e-12
                assert permuted.ranks[i] == reference.ranks[source]
            col_perm = list(rng.permutation(10))
            shuffled = evaluate(
                make_problem(
                    [[row[j] for j in col_perm] for row in cells],
                    [kinds[j] for j in col_perm],
                    [weights[j] for j in col_perm],
                )
            )
            assert shuffled.ranks == reference.ranks
            assert np.max(np.abs(shuffled.cc_final - reference.cc_final)) <= 1e-12

        for _ in range(1000):
            x = TFN(*sorted(rng.uniform(0.0, 10.0, 3)))
            if x.lower == x.upper:
                continue
            r = rng.uniform(np.nextafter(x.lower, x.upper), x.upper)
            total = credibility_at_least(x, r) + credibility_at_most(x, r)
            assert abs(total - 1.0) <= 1e-12


def test_criterion_9_straight_line_equivalence():
    with criterion(9, "independent pipeline recomputation, 1e-10"):
        rng = np.random.default_rng(99)
        for _ in range(100):
            cells, kinds, weights = random_problem(rng, p=3, q=3)
            result = evaluate(make_problem(cells, kinds, weights))
            expected = straight_line_evaluation(cells, kinds, weights)
            for got, want in (
                (result.d_mean_plus, expected["d_mean_plus"]),
                (result.d_mean_minus, expected["d_mean_minus"]),
                (result.d_std_plus, expected["d_std_plus"]),
                (result.d_std_minus, expected["d_std_minus"]),
                (result.cc_mean, expected["cc_mean"]),
                (result.cc_std, expected["cc_std"]),
                (result.cc_final, expected["cc_final"]),
            ):
                assert np.max(np.abs(np.asarray(got) - np.asarray(want))) <= 1e-10
            assert list(result.ranks) == expected["ranks"]
