"""Reliability polynomials: evaluation routes and diagonal coefficients."""

from fractions import Fraction

import pytest

from conftest import (
    ADJACENT_PAIRS,
    ADJACENT_PAIRS_N,
    BRIDGE_N,
    BRIDGE_PATHS,
    DISJOINT_PAIRS,
    OVERLAP_PAIRS,
    PAIRS_N,
    family,
    k_of_n_table,
)

from structfn import (
    CapacityError,
    MultilinearForm,
    diagonal_coefficients,
    diagonal_from_paths,
    evaluate_inclusion_exclusion,
    evaluate_reliability,
    mobius_transform,
    simple_form_from_paths,
    table_from_paths,
)

HALF = Fraction(1, 2)


def bridge_form():
    return mobius_transform(table_from_paths(family(BRIDGE_PATHS, BRIDGE_N)))


class TestEvaluateReliability:
    def test_bridge_at_one_half(self):
        p = (HALF,) * 5
        assert evaluate_reliability(bridge_form(), p) == HALF

    def test_series_and_parallel(self):
        series = mobius_transform(k_of_n_table(2, 2))
        parallel = mobius_transform(k_of_n_table(1, 2))
        p = (Fraction(1, 3), Fraction(1, 4))
        assert evaluate_reliability(series, p) == Fraction(1, 12)
        assert evaluate_reliability(parallel, p) == Fraction(1, 2)

    def test_float_inputs(self):
        # Pivotal decomposition on component 3, worked by hand:
        # 0.7 * (0.98 * 0.9925) + 0.3 * (1 - 0.145 * 0.32) = 0.966935.
        p = (0.9, 0.8, 0.7, 0.95, 0.85)
        value = evaluate_reliability(bridge_form(), p)
        assert value == pytest.approx(0.966935, abs=1e-12)

    def test_vertices_reproduce_truth_table(self):
        table = table_from_paths(family(OVERLAP_PAIRS, PAIRS_N))
        form = mobius_transform(table)
        for mask in range(1 << PAIRS_N):
            p = tuple(Fraction((mask >> i) & 1) for i in range(PAIRS_N))
            assert evaluate_reliability(form, p) == table.phi(mask)

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError, match="expected 5"):
            evaluate_reliability(bridge_form(), (HALF,) * 4)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match=r"p\[2\]"):
            evaluate_reliability(bridge_form(), (HALF, Fraction(3, 2), HALF, HALF, HALF))


class TestInclusionExclusionRoute:
    def test_agrees_with_form_route_on_bridge(self):
        paths = family(BRIDGE_PATHS, BRIDGE_N)
        form = bridge_form()
        for p in (
            (HALF,) * 5,
            (Fraction(1, 3), Fraction(2, 3), Fraction(1, 5), Fraction(4, 5), Fraction(1, 7)),
        ):
            assert evaluate_inclusion_exclusion(paths, p) == evaluate_reliability(form, p)

    def test_disjoint_pairs_closed_form(self):
        paths = family(DISJOINT_PAIRS, PAIRS_N)
        p = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 5))
        # 1 - (1 - p1 p2)(1 - p3 p4)
        expected = 1 - (1 - Fraction(1, 6)) * (1 - Fraction(1, 20))
        assert evaluate_inclusion_exclusion(paths, p) == expected

    def test_fallback_route_above_max_r(self):
        paths = family(BRIDGE_PATHS, BRIDGE_N)
        p = (HALF,) * 5
        direct = evaluate_inclusion_exclusion(paths, p)
        assert evaluate_inclusion_exclusion(paths, p, max_r=2) == direct

    def test_capacity_error_when_both_caps_exceeded(self):
        with pytest.raises(CapacityError):
            evaluate_inclusion_exclusion(
                family(BRIDGE_PATHS, BRIDGE_N), (HALF,) * 5, max_r=2, max_n=2
            )


class TestDiagonalCoefficients:
    def test_bridge(self):
        assert diagonal_coefficients(bridge_form()).d == (0, 2, 2, -5, 2)

    def test_adjacent_pairs(self):
        form = mobius_transform(table_from_paths(family(ADJACENT_PAIRS, ADJACENT_PAIRS_N)))
        assert diagonal_coefficients(form).d == (0, 3, -2, 0)

    def test_disjoint_pairs(self):
        form = mobius_transform(table_from_paths(family(DISJOINT_PAIRS, PAIRS_N)))
        assert diagonal_coefficients(form).d == (0, 2, 0, -1)

    def test_two_of_two(self):
        form = mobius_transform(k_of_n_table(2, 2))
        assert diagonal_coefficients(form).d == (0, 1)

    def test_one_of_three(self):
        form = mobius_transform(k_of_n_table(1, 3))
        assert diagonal_coefficients(form).d == (3, -3, 1)

    def test_rejects_constant_term(self):
        with pytest.raises(ValueError, match="constant term"):
            diagonal_coefficients(MultilinearForm(n=2, coeffs={0: 1, 0b11: 1}))

    def test_total_is_one_for_semicoherent(self):
        for paths, n in (
            (BRIDGE_PATHS, BRIDGE_N),
            (ADJACENT_PAIRS, ADJACENT_PAIRS_N),
            (OVERLAP_PAIRS, PAIRS_N),
        ):
            diag = diagonal_coefficients(mobius_transform(table_from_paths(family(paths, n))))
            assert sum(diag.d) == 1

    def test_evaluate_matches_common_probability(self):
        diag = diagonal_coefficients(bridge_form())
        for p in (Fraction(1, 3), Fraction(7, 8)):
            assert diag.evaluate(p) == evaluate_reliability(bridge_form(), (p,) * 5)


class TestDiagonalFromPaths:
    def test_bridge_direct(self):
        assert diagonal_from_paths(family(BRIDGE_PATHS, BRIDGE_N)).d == (0, 2, 2, -5, 2)

    def test_matches_form_route(self):
        for paths, n in (
            (ADJACENT_PAIRS, ADJACENT_PAIRS_N),
            (DISJOINT_PAIRS, PAIRS_N),
            (OVERLAP_PAIRS, PAIRS_N),
        ):
            fam = family(paths, n)
            via_form = diagonal_coefficients(simple_form_from_paths(fam))
            assert diagonal_from_paths(fam) == via_form

    def test_fallback_route_above_max_r(self):
        fam = family(BRIDGE_PATHS, BRIDGE_N)
        assert diagonal_from_paths(fam, max_r=2) == diagonal_from_paths(fam)

    def test_capacity_error_when_both_caps_exceeded(self):
        with pytest.raises(CapacityError):
            diagonal_from_paths(family(BRIDGE_PATHS, BRIDGE_N), max_r=2, max_n=2)


class TestMonotonicity:
    def test_bridge_diagonal_nondecreasing_on_grid(self):
        diag = diagonal_coefficients(bridge_form())
        values = [diag.evaluate(Fraction(k, 64)) for k in range(65)]
        assert values[0] == 0
        assert values[-1] == 1
        for lo, hi in zip(values, values[1:]):
            assert lo <= hi
