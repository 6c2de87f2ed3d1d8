import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jackseries.combinatorics import enumerate_partitions
from jackseries.hypergeo import (
    DivergentSeriesError,
    PoleError,
    SeriesParams,
    SeriesResult,
    Verdict,
    convergent_at_one,
    empirically_bounded,
    growth_exponent,
    hyper_at_one,
    hyper_eval,
    partial_sums_at_one,
    series_coefficient,
    series_sum,
)
from jackseries.jack import omega_eval

F = Fraction


def test_criterion_examples():
    assert convergent_at_one(SeriesParams((1, 1), (3,), 1, 2))
    assert not convergent_at_one(SeriesParams((2, 2), (3,), 2, 2))
    for r in (1, 2, 3):
        assert convergent_at_one(SeriesParams((0, 5), (3,), r, 2))


def test_other_shapes():
    assert convergent_at_one(SeriesParams((7,), (2,), 2, 2))
    assert convergent_at_one(SeriesParams((), (), 3, 1))
    assert not convergent_at_one(SeriesParams((1, 1, 1), (9,), 2, 2))
    assert convergent_at_one(SeriesParams((1, 1, -2), (9,), 2, 2))


def test_boundary_is_divergent():
    # excess exactly zero: 1 + 1 - 3 + (2/2)(2 - 1) = 0
    assert not convergent_at_one(SeriesParams((1, 1), (3,), 2, 2))


def test_row_truncation_still_uses_the_criterion():
    # a = 2, r = 3: numerator 1 removes every partition with a second row,
    # but the one-row terms still behave like n^(excess - 1)
    p = SeriesParams((1, 1), (4,), 3, 2)
    assert p.truncated and not p.terminating
    assert not convergent_at_one(p)
    assert convergent_at_one(SeriesParams((1, 1), (5,), 3, 2))


def test_pole_validation():
    with pytest.raises(PoleError):
        SeriesParams((1,), (-1,), 1, 2)
    with pytest.raises(PoleError):
        SeriesParams((3,), (1,), 2, 2)  # 1 - (a/2)*1 = 0 in row 2
    # numerator cuts the first row at 1 before the denominator pole at 2
    SeriesParams((-1,), (-2,), 1, 2)
    # second row removed by numerator 1 before denominator 1 reaches row 2
    SeriesParams((1, 5), (1,), 2, 2)


def test_series_result_invariants():
    with pytest.raises(ValueError):
        SeriesResult(1.0, -1, 0.0, Verdict.CONVERGED)
    with pytest.raises(ValueError):
        SeriesResult(1.0, 0, -1e-3, Verdict.CONVERGED)


def test_value_at_origin():
    p = SeriesParams((F(3, 2), 2), (F(7, 3),), 3, F(1, 2))
    assert hyper_eval(p, [0, 0, 0], 10).value == 1.0


def test_gauss_log_identity():
    p = SeriesParams((1, 1), (2,), 1, 2)
    t = 0.5
    res = hyper_eval(p, [t], 60)
    assert res.value == pytest.approx(-math.log(1 - t * t) / (t * t), abs=1e-10)
    assert res.truncation_degree == 60


def test_rejects_bad_points():
    p = SeriesParams((1, 1), (2,), 2, 2)
    with pytest.raises(ValueError):
        hyper_eval(p, [0.5, 1.0], 5)
    with pytest.raises(ValueError):
        hyper_eval(p, [-0.1, 0.2], 5)
    with pytest.raises(ValueError):
        hyper_eval(p, [0.1], 5)


def _exact_shell(p, x, n, keep=lambda m: True):
    return sum(float(series_coefficient(p, m) * omega_eval(m, p.a, x)) for m in enumerate_partitions(n, p.r) if keep(m))


@pytest.mark.parametrize("params", [
    SeriesParams((F(3, 2), F(7, 3)), (F(9, 2),), 3, F(1, 2)),
    SeriesParams((F(1, 3),), (), 2, 4),
    SeriesParams((2, F(5, 2), F(-1, 3)), (F(7, 2), F(11, 3)), 3, 2),
])
def test_floating_terms_match_exact_route(params):
    x = [F(1, 3), F(-1, 5), F(1, 2)][: params.r]
    res = series_sum(params, [float(v) for v in x], 6)
    for n in range(7):
        assert res.shell_sums[n] == pytest.approx(_exact_shell(params, x, n), rel=1e-12, abs=1e-15)


def test_truncating_numerator_restricts_index_set():
    # (a/2)(j-1) with j = 2 kills all partitions with m_2 > 0
    p = SeriesParams((F(1, 2), F(2, 3)), (F(5, 2),), 3, 1)
    q = SeriesParams((F(2, 3),), (F(5, 2),), 3, 1)  # same series without the truncating factor
    x = [F(1, 2), F(1, 3), F(1, 4)]
    res = series_sum(p, [float(v) for v in x], 8)
    assert p.row_bounds() == [None, 0, 0]
    for n in range(9):
        manual = sum(float(series_coefficient(p, (n,)) * omega_eval((n,) if n else (), 1, x)) for _ in [0])
        assert res.shell_sums[n] == pytest.approx(manual, rel=1e-12, abs=1e-15)
        assert res.shell_sums[n] == pytest.approx(
            _exact_shell(p, x, n, keep=lambda m: len(m) <= 1), rel=1e-12, abs=1e-15)
    assert series_coefficient(p, (2, 1)) == 0
    assert series_coefficient(q, (2, 1)) != 0


def test_at_one_zero_parameter():
    res = hyper_at_one(SeriesParams((0, 5), (3,), 3, 2), 50, 1e-12)
    assert res.value == 1.0
    assert res.verdict is Verdict.TRUNCATED
    assert res.truncation_degree == 1


def test_at_one_gauss_sum():
    # 2F1(1, 1; 5; 1) = Gamma(5) Gamma(3) / Gamma(4)^2 = 4/3
    res = hyper_at_one(SeriesParams((1, 1), (5,), 1, 2), 400, 1e-14)
    assert res.verdict is Verdict.CONVERGED
    assert res.value == pytest.approx(4 / 3, abs=1e-6)


def test_at_one_refuses_divergent():
    with pytest.raises(DivergentSeriesError):
        hyper_at_one(SeriesParams((2, 2), (3,), 2, 2), 50, 1e-10)


def test_at_one_stops_early():
    res = hyper_at_one(SeriesParams((F(1, 2), 1), (F(9, 2), 6), 2, 2), 200, 1e-8)
    assert res.tol_met and res.truncation_degree < 200
    assert res.last_shell_magnitude < 1e-8


def test_shells_decrease_eventually():
    p = SeriesParams((F(3, 2), F(3, 2)), (6,), 2, 2)
    res = hyper_at_one(p, 80, 0.0)
    tail = [float(s) for s in res.shell_sums[20:]]
    assert all(b < a for a, b in zip(tail, tail[1:]))


@settings(max_examples=15, deadline=None)
@given(st.lists(st.fractions(0, 3, max_denominator=6), min_size=2, max_size=2),
       st.fractions(Fraction(1, 2), 5, max_denominator=6), st.integers(1, 3), st.sampled_from([1, 2, 4]))
def test_partial_sums_monotone_for_nonnegative_parameters(alpha, beta, r, a):
    # every row-shifted parameter c - (a/2)(j-1) stays positive, so all terms are >= 0
    shift = Fraction(a, 2) * (r - 1)
    p = SeriesParams([c + shift for c in alpha], (beta + shift,), r, a)
    sums = partial_sums_at_one(p, 25)
    assert all(b >= a_ for a_, b in zip(sums, sums[1:]))


def test_logarithmic_divergence_witness():
    # excess 0: partial sums grow like log N, so doubling N adds a constant
    p = SeriesParams((1, 1), (3,), 2, 2)
    s = partial_sums_at_one(p, 160)
    inc = [s[2 * n] - s[n] for n in (20, 40, 80)]
    assert inc[1] / inc[0] == pytest.approx(1.0, abs=0.1)
    assert inc[2] / inc[1] == pytest.approx(1.0, abs=0.05)
    assert inc[2] > 0.1


def test_growth_exponent_tracks_excess():
    for excess, beta in ((-1, 4), (F(-1, 2), F(7, 2)), (F(1, 2), F(5, 2))):
        p = SeriesParams((1, 1), (beta,), 2, 2)
        assert p.excess == excess
        assert growth_exponent(p, 100) == pytest.approx(float(excess) - 1, abs=0.12)
    assert growth_exponent(SeriesParams((0, 2), (3,), 2, 2)) == -math.inf
    assert empirically_bounded(SeriesParams((0, 2), (3,), 2, 2))


def test_extended_precision_agrees():
    p = SeriesParams((F(1, 3), F(2, 3)), (F(7, 2),), 2, 1)
    lo = hyper_eval(p, [0.6, 0.3], 30)
    hi = hyper_eval(p, [0.6, 0.3], 30, precision="extended")
    assert hasattr(hi.value, "_mpf_")
    assert len(hi.to_json()["value"]) > 30
    assert float(hi.value) == pytest.approx(lo.value, rel=1e-13)
    at1 = hyper_at_one(p, 60, 1e-9, precision="extended")
    assert float(at1.value) == pytest.approx(float(hyper_at_one(p, 60, 1e-9).value), rel=1e-13)


def test_deterministic():
    p = SeriesParams((F(1, 3), F(2, 3)), (F(7, 2),), 3, 2)
    a = hyper_eval(p, [0.6, 0.3, 0.1], 20)
    b = hyper_eval(p, [0.6, 0.3, 0.1], 20)
    assert a.value == b.value and a.shell_sums == b.shell_sums


def test_to_json_fields():
    out = hyper_eval(SeriesParams((1,), (), 1, 2), [0.5], 10).to_json()
    assert set(out) >= {"value", "truncation_degree", "last_shell_magnitude", "verdict", "precision"}
