import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sparsedigraph import (
    DegreeSequence,
    Digraph,
    MetricsReport,
    RandomStream,
    SdgParams,
    adjacency_matrix,
    compare,
    degree_cdf,
    fit_powerlaw_exponent,
    ks_statistic,
    msd_sorted,
    restrict_to_new_nodes,
    sdg,
    spectral_gap,
    spectrum,
    theoretical_exponents,
)

# ---------------------------------------------------------------------------
# Brute-force reference implementations.  Deliberately naive: evaluate the
# empirical CDFs at every integer up to the largest observed degree.


def ks_brute(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    top = int(max(a.max(initial=0), b.max(initial=0)))
    gaps = [
        abs((a <= k).mean() - (b <= k).mean()) for k in range(0, top + 1)
    ]
    return max(gaps)


def msd_brute(a, b):
    if len(a) != len(b):
        return None
    sa, sb = np.sort(a), np.sort(b)
    return float(((sa - sb) ** 2).mean())


def _seq(values, kind="in"):
    return DegreeSequence(np.asarray(values, dtype=np.int64), kind)


# -- worked examples ---------------------------------------------------------


def test_ks_worked_example():
    got = ks_statistic(_seq([0, 1, 2]), _seq([1, 1, 1]))
    assert abs(got - 1 / 3) <= 1e-12


def test_msd_worked_example():
    got = msd_sorted(_seq([0, 0, 3]), _seq([1, 1, 1]))
    assert abs(got - 2.0) <= 1e-12


def test_ks_matches_brute_force_on_random_pairs():
    rng = np.random.Generator(np.random.PCG64(2024))
    for _ in range(2000):
        a = rng.integers(0, 7, size=rng.integers(1, 13))
        b = rng.integers(0, 7, size=rng.integers(1, 13))
        got = ks_statistic(_seq(a), _seq(b))
        assert abs(got - ks_brute(a, b)) <= 1e-12


def test_msd_matches_brute_force_on_random_pairs():
    rng = np.random.Generator(np.random.PCG64(77))
    for _ in range(2000):
        a = rng.integers(0, 7, size=rng.integers(1, 13))
        b = rng.integers(0, 7, size=rng.integers(1, 13))
        got = msd_sorted(_seq(a), _seq(b))
        want = msd_brute(a, b)
        if want is None:
            assert got is None
        else:
            assert abs(got - want) <= 1e-12


# -- KS properties -----------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(
    a=st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=12),
    b=st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=12),
)
def test_ks_symmetric_and_bounded(a, b):
    x = ks_statistic(_seq(a), _seq(b))
    y = ks_statistic(_seq(b), _seq(a))
    assert x == y
    assert 0.0 <= x <= 1.0


def test_ks_zero_for_identical_distribution():
    # same multiset in different order and multiplicity scale
    assert ks_statistic(_seq([1, 2, 2]), _seq([2, 1, 2])) == 0.0
    assert ks_statistic(_seq([1, 2]), _seq([1, 1, 2, 2])) == 0.0


def test_ks_refuses_mixed_kinds():
    with pytest.raises(ValueError, match="cannot compare"):
        ks_statistic(_seq([1], "in"), _seq([1], "out"))
    with pytest.raises(ValueError, match="cannot compare"):
        msd_sorted(_seq([1], "in"), _seq([1], "out"))


def test_empty_sequences_rejected():
    with pytest.raises(ValueError):
        ks_statistic(_seq([]), _seq([1]))
    with pytest.raises(ValueError):
        msd_sorted(_seq([]), _seq([]))


# -- degree CDF --------------------------------------------------------------


def test_degree_cdf_steps():
    cdf = degree_cdf(_seq([0, 0, 2, 5]))
    assert cdf.support.tolist() == [0, 2, 5]
    assert cdf.cumulative.tolist() == [0.5, 0.75, 1.0]
    assert cdf.at(-1) == 0.0
    assert cdf.at(0) == 0.5
    assert cdf.at(1) == 0.5
    assert cdf.at(4) == 0.75
    assert cdf.at(99) == 1.0


def test_degree_cdf_last_value_is_one():
    rng = np.random.Generator(np.random.PCG64(5))
    for _ in range(50):
        cdf = degree_cdf(_seq(rng.integers(0, 50, size=30)))
        assert cdf.cumulative[-1] == pytest.approx(1.0, abs=0)


# -- restriction and compare -------------------------------------------------


def test_restrict_listed_order_and_validation():
    g = Digraph(5, [(0, 1), (2, 1), (3, 1), (3, 4)])
    s = restrict_to_new_nodes(g, [3, 0], "out")
    assert s.values.tolist() == [2, 1]
    assert s.kind == "out"
    with pytest.raises(ValueError):
        restrict_to_new_nodes(g, [0, 0], "out")
    with pytest.raises(ValueError):
        restrict_to_new_nodes(g, [5], "out")


def test_compare_full_report():
    a = Digraph(3, [(0, 1), (1, 2)])
    b = Digraph(3, [(0, 2), (1, 2)])
    r = compare(a, b)
    assert r.ks_in == ks_statistic(_seq([0, 1, 1]), _seq([0, 0, 2]))
    assert r.msd_in == msd_brute([0, 1, 1], [0, 0, 2])
    assert r.spectral_summary is None


def test_compare_msd_unavailable_on_node_count_mismatch():
    a = Digraph(3, [(0, 1)])
    b = Digraph(4, [(0, 1)])
    r = compare(a, b)
    assert r.msd_in is None
    assert r.msd_out is None
    assert r.ks_in >= 0.0  # KS still defined
    d = r.to_dict()
    assert d["msd_in"] is None


def test_compare_spectral_opt_in():
    a = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    r = compare(a, a, spectral=True)
    assert r.spectral_summary == 0.0
    assert "spectral_summary" in r.to_dict()


def test_report_to_dict_flat_json():
    r = MetricsReport(ks_in=0.1, ks_out=0.2, msd_in=None, msd_out=3.5)
    assert r.to_dict() == {"ks_in": 0.1, "ks_out": 0.2, "msd_in": None,
                           "msd_out": 3.5}


# -- spectra -----------------------------------------------------------------


def test_adjacency_matrix_layout():
    g = Digraph(3, [(0, 2), (1, 0)])
    m = adjacency_matrix(g)
    want = np.zeros((3, 3))
    want[0, 2] = 1
    want[1, 0] = 1
    assert np.array_equal(m, want)


def test_spectrum_dag_is_all_zero():
    g = Digraph(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
    mags = spectrum(g)
    assert len(mags) == 6
    assert mags.max() < 1e-8


def test_spectrum_cycle_is_all_ones():
    n = 9
    g = Digraph(n, [(i, (i + 1) % n) for i in range(n)])
    mags = spectrum(g)
    assert np.all(np.abs(mags - 1.0) <= 1e-8)


def test_spectrum_sorted_descending_and_sized():
    g = sdg(40, 160, SdgParams(0.45, 0.2), RandomStream(12))
    mags = spectrum(g)
    assert len(mags) == 40
    assert np.all(np.diff(mags) <= 1e-12)


def test_spectrum_trace_zero():
    g = sdg(60, 240, SdgParams(0.3, 0.2), RandomStream(4))
    ev = np.linalg.eigvals(adjacency_matrix(g))
    assert abs(ev.sum()) < 1e-8 * g.node_count


def test_spectral_gap_zero_padding():
    # shorter list padded with zeros: |1-1|, |1-1|, |1-0| averaged
    got = spectral_gap(np.array([1.0, 1.0, 1.0]), np.array([1.0, 1.0]))
    assert got == pytest.approx(1 / 3)
    assert spectral_gap(np.array([2.0]), np.array([2.0])) == 0.0


def test_spectral_gap_sorts_inputs():
    a = np.array([0.5, 3.0, 1.0])
    b = np.array([3.0, 1.0, 0.5])
    assert spectral_gap(a, b) == 0.0


# -- power-law fitting -------------------------------------------------------


def power_law_sample(gamma, n, rng, k_max=10**6):
    """Inverse-CDF sampling of P(k) proportional to k^-gamma on 1..k_max."""
    ks = np.arange(1, k_max + 1, dtype=np.float64)
    w = ks ** -gamma
    cdf = np.cumsum(w) / w.sum()
    u = rng.random(n)
    return np.searchsorted(cdf, u) + 1


def test_fit_recovers_known_exponent():
    rng = np.random.Generator(np.random.PCG64(99))
    sample = power_law_sample(2.5, 200_000, rng)
    got = fit_powerlaw_exponent(sample, k_min=5)
    assert got == pytest.approx(2.5, abs=0.05)


def test_fit_accepts_degree_sequence():
    rng = np.random.Generator(np.random.PCG64(123))
    sample = power_law_sample(2.2, 50_000, rng)
    as_seq = fit_powerlaw_exponent(_seq(sample), k_min=5)
    as_arr = fit_powerlaw_exponent(sample, k_min=5)
    assert as_seq == as_arr


def test_fit_insufficient_tail():
    with pytest.raises(ValueError, match="insufficient tail"):
        fit_powerlaw_exponent(np.arange(40) + 5, k_min=5)
    # 49 entries at or above k_min is still one short
    with pytest.raises(ValueError, match="49"):
        fit_powerlaw_exponent(np.full(49, 8), k_min=5)


def test_fit_degenerate_tail():
    with pytest.raises(ValueError, match="degenerate"):
        fit_powerlaw_exponent(np.full(60, 5), k_min=5)


def test_fit_kmin_validation():
    with pytest.raises(ValueError):
        fit_powerlaw_exponent(np.arange(100), k_min=0)


# -- closed-form exponents ---------------------------------------------------


def test_theoretical_exponents_worked_example():
    th = theoretical_exponents(SdgParams(0.45, 0.45), 266, 1427)
    assert th.out_exponent == pytest.approx(1 / 0.55 + 1, abs=1e-9)
    assert th.out_exponent == pytest.approx(2.8182, abs=1e-4)
    assert th.out_offset == pytest.approx((0.45 / 0.55) * (1427 / 266), abs=1e-9)
    assert th.out_offset == pytest.approx(4.39, abs=0.01)


def test_theoretical_exponents_in_law():
    th = theoretical_exponents(SdgParams(0.0, 0.1), 1000, 5000)
    assert th.in_exponent == pytest.approx((1 + 0.9) / 0.9)
    assert th.out_exponent == pytest.approx(2.0)
    assert th.out_offset == pytest.approx(0.0)


def test_theoretical_exponents_degenerate():
    with pytest.raises(ValueError):
        theoretical_exponents(SdgParams(1.0, 0.1), 100, 500)
    with pytest.raises(ValueError):
        theoretical_exponents(SdgParams(0.1, 1.0), 100, 500)
