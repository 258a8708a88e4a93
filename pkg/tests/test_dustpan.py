import logging
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, stats

from qhook.errors import BadParameters, DegenerateDistribution, MTooSmall, ParseError, TooManySummands
from qhook.exactpoly import DensePoly, bernoulli, expand_cgf, CGF
from qhook.dustpan import (
    DustpanLaw,
    DustpanParams,
    LimitCDF,
    WeightMultiset,
    antidiagonal_bounds,
    cdf,
    char_fn,
    density,
    density_grid,
    discrete_vs_discrete_distance,
    discrete_vs_limit_distance,
    distance_multiset,
    dustpan_cumulant,
    hat,
    irwin_hall_density,
    p_norm,
    padded_sequence,
    parse_weights,
    pointwise_convergence_check,
    sum_cumulant,
)

log = logging.getLogger(__name__)

weights = st.lists(st.floats(0.05, 3.0), min_size=1, max_size=6)


def irwin_hall_oracle(m: int, x: float) -> float:
    """One-sided textbook form: sum_{k <= x} (-1)^k C(m,k) (x-k)^{m-1} / (m-1)!"""
    if not 0 <= x <= m:
        return 0.0
    return sum((-1) ** k * math.comb(m, k) * (x - k) ** (m - 1) for k in range(int(math.floor(x)) + 1)) / math.factorial(m - 1)


def knots(t) -> list[float]:
    """Breakpoints (sum of +-t_i)/2 of the piecewise-polynomial density."""
    pts = {0.0}
    for v in t:
        pts = {p + float(v) / 2 for p in pts} | {p - float(v) / 2 for p in pts}
    return sorted(pts)


def test_weight_parsing_and_ordering():
    t = parse_weights("1/3, 1, 0, 1/2")
    assert t.entries == (1, Fraction(1, 2), Fraction(1, 3), 0)
    assert t.exact and len(t.positive) == 3
    assert WeightMultiset((0.5, 2)).entries == (2.0, 0.5)
    with pytest.raises(ParseError):
        parse_weights("1,x")
    with pytest.raises(BadParameters):
        WeightMultiset((1, -1))
    with pytest.raises(BadParameters):
        DustpanParams(WeightMultiset((1,)), sigma=-1)


def test_hat_and_norms():
    h = hat(WeightMultiset((3, 4)))
    assert sum(float(v) ** 2 for v in h) == pytest.approx(12)
    assert p_norm((3, 4), 2) == pytest.approx(5)
    assert sorted(distance_multiset((3, 1, 0)).entries) == [1, 2, 3]


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("d", range(2, 9))
def test_irwin_hall_cumulants(m, d):
    assert sum_cumulant((1,) * m, d) == m * bernoulli(d) / d


def test_dustpan_cumulants_include_normal_part():
    p = DustpanParams(WeightMultiset((1, 1)), sigma=0.5)
    assert dustpan_cumulant(p, 2) == pytest.approx(2 / 12 + 0.25)
    assert dustpan_cumulant(p, 4) == pytest.approx(2 * -1 / 120)


@pytest.mark.parametrize("m", range(2, 7))
def test_irwin_hall_specialization(m):
    xs = np.linspace(-0.3, m + 0.3, 173)
    oracle = np.array([irwin_hall_oracle(m, x) for x in xs])
    ours = density((1,) * m, xs - m / 2)
    assert np.max(np.abs(ours - oracle)) < 1e-10
    closed = np.array([irwin_hall_density(m, x) for x in xs])
    assert np.max(np.abs(closed - oracle)) < 1e-10


@settings(max_examples=30, deadline=None)
@given(weights)
def test_density_normalization_symmetry_variance(t):
    w = sum(t)
    f = lambda x: float(density(t, x))
    inner = knots(t)[1:-1] or None
    mass = integrate.quad(f, -w / 2, w / 2, limit=400, points=inner, epsabs=1e-13)[0]
    var = integrate.quad(lambda x: x * x * f(x), -w / 2, w / 2, limit=400, points=inner, epsabs=1e-13)[0]
    assert mass == pytest.approx(1, abs=1e-8)
    assert var == pytest.approx(sum(v * v for v in t) / 12, abs=1e-7 * max(1, w * w))
    xs = np.linspace(-w / 2, w / 2, 41)
    assert np.allclose(density(t, xs), density(t, -xs), atol=1e-12)
    assert np.all(density(t, xs) >= -1e-12)


@settings(max_examples=30, deadline=None)
@given(weights)
def test_cdf_density_consistency(t):
    w = sum(t)
    h = 1e-5
    ks = np.array(knots(t))
    xs = np.linspace(-w / 2, w / 2, 37)
    xs = xs[np.min(np.abs(xs[:, None] - ks[None, :]), axis=1) > 10 * h]
    fd = (cdf(t, xs + h) - cdf(t, xs - h)) / (2 * h)
    assert np.max(np.abs(fd - density(t, xs)), initial=0.0) < 1e-6
    assert cdf(t, 0.0) == pytest.approx(0.5, abs=1e-10)
    assert float(cdf(t, w)) == 1.0 and float(cdf(t, -w)) == 0.0


def test_cdf_matches_quadrature_of_density():
    t = (6, 5, 1)
    for x in (-4.0, -1.3, 0.7, 2.2, 5.5):
        inner = [k for k in knots(t) if -6 < k < x] or None
        ref = integrate.quad(lambda u: float(density(t, u)), -6, x, limit=200, points=inner, epsabs=1e-13)[0]
        assert float(cdf(t, x)) == pytest.approx(ref, abs=1e-10)


def test_density_grid_integrates_to_one():
    grid = density_grid((6, 5, 1), points=400)
    assert len(grid) == 400
    xs = np.array([g.x for g in grid])
    ys = np.array([g.pdf for g in grid])
    assert abs(integrate.trapezoid(ys, xs) - 1) < 1e-6


@settings(max_examples=30, deadline=None)
@given(weights, st.floats(0, 2), st.floats(-20, 20))
def test_char_fn_bounded(t, sigma, s):
    z = char_fn(DustpanParams(WeightMultiset(tuple(t)), sigma), s)
    assert abs(z) <= 1 + 1e-12


def test_char_fn_is_fourier_transform_of_density():
    t = (2, 1)
    for s in (0.3, 1.0, 2.5):
        ref = integrate.quad(lambda x: math.cos(s * x) * float(density(t, x)), -1.5, 1.5, limit=200)[0]
        assert char_fn(DustpanParams(WeightMultiset(t)), s).real == pytest.approx(ref, abs=1e-9)


def test_summand_guard():
    with pytest.raises(TooManySummands):
        density((1,) * 21, 0.0)


def test_dustpan_law_with_gaussian_part():
    law = DustpanLaw(DustpanParams(WeightMultiset((2,)), sigma=0.7))
    for x in (-1.5, 0.0, 0.4, 2.0):
        # uniform on [-1, 1] convolved with N(0, 0.49)
        ref = integrate.quad(lambda u: 0.5 * stats.norm.cdf((x - u) / 0.7), -1, 1)[0]
        assert float(law.cdf(x)[0]) == pytest.approx(ref, abs=1e-9)
        refp = integrate.quad(lambda u: 0.5 * stats.norm.pdf((x - u) / 0.7) / 0.7, -1, 1)[0]
        assert float(law.pdf(x)[0]) == pytest.approx(refp, abs=1e-9)
    pure = DustpanLaw(DustpanParams(WeightMultiset(()), sigma=2.0))
    assert float(pure.cdf(1.0)[0]) == pytest.approx(stats.norm.cdf(0.5))
    with pytest.raises(DegenerateDistribution):
        DustpanLaw(DustpanParams(WeightMultiset(()), sigma=0.0))


def test_limit_cdf_has_unit_variance():
    G = LimitCDF(DustpanParams(WeightMultiset((3, 1)), sigma=0.5))
    xs = np.linspace(-8, 8, 4001)
    pdf = np.gradient(G(xs), xs)
    assert integrate.trapezoid(xs * xs * pdf, xs) == pytest.approx(1, abs=1e-3)


def test_binomial_distance_to_normal_shrinks():
    # fair coin sums against the standard normal, cross-checked with scipy's binomial CDF
    dists = []
    normal = DustpanParams(WeightMultiset(()), sigma=1.0)
    for n in (4, 16, 64):
        p = expand_cgf(CGF((2,) * n, ()))
        rep = discrete_vs_limit_distance(p, normal)
        k = np.arange(n + 1)
        z = (k - n / 2) / math.sqrt(n / 4)
        F = stats.binom.cdf(k, n, 0.5)
        Fprev = np.concatenate(([0.0], F[:-1]))
        ref = max(np.max(np.abs(stats.norm.cdf(z) - F)), np.max(np.abs(stats.norm.cdf(z) - Fprev)))
        assert rep.kolmogorov == pytest.approx(ref, abs=1e-12)
        assert rep.levy <= rep.kolmogorov + rep.levy_tol
        dists.append(rep.kolmogorov)
    assert dists == sorted(dists, reverse=True)


def test_discrete_self_distance_is_zero():
    p = expand_cgf(CGF((5, 4, 3), ()))
    rep = discrete_vs_discrete_distance(p, p)
    assert rep.kolmogorov == 0 and rep.levy == 0
    q = DensePoly(0, (1, 1))
    assert discrete_vs_discrete_distance(p, q).kolmogorov > 0


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(0, 10), min_size=2, max_size=8), st.integers(1, 4))
def test_antidiagonal_bounds(t, d):
    rep = antidiagonal_bounds(tuple(t), d)
    if not rep.holds:
        log.warning("antidiagonal bound violated: t=%s d=%d lower=%r middle=%r upper=%r",
                    sorted(t, reverse=True), d, rep.lower, rep.middle, rep.upper)
    assert rep.holds


def test_antidiagonal_bounds_exact_sweep():
    rng = np.random.default_rng(11)
    violations = []
    for _ in range(500):
        m = int(rng.integers(2, 9))
        t = tuple(Fraction(int(v)) for v in rng.integers(0, 100, size=m))
        for d in range(1, 5):
            rep = antidiagonal_bounds(t, d)
            if not rep.holds:
                violations.append((t, d))
    log.info("antidiagonal sweep: %d violations in 2000 exact checks", len(violations))
    assert not violations


def test_padded_sequence_restores_norm():
    t = (1.0, 0.5, 0.25, 0.125)
    for N in (1, 2, 3):
        s = padded_sequence(t, 2.0, N)
        assert p_norm(s, 2) ** 2 == pytest.approx(2.0)
        assert all(v in s.entries for v in t[:N])
    with pytest.raises(MTooSmall):
        padded_sequence(t, 1.0, 2)


def test_pointwise_convergence():
    seq = [padded_sequence((1.0, 0.5), 1.5, N) for N in (1, 2, 3, 4)]
    rep = pointwise_convergence_check(seq, tol=1e-12)
    assert rep.entry_converged[1]
    assert rep.to_json()["tol"] == 1e-12
