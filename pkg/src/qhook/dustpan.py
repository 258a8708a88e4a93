"""Generalized uniform sums and their Gaussian-smoothed (DUSTPAN) relatives.

S_t is the sum of independent uniforms on [-t_k/2, t_k/2].  Its density is
a piecewise polynomial with breakpoints at the vertex offsets
c = sum(eps_k * t_k / 2), eps in {+1, -1}^m.  Vertices with equal offsets are
merged, so instances with many repeated or commensurable weights stay cheap
even though the nominal sum has 2**m terms.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Sequence

import numpy as np
from scipy.special import ndtr

from .errors import (
    BadP,
    BadParameters,
    DegenerateDistribution,
    EmptyWeights,
    MTooSmall,
    NotStandardized,
    ParseError,
    TooManySummands,
    ZeroNorm,
)
from .exactpoly import DensePoly, bernoulli

MAX_SUMMANDS = 20
LEVY_TOL = 1e-4


def _coerce(x):
    if isinstance(x, bool):
        raise BadParameters("weights must be numbers")
    if isinstance(x, Rational):
        return Fraction(x)
    x = float(x)
    if not math.isfinite(x):
        raise BadParameters("weights must be finite")
    return x


@dataclass(frozen=True)
class WeightMultiset:
    """Finite weakly decreasing nonnegative weights.

    Rational inputs stay exact (as Fraction); anything else becomes float.
    Zero entries are kept because pairwise differences depend on them; use
    :attr:`positive` for the trimmed view.
    """

    entries: tuple = ()

    def __post_init__(self):
        vals = [_coerce(x) for x in self.entries]
        if any(v < 0 for v in vals):
            raise BadParameters("weights must be nonnegative")
        object.__setattr__(self, "entries", tuple(sorted(vals, reverse=True)))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.entries)

    @property
    def positive(self) -> "WeightMultiset":
        return WeightMultiset(tuple(v for v in self.entries if v > 0))

    def as_floats(self) -> np.ndarray:
        return np.array([float(v) for v in self.entries], dtype=float)

    def scaled(self, c) -> "WeightMultiset":
        return WeightMultiset(tuple(v * c for v in self.entries))

    def to_json(self) -> list:
        return [str(v) if isinstance(v, Fraction) else v for v in self.entries]

    def __str__(self):
        return ",".join(str(v) for v in self.entries)


def parse_weights(text: str) -> WeightMultiset:
    """Parse "1,1/2,0.25" into exact weights."""
    text = text.strip()
    if not text:
        return WeightMultiset()
    vals = []
    pos = 0
    for piece in text.split(","):
        token = piece.strip()
        try:
            vals.append(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a number: {token!r}", position=pos) from None
        pos += len(piece) + 1
    try:
        return WeightMultiset(tuple(vals))
    except BadParameters as exc:
        raise ParseError(str(exc)) from None


def _weights(t) -> WeightMultiset:
    return t if isinstance(t, WeightMultiset) else WeightMultiset(tuple(t))


@dataclass(frozen=True)
class DustpanParams:
    """S_t + N(0, sigma**2)."""

    t: WeightMultiset
    sigma: float = 0.0
    standardized: bool = False

    def __post_init__(self):
        object.__setattr__(self, "t", _weights(self.t))
        if self.sigma < 0 or not math.isfinite(self.sigma):
            raise BadParameters("sigma must be a nonnegative real")
        if self.standardized and abs(self.variance - 1) > 1e-12:
            raise NotStandardized(f"variance is {self.variance!r}, not 1")

    @property
    def variance(self) -> float:
        return float(sum(v * v for v in self.t.entries)) / 12 + self.sigma**2

    def standardize(self) -> "DustpanParams":
        var = self.variance
        if var <= 0:
            raise DegenerateDistribution("limit distribution is a point mass")
        s = 1 / math.sqrt(var)
        t = WeightMultiset(tuple(float(v) * s for v in self.t.entries))
        sigma = self.sigma * s
        # absorb rounding so the flag's invariant holds
        rest = 1 - float(sum(v * v for v in t.entries)) / 12
        sigma = math.sqrt(max(rest, 0.0)) if self.sigma > 0 else 0.0
        return DustpanParams(t, sigma, standardized=abs(rest - sigma**2) <= 1e-12)

    def to_json(self) -> dict:
        return {"t": self.t.to_json(), "sigma": self.sigma, "standardized": self.standardized}

    @classmethod
    def from_json(cls, data: dict) -> "DustpanParams":
        try:
            t = WeightMultiset(tuple(Fraction(v) if isinstance(v, str) else v for v in data["t"]))
            return cls(t, float(data.get("sigma", 0.0)), bool(data.get("standardized", False)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad DustpanParams JSON: {exc}") from exc


# ---------------------------------------------------------------- norms


def p_norm(t, p) -> float:
    t = _weights(t)
    if p == math.inf or p == "inf":
        return float(t.entries[0]) if t.entries else 0.0
    p = float(p)
    if not p >= 1:
        raise BadP(f"p must be >= 1 or infinity, got {p}")
    vals = t.as_floats()
    if not len(vals):
        return 0.0
    top = vals.max()
    if top == 0:
        return 0.0
    # factor out the max so large p does not overflow
    return float(top * math.fsum((vals / top) ** p) ** (1 / p))


def hat(t) -> WeightMultiset:
    """Rescale to squared 2-norm 12, so the uniform sum has unit variance."""
    t = _weights(t)
    sq = sum(v * v for v in t.entries)
    if sq == 0:
        raise ZeroNorm("hat of a zero multiset is undefined")
    s = math.sqrt(12 / float(sq)) if not isinstance(sq, Fraction) else _sqrt_ratio(12, sq)
    return WeightMultiset(tuple(float(v) * s for v in t.entries))


def _sqrt_ratio(a, b: Fraction) -> float:
    # sqrt(a / b) for a possibly huge rational b, without float overflow
    from decimal import Decimal, localcontext

    with localcontext() as ctx:
        ctx.prec = 40
        val = (Decimal(a) * Decimal(b.denominator) / Decimal(b.numerator)).sqrt()
    return float(val)


def distance_multiset(t) -> WeightMultiset:
    vals = _weights(t).entries
    return WeightMultiset(tuple(vals[i] - vals[j] for i in range(len(vals)) for j in range(i + 1, len(vals))))


# ---------------------------------------------------------------- cumulants


def sum_cumulant(t, d: int):
    """(B_d/d) * |t|_d**d; exact Fraction when the weights are rational."""
    if d < 2:
        raise BadParameters("d must be at least 2")
    t = _weights(t)
    bd = bernoulli(d)
    if t.exact:
        return bd / d * sum(v**d for v in t.entries)
    return float(bd / d) * math.fsum(float(v) ** d for v in t.entries)


def dustpan_cumulant(params: DustpanParams, d: int):
    k = sum_cumulant(params.t, d)
    if d == 2:
        return float(k) + params.sigma**2 if params.sigma else k
    return k


# ---------------------------------------------------------------- density


@dataclass(frozen=True)
class PiecewisePoly:
    """Density and CDF of scale * S_t from merged vertex offsets.

    Uses PDF(x) = 1/((m-1)! prod t) * sum_{x+c>0} eps_c (x+c)**(m-1), the
    positive-part form of the signed hypercube sum (the two agree because
    the full alternating sum of a degree < m polynomial vanishes).
    """

    m: int
    knots: tuple[float, ...]
    signs: tuple[int, ...]
    log_norm: float  # log((m-1)! * prod t)
    half_width: float
    scale: float = 1.0

    @classmethod
    def from_weights(cls, t, scale: float = 1.0, max_terms: int = MAX_SUMMANDS) -> "PiecewisePoly":
        t = _weights(t).positive
        m = len(t)
        if m == 0:
            raise EmptyWeights("no positive weights; S_t is a point mass")
        if m > max_terms:
            raise TooManySummands(f"{m} summands exceeds the cap of {max_terms}")
        exact = t.exact
        total = sum(t.entries)
        offsets: dict = {0: 1} if exact else {0.0: 1}
        for v in t.entries:
            half = v / 2
            nxt: dict = defaultdict(int)
            for c, s in offsets.items():
                for key, sign in ((c + half, s), (c - half, -s)):
                    if not exact:
                        key = round(key / float(total), 13) * float(total)
                    nxt[key] += sign
            offsets = {c: s for c, s in nxt.items() if s}
        items = sorted(offsets.items())
        log_norm = math.lgamma(m) + sum(math.log(float(v)) for v in t.entries)
        return cls(
            m=m,
            knots=tuple(float(c) for c, _ in items),
            signs=tuple(s for _, s in items),
            log_norm=log_norm,
            half_width=float(total) / 2,
            scale=float(scale),
        )

    @cached_property
    def _arrays(self):
        # knot-relative scaling keeps the powers in [0, 1]
        w = 2 * self.half_width
        return np.array(self.knots) / w, np.array(self.signs, dtype=float), w

    def _positive_part_sum(self, y: np.ndarray, power: int) -> np.ndarray:
        """sum_{c > -y} sign_c * ((y + c)/w)**power for y <= 0, in unscaled units."""
        knots, signs, w = self._arrays
        yr = y[:, None] / w
        z = yr + knots[None, :]
        terms = np.where(z > 0, signs[None, :] * np.where(z > 0, z, 0.0) ** power, 0.0)
        return terms.sum(axis=1)

    def density(self, x) -> np.ndarray | float:
        scalar = np.ndim(x) == 0
        u = np.abs(np.atleast_1d(np.asarray(x, dtype=float))) / self.scale
        y = -u
        w = 2 * self.half_width
        raw = self._positive_part_sum(y, self.m - 1)
        coef = math.exp((self.m - 1) * math.log(w) - self.log_norm)
        out = np.where(u < self.half_width, raw * coef, 0.0) / self.scale
        out = np.maximum(out, 0.0)
        return float(out[0]) if scalar else out

    def cdf(self, x) -> np.ndarray | float:
        scalar = np.ndim(x) == 0
        xs = np.atleast_1d(np.asarray(x, dtype=float)) / self.scale
        y = -np.abs(xs)
        w = 2 * self.half_width
        raw = self._positive_part_sum(y, self.m)
        coef = math.exp(self.m * math.log(w) - self.log_norm - math.log(self.m))
        left = np.clip(raw * coef, 0.0, 0.5)
        left = np.where(y <= -self.half_width, 0.0, left)
        out = np.where(xs > 0, 1.0 - left, left)
        return float(out[0]) if scalar else out


def density(t, x):
    return PiecewisePoly.from_weights(t).density(x)


def cdf(t, x):
    return PiecewisePoly.from_weights(t).cdf(x)


def irwin_hall_density(m: int, x: float) -> float:
    """Density of the sum of m independent U[0,1] variables, closed form."""
    terms = []
    for k in range(m + 1):
        z = x - k
        if z == 0:
            continue
        terms.append((-1) ** k * math.comb(m, k) * z ** (m - 1) * math.copysign(1.0, z))
    return math.fsum(terms) / (2 * math.factorial(m - 1))


@dataclass(frozen=True)
class GridRow:
    x: float
    pdf: float
    cdf: float


def density_grid(t, points: int = 200, margin: float = 0.05) -> list[GridRow]:
    """Evenly spaced (x, pdf, cdf) samples covering the support plus a margin."""
    if points < 2:
        raise BadParameters("need at least two grid points")
    pp = PiecewisePoly.from_weights(t)
    h = pp.half_width * (1 + margin)
    xs = np.linspace(-h, h, points)
    return [GridRow(float(x), float(f), float(F)) for x, f, F in zip(xs, pp.density(xs), pp.cdf(xs))]


def char_fn(params: DustpanParams, s: float) -> complex:
    val = math.exp(-(params.sigma**2) * s * s / 2)
    for v in params.t.entries:
        arg = s * float(v) / 2
        if arg:
            val *= math.sin(arg) / arg
    return complex(val, 0.0)


# ---------------------------------------------------------------- sequences


def padded_sequence(t, M: float, N: int) -> WeightMultiset:
    """Truncate to N entries, then restore squared 2-norm M with many small equal entries."""
    t = _weights(t)
    if N < 1:
        raise BadParameters("N must be positive")
    head = [float(v) for v in t.entries[:N]]
    deficit = M - math.fsum(v * v for v in head)
    if deficit < -1e-12 * max(1.0, M) or M < float(sum(v * v for v in t.entries)) - 1e-12 * max(1.0, M):
        raise MTooSmall("M is smaller than the squared 2-norm of t")
    eps = math.sqrt(max(deficit, 0.0))
    if eps == 0:
        return WeightMultiset(tuple(head))
    m_n = max(1, math.ceil(N * eps))
    return WeightMultiset(tuple(head) + (eps / m_n,) * (m_n * m_n))


@dataclass
class ConvergenceReport:
    entries: dict[int, list[float]]
    entry_converged: dict[int, bool]
    norms: dict[int, list[float]]
    tol: float

    @property
    def converged(self) -> bool:
        return all(self.entry_converged.values())

    def to_json(self) -> dict:
        return {
            "tol": self.tol,
            "converged": self.converged,
            "entries": {str(i): v for i, v in self.entries.items()},
            "entry_converged": {str(i): v for i, v in self.entry_converged.items()},
            "norms": {str(p): v for p, v in self.norms.items()},
        }


def pointwise_convergence_check(seq: Sequence, tol: float, max_index: int = 10, tail: int = 3) -> ConvergenceReport:
    """Track entry i and the even norms |.|_{2d}, d = 1..4, along a sequence of multisets."""
    if not seq:
        raise BadParameters("sequence must be nonempty")
    seq = [_weights(t) for t in seq]
    width = min(max_index, max(len(t) for t in seq))
    entries = {i + 1: [float(t.entries[i]) if i < len(t) else 0.0 for t in seq] for i in range(width)}
    window = max(1, min(tail, len(seq)))
    conv = {i: max(traj[-window:]) - min(traj[-window:]) <= tol for i, traj in entries.items()}
    norms = {2 * d: [p_norm(t, 2 * d) for t in seq] for d in range(1, 5)}
    return ConvergenceReport(entries, conv, norms, tol)


@dataclass(frozen=True)
class AntidiagonalBounds:
    lower: float
    middle: float
    upper: float

    @property
    def holds(self) -> bool:
        slack = 1e-12 * max(1.0, abs(self.upper))
        return self.lower <= self.middle + slack and self.middle <= self.upper + slack


def antidiagonal_bounds(t, d: int) -> AntidiagonalBounds:
    """Compare sum_{i<j} (t_i - t_j)**d with sums over antidiagonal pairs (t_k, t_{m-k+1})."""
    vals = list(_weights(t).entries)
    m = len(vals)
    middle = sum((vals[i] - vals[j]) ** d for i in range(m) for j in range(i + 1, m))
    anti = sum((m - 2 * k + 1) * (vals[k - 1] - vals[m - k]) ** d for k in range(1, (m - 1) // 2 + (m - 1) % 2 + 1))
    lower = Fraction(anti, 2 ** (d - 1)) if isinstance(anti, (int, Fraction)) else anti / 2 ** (d - 1)
    return AntidiagonalBounds(float(lower), float(middle), float(anti))


# ---------------------------------------------------------------- distances


@dataclass(frozen=True)
class DistanceReport:
    kolmogorov: float
    levy: float
    levy_tol: float = LEVY_TOL

    def to_json(self) -> dict:
        return {"kolmogorov": self.kolmogorov, "levy": self.levy, "levy_tol": self.levy_tol}


@dataclass(frozen=True)
class StepCDF:
    """Right-continuous CDF of a finite distribution on sorted points."""

    points: np.ndarray
    cum: np.ndarray  # cum[j] = P(X <= points[j])

    def right(self, x: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.points, x, side="right") - 1
        return np.where(idx >= 0, self.cum[np.maximum(idx, 0)], 0.0)

    def left(self, x: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.points, x, side="left") - 1
        return np.where(idx >= 0, self.cum[np.maximum(idx, 0)], 0.0)


def standardized_step_cdf(p: DensePoly) -> StepCDF:
    """Step CDF of (X - mean)/sd where P[X = k] is proportional to the coefficient of q**k."""
    total = p.mass
    if total <= 0:
        raise DegenerateDistribution("polynomial has no mass")
    ks = range(len(p.coeffs))
    s1 = sum(k * c for k, c in zip(ks, p.coeffs))
    s2 = sum(k * k * c for k, c in zip(ks, p.coeffs))
    var_num = s2 * total - s1 * s1  # total**2 * variance, exact
    if var_num <= 0:
        raise DegenerateDistribution("discrete distribution is a point mass")
    sd_times_total = math.sqrt(var_num) if var_num < 2**1000 else float(math.isqrt(var_num))
    support = [k for k, c in zip(ks, p.coeffs) if c]
    points = np.array([(k * total - s1) / sd_times_total for k in support])
    running, cum = 0, []
    for c in p.coeffs:
        if c:
            running += c
            cum.append(running / total)
    return StepCDF(points, np.array(cum))


class DustpanLaw:
    """Density and CDF of S_t + N(0, sigma**2), optionally rescaled to unit variance.

    With sigma > 0 both are convolutions of the piecewise-polynomial law with
    the normal kernel, integrated by composite Gauss-Legendre rules on pieces
    no wider than sigma / 2, so the kernel is well resolved.
    """

    def __init__(self, params: DustpanParams, standardize: bool = False, nodes_per_piece: int = 12):
        var = params.variance
        if var <= 0:
            raise DegenerateDistribution("limit distribution is a point mass")
        self.scale = 1 / math.sqrt(var) if standardize else 1.0
        self.sigma = params.sigma * self.scale
        t = params.t.positive
        self.pp = PiecewisePoly.from_weights(t, scale=self.scale) if len(t) else None
        if self.pp is not None and self.sigma > 0:
            xs, ws = np.polynomial.legendre.leggauss(nodes_per_piece)
            brk = sorted(set(np.array(self.pp.knots) * self.scale))
            us, wts = [], []
            for a, b in zip(brk, brk[1:]):
                parts = max(1, math.ceil((b - a) / (self.sigma / 2)))
                edges = np.linspace(a, b, parts + 1)
                for lo, hi in zip(edges, edges[1:]):
                    us.append((hi - lo) / 2 * xs + (lo + hi) / 2)
                    wts.append((hi - lo) / 2 * ws)
            u = np.concatenate(us)
            self._nodes = u
            self._weights = np.concatenate(wts) * self.pp.density(u)

    def _convolve(self, x: np.ndarray, kernel) -> np.ndarray:
        out = np.empty_like(x)
        for lo in range(0, len(x), 2048):
            chunk = x[lo : lo + 2048]
            out[lo : lo + 2048] = kernel((chunk[:, None] - self._nodes[None, :]) / self.sigma) @ self._weights
        return out

    def cdf(self, x) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if self.pp is None:
            return ndtr(x / self.sigma)
        if self.sigma == 0:
            return self.pp.cdf(x)
        return np.clip(self._convolve(x, ndtr), 0.0, 1.0)

    def pdf(self, x) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        phi = lambda z: np.exp(-z * z / 2) / math.sqrt(2 * math.pi)
        if self.pp is None:
            return phi(x / self.sigma) / self.sigma
        if self.sigma == 0:
            return self.pp.density(x)
        return self._convolve(x, phi) / self.sigma

    __call__ = cdf


def LimitCDF(lim: DustpanParams) -> DustpanLaw:
    """Unit-variance version of a DUSTPAN law, callable as its CDF."""
    return DustpanLaw(lim, standardize=True)


def _levy_bisect(violation, tol: float) -> float:
    lo, hi = 0.0, 1.0
    if violation(0.0) <= 0:
        return 0.0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if violation(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return hi


def discrete_vs_limit_distance(p: DensePoly, lim: DustpanParams, levy_tol: float = LEVY_TOL) -> DistanceReport:
    """Kolmogorov and Levy distances between a standardized CGF law and a standardized limit."""
    F = standardized_step_cdf(p)
    G = LimitCDF(lim)
    v = F.points
    Fj = F.cum
    Fprev = np.concatenate(([0.0], Fj[:-1]))
    Gv = G(v)
    kol = float(max(np.max(np.abs(Gv - Fj)), np.max(np.abs(Gv - Fprev))))

    def violation(eps: float) -> float:
        # G(x) <= F(x+eps)+eps and F(x-eps)-eps <= G(x), checked at the extremal x
        upper = np.max(G(v - eps) - Fprev - eps)
        lower = np.max(Fj - eps - G(v + eps))
        return float(max(upper, lower))

    return DistanceReport(kol, _levy_bisect(violation, levy_tol), levy_tol)


def discrete_vs_discrete_distance(p: DensePoly, q: DensePoly, levy_tol: float = LEVY_TOL) -> DistanceReport:
    """Same distances between two standardized CGF laws."""
    F, G = standardized_step_cdf(p), standardized_step_cdf(q)
    pts = np.union1d(F.points, G.points)
    kol = float(np.max(np.abs(F.right(pts) - G.right(pts))))

    def violation(eps: float) -> float:
        worst = -1.0
        for A, B in ((F, G), (G, F)):
            # A(x) <= B(x+eps)+eps at jumps of A and just below jumps of B shifted by eps
            worst = max(worst, np.max(A.right(A.points) - B.right(A.points + eps) - eps))
            worst = max(worst, np.max(A.left(B.points - eps) - B.left(B.points) - eps))
        return float(worst)

    return DistanceReport(kol, _levy_bisect(violation, levy_tol), levy_tol)


__all__ = [
    "WeightMultiset",
    "parse_weights",
    "DustpanParams",
    "p_norm",
    "hat",
    "distance_multiset",
    "sum_cumulant",
    "dustpan_cumulant",
    "PiecewisePoly",
    "density",
    "cdf",
    "irwin_hall_density",
    "GridRow",
    "density_grid",
    "char_fn",
    "padded_sequence",
    "ConvergenceReport",
    "pointwise_convergence_check",
    "AntidiagonalBounds",
    "antidiagonal_bounds",
    "DistanceReport",
    "StepCDF",
    "standardized_step_cdf",
    "DustpanLaw",
    "LimitCDF",
    "discrete_vs_limit_distance",
    "discrete_vs_discrete_distance",
]
