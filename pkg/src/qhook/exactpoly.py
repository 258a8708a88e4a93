"""Exact arithmetic for cyclotomic generating functions.

A cyclotomic generating function (CGF) is a quotient

    q**shift * prod([a_k]_q) / prod([b_k]_q),     [n]_q = 1 + q + ... + q**(n-1)

which, for every family handled by this package, is a polynomial with
nonnegative integer coefficients.  Its coefficients define a discrete
distribution whose cumulants have the closed form

    kappa_d = (B_d / d) * (sum a_k**d - sum b_k**d)       (d >= 2, equal-size multisets)

so cumulants never require expanding the polynomial.  Expansion is still
provided, both for coefficient-level checks and as an independent oracle
for the closed form.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
import math
from fractions import Fraction
from itertools import accumulate
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DegenerateDistribution,
    NegativeCoefficient,
    NonPolynomial,
    ParseError,
    ZeroMass,
)

__all__ = [
    "CGF",
    "DensePoly",
    "CumulantReport",
    "bernoulli",
    "expand_cgf",
    "cgf_cumulant",
    "moments_from_poly",
    "cumulants_from_moments",
    "standardized_cumulants",
    "standardize_value",
    "check_symmetry",
    "check_unimodal",
    "check_log_concave",
    "q_integer",
    "q_factorial",
    "riemann_estimate",
]

# Bernoulli numbers with B_1 = +1/2, grown on demand under a lock.
_BERNOULLI = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(d: int) -> Fraction:
    """Return the Bernoulli number B_d with the convention B_1 = +1/2.

    Computed from sum_{k=0}^{n} C(n+1, k) B_k = n + 1, which is the
    standard recurrence rewritten for the positive sign of B_1.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d < len(_BERNOULLI):
        return _BERNOULLI[d]
    with _BERNOULLI_LOCK:
        table = list(_BERNOULLI)
        for n in range(len(table), d + 1):
            s = sum(comb(n + 1, k) * table[k] for k in range(n))
            table.append((Fraction(n + 1) - s) / (n + 1))
        _BERNOULLI[len(_BERNOULLI):] = table[len(_BERNOULLI):]
    return _BERNOULLI[d]


def _as_multiset(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or int(v) != v or v < 1:
            raise ValueError(f"{what} entries must be positive integers, got {v!r}")
        out.append(int(v))
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class CGF:
    """q**shift * prod [num]_q / prod [den]_q, multisets sorted decreasing."""

    num: tuple[int, ...]
    den: tuple[int, ...]
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "num", _as_multiset(self.num, "numerator"))
        object.__setattr__(self, "den", _as_multiset(self.den, "denominator"))
        if int(self.shift) != self.shift or self.shift < 0:
            raise ValueError("shift must be a nonnegative integer")
        object.__setattr__(self, "shift", int(self.shift))

    def padded(self) -> "CGF":
        """Pad the shorter multiset with 1's so both have equal cardinality."""
        k = max(len(self.num), len(self.den))
        return CGF(
            self.num + (1,) * (k - len(self.num)),
            self.den + (1,) * (k - len(self.den)),
            self.shift,
        )

    def reduced(self) -> "CGF":
        """Cancel the multiset intersection and drop [1]_q factors."""
        num, den = Counter(self.num), Counter(self.den)
        common = num & den
        num -= common
        den -= common
        num.pop(1, None)
        den.pop(1, None)
        return CGF(tuple(num.elements()), tuple(den.elements()), self.shift)

    def to_json(self) -> dict:
        return {"num": list(self.num), "den": list(self.den), "shift": self.shift}

    @classmethod
    def from_json(cls, data: dict) -> "CGF":
        try:
            return cls(data["num"], data["den"], data.get("shift", 0))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad CGF JSON: {exc}") from exc


@dataclass(frozen=True)
class DensePoly:
    """sum_k coeffs[k] * q**(offset + k), stored without zero padding."""

    offset: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        offset = int(self.offset)
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            offset, coeffs = 0, []
        else:
            offset, coeffs = offset + lo, coeffs[lo:hi]
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "DensePoly":
        """Generating function sum q**e over a list of statistic values."""
        counts = Counter(exponents)
        if not counts:
            return cls(0, ())
        lo, hi = min(counts), max(counts)
        return cls(lo, tuple(counts.get(e, 0) for e in range(lo, hi + 1)))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return self.offset + len(self.coeffs) - 1

    @property
    def mass(self) -> int:
        return sum(self.coeffs)

    def coefficient(self, k: int) -> int:
        i = k - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def as_dict(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def to_json(self) -> dict:
        return {"offset": self.offset, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "DensePoly":
        try:
            return cls(int(data["offset"]), tuple(int(c) for c in data["coeffs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad DensePoly JSON: {exc}") from exc

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, self.offset - 1, -1):
            c = self.coefficient(k)
            if not c:
                continue
            mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if k == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)


def q_integer(n: int) -> DensePoly:
    return DensePoly(0, (1,) * n)


def q_factorial(n: int) -> DensePoly:
    return expand_cgf(CGF(range(1, n + 1), ()))


def _mul_q_integer(coeffs: list[int], a: int) -> list[int]:
    # window sums of width a == multiplication by 1 + q + ... + q**(a-1)
    if a == 1:
        return coeffs
    padded = coeffs + [0] * (a - 1)
    prefix = [0, *accumulate(padded)]
    return [prefix[k + 1] - prefix[max(0, k - a + 1)] for k in range(len(padded))]


def _div_q_integer(coeffs: list[int], b: int) -> list[int]:
    # Q * [b]_q = P  <=>  Q * (1 - q**b) = P * (1 - q)
    if b == 1:
        return coeffs
    n = len(coeffs)
    qdeg = n - b  # degree of the quotient
    if qdeg < 0:
        raise NonPolynomial(f"[{b}]_q does not divide a polynomial of degree {n - 1}")
    quot = [0] * (n + 1)
    prev = 0
    for k in range(n + 1):
        cur = coeffs[k] if k < n else 0
        r = cur - prev
        prev = cur
        quot[k] = r + (quot[k - b] if k >= b else 0)
    if any(quot[qdeg + 1:]):
        raise NonPolynomial(f"division by [{b}]_q leaves a remainder")
    return quot[: qdeg + 1]


def expand_cgf(g: CGF) -> DensePoly:
    """Expand a CGF into its coefficient vector.

    Raises NonPolynomial if some division leaves a remainder and
    NegativeCoefficient if the exact quotient has a negative coefficient.
    """
    r = g.reduced()
    coeffs = [1]
    for a in sorted(r.num):
        coeffs = _mul_q_integer(coeffs, a)
    for b in sorted(r.den, reverse=True):
        coeffs = _div_q_integer(coeffs, b)
    if any(c < 0 for c in coeffs):
        raise NegativeCoefficient("expanded quotient has a negative coefficient")
    return DensePoly(g.shift, tuple(coeffs))


def _power_sum_difference(num: Sequence[int], den: Sequence[int], d: int) -> int:
    # each entry contributes a**d - 1, so padding with [1]_q changes nothing
    a, b = Counter(num), Counter(den)
    common = a & b
    a -= common
    b -= common
    return sum((v**d - 1) * m for v, m in a.items()) - sum((v**d - 1) * m for v, m in b.items())


def cgf_cumulant(g: CGF, d: int) -> Fraction:
    """d-th cumulant of the distribution of a CGF, without expansion.

    Uses the padded multisets, so unequal numerator and denominator sizes
    are handled as if the shorter side carried extra [1]_q factors.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if d == 1:
        return g.shift + Fraction(_power_sum_difference(g.num, g.den, 1), 2)
    bd = bernoulli(d)
    if bd == 0:
        return Fraction(0)
    return bd / d * _power_sum_difference(g.num, g.den, d)


def moments_from_poly(p: DensePoly, upto: int) -> list[Fraction]:
    """Raw moments mu_1..mu_upto of the distribution P[X=k] ~ coeff of q**k."""
    total = p.mass
    if total <= 0:
        raise ZeroMass("polynomial has no mass")
    sums = [0] * (upto + 1)
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        x = p.offset + i
        xp = c
        for dd in range(1, upto + 1):
            xp *= x
            sums[dd] += xp
    return [Fraction(s, total) for s in sums[1:]]


def cumulants_from_moments(mu: Sequence[Fraction]) -> list[Fraction]:
    """Invert mu_d = kappa_d + sum_{m<d} C(d-1, m-1) kappa_m mu_{d-m}."""
    if not mu:
        raise ValueError("moment list must be nonempty")
    mus = [Fraction(1)] + [Fraction(x) for x in mu]
    kappa = [Fraction(0)]
    for d in range(1, len(mus)):
        s = sum(comb(d - 1, m - 1) * kappa[m] * mus[d - m] for m in range(1, d))
        kappa.append(mus[d] - s)
    return kappa[1:]


def standardize_value(kappa_d: Fraction, kappa_2: Fraction, d: int, digits: int = 40) -> float:
    """kappa_d / kappa_2**(d/2) as a float via a high-precision decimal."""
    if kappa_2 <= 0:
        raise DegenerateDistribution("variance is zero")
    kappa_d = Fraction(kappa_d)
    kappa_2 = Fraction(kappa_2)
    if kappa_d == 0:
        return 0.0
    with localcontext() as ctx:
        ctx.prec = digits
        if d % 2 == 0:
            ratio = kappa_d / kappa_2 ** (d // 2)
            value = Decimal(ratio.numerator) / Decimal(ratio.denominator)
        else:
            k2 = Decimal(kappa_2.numerator) / Decimal(kappa_2.denominator)
            kd = Decimal(kappa_d.numerator) / Decimal(kappa_d.denominator)
            value = kd / (k2 ** d).sqrt()
    return float(value)


def to_float(x: Fraction) -> float:
    """float(x), saturating to +-inf instead of raising for huge rationals."""
    try:
        return float(x)
    except OverflowError:
        return math.inf if x > 0 else -math.inf


def decimal_string(x: Fraction, digits: int = 17) -> str:
    """x in scientific notation at the given number of significant digits."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits + 3
        value = Decimal(x.numerator) / Decimal(x.denominator)
    return format(value, f".{digits - 1}e") if x else "0"


@dataclass(frozen=True)
class CumulantReport:
    exact: tuple[Fraction, ...]
    standardized: tuple[float, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "exact": [str(k) for k in self.exact],
            "standardized": [repr(float(k)) for k in self.standardized],
        }


def report_from_cumulants(exact: Sequence[Fraction]) -> CumulantReport:
    exact = tuple(Fraction(k) for k in exact)
    if len(exact) < 2 or exact[1] <= 0:
        raise DegenerateDistribution("kappa_2 must be positive to standardize")
    std = [0.0, 1.0]
    for d in range(3, len(exact) + 1):
        std.append(standardize_value(exact[d - 1], exact[1], d))
    return CumulantReport(exact, tuple(std[: len(exact)]))


def standardized_cumulants(g: CGF, upto: int) -> CumulantReport:
    """Exact cumulants kappa_1..kappa_upto plus their standardized floats."""
    upto = max(upto, 2)
    return report_from_cumulants([cgf_cumulant(g, d) for d in range(1, upto + 1)])


def check_symmetry(p: DensePoly) -> bool:
    return p.coeffs == p.coeffs[::-1]


def check_unimodal(p: DensePoly) -> bool:
    c = p.coeffs
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i >= len(c) - 1


def check_log_concave(p: DensePoly) -> bool:
    c = p.coeffs
    return all(c[k] * c[k] >= c[k - 1] * c[k + 1] for k in range(1, len(c) - 1))


def riemann_estimate(a: int, b: int, d: int) -> tuple[Fraction, int, Fraction]:
    """(lower, middle, upper) of the Riemann-sum estimate for sum_{a<j<=a+b} j**(d-1)."""
    integral = Fraction((a + b) ** d - a**d, d)
    middle = sum(j ** (d - 1) for j in range(a + 1, a + b + 1))
    upper = integral + (a + b) ** (d - 1) - a ** (d - 1)
    return integral, middle, upper
