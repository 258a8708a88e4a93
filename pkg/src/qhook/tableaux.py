"""Partitions, their q-hook generating functions, and SSYT-side statistics."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import prod
from statistics import median
from typing import Iterator

from .dustpan import WeightMultiset, hat
from .errors import (
    DegenerateDistribution,
    EmptyPartition,
    InstanceTooLarge,
    LengthExceedsM,
    ParseError,
    SingleLevel,
)
from .exactpoly import CGF, bernoulli, to_float

MAX_ENUM_SIZE = 10
MAX_SSYT_COUNT = 10**6
MAX_PP_VOLUME = 27


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (i, j), 0-based, in row-major order."""
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield i, j

    def padded(self, m: int) -> tuple[int, ...]:
        if m < self.length:
            raise LengthExceedsM(f"partition has {self.length} rows but m = {m}")
        return self.parts + (0,) * (m - self.length)

    def scaled(self, c: int) -> "Partition":
        return Partition(tuple(c * p for p in self.parts))

    def __str__(self):
        return ",".join(map(str, self.parts))


def parse_partition(text: str) -> Partition:
    """Parse "8,4,3,1,1" (trailing zeros allowed and dropped)."""
    text = text.strip()
    if not text:
        return Partition()
    parts = []
    pos = 0
    for piece in text.split(","):
        token = piece.strip()
        try:
            parts.append(int(token))
        except ValueError:
            raise ParseError(f"not an integer: {token!r}", position=pos) from None
        pos += len(piece) + 1
    try:
        return Partition(tuple(parts))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def staircase(n: int) -> Partition:
    """delta_n = (n-1, n-2, ..., 1, 0)."""
    return Partition(tuple(range(n - 1, 0, -1)))


def rectangle(a: int, b: int) -> Partition:
    """(b^a): a rows of length b."""
    return Partition((b,) * a)


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def hooks(lam) -> tuple[int, ...]:
    lam = _as_partition(lam)
    conj = lam.conjugate.parts
    out = [lam.parts[i] - j + conj[j] - i - 1 for i, j in lam.cells()]
    return tuple(sorted(out, reverse=True))


def contents(lam) -> tuple[int, ...]:
    lam = _as_partition(lam)
    return tuple(sorted((j - i for i, j in lam.cells()), reverse=True))


def rank_min(lam) -> int:
    lam = _as_partition(lam)
    return sum(i * p for i, p in enumerate(lam.parts))


def syt_maj_cgf(lam) -> CGF:
    lam = _as_partition(lam)
    if lam.size == 0:
        raise EmptyPartition("SYT generating function needs a nonempty shape")
    return CGF(range(1, lam.size + 1), hooks(lam), rank_min(lam))


def ssyt_rank_cgf_weyl(lam, m: int) -> CGF:
    lam = _as_partition(lam)
    row = lam.padded(m)
    num, den = [], []
    for i in range(m):
        for j in range(i + 1, m):
            num.append(row[i] - row[j] + j - i)
            den.append(j - i)
    return CGF(num, den, rank_min(lam))


def ssyt_rank_cgf_hookcontent(lam, m: int) -> CGF:
    lam = _as_partition(lam)
    lam.padded(m)
    return CGF([m + c for c in contents(lam)], hooks(lam), rank_min(lam))


def pp_size_cgf(a: int, b: int, c: int) -> CGF:
    if min(a, b, c) < 1:
        raise ValueError("box dimensions must be positive")
    num, den = Counter(), Counter()
    # i+j+k ranges over a small set; count multiplicities instead of looping abc times
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                num[i + j + k - 1] += 1
                den[i + j + k - 2] += 1
    return CGF(tuple(num.elements()), tuple(den.elements()), 0)


def ssyt_cumulant(lam, m: int, d: int, form: str = "weyl") -> Fraction:
    """kappa_d of SSYT rank for shape lam with entries <= m, without building the CGF.

    ``form="weyl"`` sums over row pairs and skips pairs of equal rows, so it
    stays cheap when m is large but the shape has few distinct row lengths.
    ``form="hookcontent"`` sums over cells and is meant for small shapes.
    """
    lam = _as_partition(lam)
    row = lam.padded(m)
    if form == "hookcontent":
        num = [m + c for c in contents(lam)]
        den = list(hooks(lam))
    elif form == "weyl":
        num, den = [], []
        for i in range(m):
            ri = row[i]
            if ri == 0:
                break
            for j in range(i + 1, m):
                if row[j] != ri:
                    num.append(ri - row[j] + j - i)
                    den.append(j - i)
    else:
        raise ValueError(f"unknown form {form!r}")
    if d == 1:
        return rank_min(lam) + Fraction(sum(num) - sum(den), 2)
    bd = bernoulli(d)
    if bd == 0:
        return Fraction(0)
    return bd / d * (sum(a**d for a in num) - sum(b**d for b in den))


# ---------------------------------------------------------------- enumeration


def _guard_size(lam: Partition):
    if lam.size > MAX_ENUM_SIZE:
        raise InstanceTooLarge(f"|lambda| = {lam.size} exceeds {MAX_ENUM_SIZE}")


def enumerate_syt(lam) -> list[tuple[tuple[tuple[int, ...], ...], int]]:
    """All standard Young tableaux of shape lam with their major index."""
    lam = _as_partition(lam)
    _guard_size(lam)
    n = lam.size
    out = []
    rows: list[list[int]] = [[] for _ in lam.parts]

    def place(k: int):
        if k > n:
            tab = tuple(tuple(r) for r in rows)
            row_of = {v: i for i, r in enumerate(tab) for v in r}
            maj = sum(i for i in range(1, n) if row_of[i + 1] > row_of[i])
            out.append((tab, maj))
            return
        for i, target in enumerate(lam.parts):
            if len(rows[i]) < target and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(k + 1)
                rows[i].pop()

    place(1)
    return out


def enumerate_ssyt(lam, m: int) -> list[tuple[tuple[tuple[int, ...], ...], int]]:
    """All SSYT of shape lam with entries in 1..m and their rank sum (i-1)*alpha_i."""
    lam = _as_partition(lam)
    lam.padded(m)
    _guard_size(lam)
    count = prod(m + c for c in contents(lam)) // prod(hooks(lam))
    if count > MAX_SSYT_COUNT:
        raise InstanceTooLarge(f"{count} tableaux exceeds {MAX_SSYT_COUNT}")
    cells = list(lam.cells())
    fill: dict[tuple[int, int], int] = {}
    out = []

    def place(idx: int):
        if idx == len(cells):
            tab = tuple(tuple(fill[i, j] for j in range(p)) for i, p in enumerate(lam.parts))
            out.append((tab, sum(v - 1 for v in fill.values())))
            return
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, fill[i, j - 1])
        if i > 0:
            lo = max(lo, fill[i - 1, j] + 1)
        for v in range(lo, m + 1):
            fill[i, j] = v
            place(idx + 1)
        fill.pop((i, j), None)

    place(0)
    return out


def enumerate_pp(a: int, b: int, c: int) -> list[tuple[tuple[tuple[int, ...], ...], int]]:
    """Plane partitions inside an a x b x c box, as a x b matrices with their size."""
    if min(a, b, c) < 1:
        raise ValueError("box dimensions must be positive")
    if a * b * c > MAX_PP_VOLUME:
        raise InstanceTooLarge(f"box volume {a * b * c} exceeds {MAX_PP_VOLUME}")
    grid = [[0] * b for _ in range(a)]
    out = []

    def place(idx: int):
        if idx == a * b:
            mat = tuple(tuple(r) for r in grid)
            out.append((mat, sum(map(sum, mat))))
            return
        i, j = divmod(idx, b)
        hi = c
        if i > 0:
            hi = min(hi, grid[i - 1][j])
        if j > 0:
            hi = min(hi, grid[i][j - 1])
        for v in range(hi + 1):
            grid[i][j] = v
            place(idx + 1)
        grid[i][j] = 0

    place(0)
    return out


# ---------------------------------------------------------------- statistics


def aft(lam) -> int:
    lam = _as_partition(lam)
    if lam.size == 0:
        raise EmptyPartition("aft needs a nonempty partition")
    return lam.size - max(lam.parts[0], lam.length)


@dataclass(frozen=True)
class ExpNotation:
    """Distinct row lengths (decreasing) with multiplicities, padded to m rows."""

    levels: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.levels)

    @property
    def m(self) -> int:
        return sum(e for _, e in self.levels)

    @property
    def size(self) -> int:
        return sum(l * e for l, e in self.levels)

    @property
    def e2(self) -> int:
        """Second-largest multiplicity (0 when there is a single level)."""
        mult = sorted((e for _, e in self.levels), reverse=True)
        return mult[1] if len(mult) > 1 else 0

    def to_json(self) -> list[list[int]]:
        return [[l, e] for l, e in self.levels]


def exp_notation(lam, m: int) -> ExpNotation:
    lam = _as_partition(lam)
    row = lam.padded(m)
    counts = Counter(row)
    return ExpNotation(tuple(sorted(counts.items(), reverse=True)))


def weft(lam, m: int) -> Fraction:
    levels = exp_notation(lam, m).levels
    k = len(levels)
    if k < 2:
        raise SingleLevel("weft needs at least two distinct row lengths")
    ell = [l for l, _ in levels]
    mult = [e for _, e in levels]
    prefix = [0]
    for e in mult:
        prefix.append(prefix[-1] + e)
    total = 0
    for a in range(k):
        for b in range(a + 1, k):
            gap = ell[a] - ell[b]
            span = prefix[b + 1] - prefix[a]
            total += gap * mult[a] * mult[b] * (gap - 1 + span)
    return Fraction(total, (ell[0] - ell[-1] - 1 + m) ** 2)


@dataclass(frozen=True)
class DistanceProfile:
    """Row-ratio weights of a padded partition and their pairwise differences.

    Differences are kept as (integer gap, multiplicity) pairs.  Dividing by
    lambda_1 is deferred, since it cancels in every standardized quantity.
    """

    lam: Partition
    m: int
    gaps: tuple[tuple[int, int], ...]

    @property
    def scale(self) -> int:
        return self.lam.parts[0]

    @cached_property
    def t(self) -> WeightMultiset:
        return WeightMultiset(tuple(Fraction(p, self.scale) for p in self.lam.padded(self.m)))

    @cached_property
    def delta(self) -> WeightMultiset:
        vals = []
        for g, mult in self.gaps:
            vals.extend([Fraction(g, self.scale)] * mult)
        return WeightMultiset(tuple(vals))

    @cached_property
    def integer_delta(self) -> WeightMultiset:
        """The distance multiset before dividing by lambda_1."""
        vals = []
        for g, mult in self.gaps:
            vals.extend([g] * mult)
        return WeightMultiset(tuple(vals))

    @property
    def degenerate(self) -> bool:
        return not any(g for g, _ in self.gaps)

    @cached_property
    def hat_delta(self) -> WeightMultiset:
        return hat(self.integer_delta)

    def power_sum(self, d: int) -> int:
        """S_d = sum over i<j of (lambda_i - lambda_j)**d."""
        return sum(mult * g**d for g, mult in self.gaps)

    def standardized_cumulant(self, d: int) -> Fraction:
        """kappa_d of the standardized uniform sum over the distance multiset."""
        if self.degenerate:
            raise DegenerateDistribution("all rows are equal; the distance multiset is zero")
        if d == 1:
            return Fraction(0)
        if d % 2:
            return Fraction(0)
        ratio = Fraction(self.power_sum(d), self.power_sum(2) ** (d // 2))
        return bernoulli(d) / d * 12 ** (d // 2) * ratio


def distance_profile(lam, m: int) -> DistanceProfile:
    lam = _as_partition(lam)
    if lam.size == 0:
        raise EmptyPartition("distance profile needs lambda_1 > 0")
    levels = exp_notation(lam, m).levels
    gaps: Counter = Counter()
    for a in range(len(levels)):
        for b in range(a + 1, len(levels)):
            gaps[levels[a][0] - levels[b][0]] += levels[a][1] * levels[b][1]
    zero_pairs = sum(e * (e - 1) // 2 for _, e in levels)
    if zero_pairs:
        gaps[0] += zero_pairs
    return DistanceProfile(lam, m, tuple(sorted(gaps.items(), reverse=True)))


@dataclass(frozen=True)
class CriteriaReport:
    shape: Partition
    m: int
    n: int
    k: int
    ell_1: int
    e_1: int
    e_k: int
    e2: int
    exp: ExpNotation
    n_over_m: Fraction
    lambda1_over_m3: Fraction
    weft: Fraction | None
    m2_over_k_ell1: Fraction | None
    e2_ratio: Fraction | None
    corner_product: Fraction
    rectangle: dict | None

    def to_json(self) -> dict:
        def render(x):
            if x is None:
                return None
            return {"exact": str(x), "float": to_float(x)}

        out = {
            "shape": str(self.shape),
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "ell_1": self.ell_1,
            "e_1": self.e_1,
            "e_k": self.e_k,
            "e2": self.e2,
            "exp_notation": self.exp.to_json(),
            "n_over_m": render(self.n_over_m),
            "lambda1_over_m3": render(self.lambda1_over_m3),
            "weft": render(self.weft),
            "m2_over_k_ell1_k_plus_ell1": render(self.m2_over_k_ell1),
            "e2_over_k_ell1m_plus1_sq": render(self.e2_ratio),
            "ell1_e1_ek_over_ell1_plus_m": render(self.corner_product),
        }
        if self.rectangle is not None:
            out["rectangle"] = dict(self.rectangle)
        return out


def classify_ssyt(lam, m: int) -> CriteriaReport:
    """Per-instance diagnostics consumed by the SSYT limit criteria."""
    lam = _as_partition(lam)
    ex = exp_notation(lam, m)
    k = ex.k
    ell1 = ex.levels[0][0]
    e1, ek = ex.levels[0][1], ex.levels[-1][1]
    w = weft(lam, m) if k >= 2 else None
    crit_mk = Fraction(m * m, k * ell1 * (k + ell1)) if ell1 else None
    crit_e2 = Fraction(ex.e2) / (k * (Fraction(ell1, m) + 1) ** 2)
    rect = None
    if lam.size and len(set(lam.parts)) == 1:
        a, b, c = lam.length, lam.parts[0], m - lam.length
        rect = {"a": a, "b": b, "c": c, "median": median((a, b, c)), "ab": a * b}
    return CriteriaReport(
        shape=lam,
        m=m,
        n=lam.size,
        k=k,
        ell_1=ell1,
        e_1=e1,
        e_k=ek,
        e2=ex.e2,
        exp=ex,
        n_over_m=Fraction(lam.size, m),
        lambda1_over_m3=Fraction(ell1, m**3),
        weft=w,
        m2_over_k_ell1=crit_mk,
        e2_ratio=crit_e2,
        corner_product=Fraction(ell1 * e1 * ek, ell1 + m),
        rectangle=rect,
    )


def first_column_reduction(lam, m: int) -> Partition:
    """Subtract lambda_m from every row; the rank distribution only shifts."""
    lam = _as_partition(lam)
    row = lam.padded(m)
    return Partition(tuple(r - row[-1] for r in row))


def pp_rank_offset(a: int, b: int, c: int) -> int:
    """Constant K with |pi| + |T| = K under the box bijection.

    Here pi fits in an a x b x c box and T is the matching SSYT of shape (b^a)
    with entries in 1..a+c; |T| is the entry sum, i.e. rank(T) + ab.
    """
    return a * b * c + b * a * (a + 1) // 2


__all__ = [
    "Partition",
    "parse_partition",
    "staircase",
    "rectangle",
    "hooks",
    "contents",
    "rank_min",
    "syt_maj_cgf",
    "ssyt_rank_cgf_weyl",
    "ssyt_rank_cgf_hookcontent",
    "pp_size_cgf",
    "ssyt_cumulant",
    "enumerate_syt",
    "enumerate_ssyt",
    "enumerate_pp",
    "aft",
    "ExpNotation",
    "exp_notation",
    "weft",
    "DistanceProfile",
    "distance_profile",
    "CriteriaReport",
    "classify_ssyt",
    "first_column_reduction",
    "pp_rank_offset",
]
