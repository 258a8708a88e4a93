"""Small-instance equivalence suites: product formulas against brute force."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable

import numpy as np

from .errors import NegativeCoefficient, NonPolynomial
from .exactpoly import (
    CGF,
    DensePoly,
    cgf_cumulant,
    cumulants_from_moments,
    expand_cgf,
    moments_from_poly,
)
from .forests import (
    DEFAULT_SEED,
    _extensions,
    all_forests,
    all_trees,
    forest_cgf,
    forest_dc_check,
    is_regular,
    labelings_to_check,
    maximal_chains,
    natural_labeling,
)
from .tableaux import (
    Partition,
    enumerate_pp,
    enumerate_ssyt,
    enumerate_syt,
    pp_size_cgf,
    ssyt_rank_cgf_hookcontent,
    ssyt_rank_cgf_weyl,
    syt_maj_cgf,
)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "failures": self.failures[:20],
            "notes": self.notes[:20],
            "seconds": round(self.seconds, 3),
        }


def partitions(n: int, max_part: int | None = None):
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name)
    t0 = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - t0
    return res


def syt_suite(max_size: int = 8) -> SuiteResult:
    def body(res):
        for n in range(1, max_size + 1):
            for parts in partitions(n):
                lam = Partition(parts)
                res.cases += 1
                brute = DensePoly.from_exponents(m for _, m in enumerate_syt(lam))
                if brute != expand_cgf(syt_maj_cgf(lam)):
                    res.failures.append(f"syt {lam}")

    return _timed("syt", body)


def ssyt_suite(max_size: int = 6, max_m: int = 4) -> SuiteResult:
    def body(res):
        for n in range(0, max_size + 1):
            for parts in partitions(n):
                lam = Partition(parts)
                for m in range(max(1, lam.length), max_m + 1):
                    res.cases += 1
                    brute = DensePoly.from_exponents(r for _, r in enumerate_ssyt(lam, m))
                    weyl = expand_cgf(ssyt_rank_cgf_weyl(lam, m))
                    hc = expand_cgf(ssyt_rank_cgf_hookcontent(lam, m))
                    if not brute == weyl == hc:
                        res.failures.append(f"ssyt {lam} m={m}")

    return _timed("ssyt", body)


def pp_suite(max_volume: int = 18) -> SuiteResult:
    def body(res):
        for a in range(1, max_volume + 1):
            for b in range(1, max_volume // a + 1):
                for c in range(1, max_volume // (a * b) + 1):
                    res.cases += 1
                    brute = DensePoly.from_exponents(s for _, s in enumerate_pp(a, b, c))
                    if brute != expand_cgf(pp_size_cgf(a, b, c)):
                        res.failures.append(f"pp {a},{b},{c}")
        total = expand_cgf(pp_size_cgf(2, 2, 2)).mass
        if total != 20:
            res.failures.append(f"pp 2,2,2 mass {total} != 20")

    return _timed("pp", body)


def _extension_stats(orders: np.ndarray, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    perms = w[orders]
    n = perms.shape[1]
    inv = np.zeros(len(perms), dtype=np.int64)
    for i in range(n):
        inv += (perms[:, i : i + 1] > perms[:, i + 1 :]).sum(axis=1)
    desc = perms[:, :-1] > perms[:, 1:]
    maj = (desc * np.arange(1, n)).sum(axis=1) if n > 1 else np.zeros(len(perms), dtype=np.int64)
    return inv, maj


def _poly(values: np.ndarray) -> DensePoly:
    counts = np.bincount(values)
    return DensePoly(0, tuple(int(c) for c in counts))


def _shift(p: DensePoly, k: int) -> DensePoly:
    return DensePoly(p.offset + k, p.coeffs)


def bw_sweep(forest, labelings) -> tuple[int, list[str], list[str]]:
    """Check both Bjorner-Wachs identities over many labelings of one forest.

    Returns (cases, failures, notes); irregular labelings where the inv
    identity happens to hold are recorded as notes, not failures.
    """
    poset = forest.poset
    orders = np.array(_extensions(poset), dtype=np.int64)
    quot = expand_cgf(forest_cgf(forest))
    hook = np.array([poset.hook(x) for x in range(poset.n)])
    cover_lo = np.array([lo for lo, _ in poset.covers], dtype=np.int64)
    cover_hi = np.array([hi for _, hi in poset.covers], dtype=np.int64)
    below = [sorted(b - {x}) for x, b in enumerate(poset.below)]
    failures, notes = [], []
    for lab in labelings:
        w = np.array(lab, dtype=np.int64)
        inv, maj = _extension_stats(orders, w)
        if len(cover_lo):
            des = cover_lo[w[cover_lo] > w[cover_hi]]
            maj_pw = int(hook[des].sum())
        else:
            maj_pw = 0
        inv_pw = sum(1 for y in range(poset.n) for x in below[y] if w[x] > w[y])
        maj_ok = _poly(maj) == _shift(quot, maj_pw)
        inv_ok = _poly(inv) == _shift(quot, inv_pw)
        regular = is_regular(poset, lab)
        tag = f"{forest} w={','.join(map(str, lab))}"
        if not maj_ok:
            failures.append(f"maj {tag}")
        if regular and not inv_ok:
            failures.append(f"inv {tag}")
        if not regular and inv_ok:
            notes.append(f"irregular but inv identity holds: {tag}")
    return len(labelings), failures, notes


def forest_suite(max_n: int = 7) -> SuiteResult:
    """Hook quotient against linear extensions under a natural labeling."""

    def body(res):
        for n in range(1, max_n + 1):
            for forest in all_forests(n):
                cases, fails, _ = bw_sweep(forest, [natural_labeling(forest)])
                res.cases += cases
                res.failures.extend(fails)

    return _timed("forest", body)


def labeling_suite(max_n: int = 7, seed: int = DEFAULT_SEED) -> SuiteResult:
    """Every forest, every labeling up to n = 5 and a seeded sample beyond."""

    def body(res):
        for n in range(1, max_n + 1):
            labs = labelings_to_check(n, seed=seed)
            for forest in all_forests(n):
                cases, fails, notes = bw_sweep(forest, labs)
                res.cases += cases
                res.failures.extend(fails)
                res.notes.extend(notes)

    return _timed("labelings", body)


def _small_cgfs(max_len: int = 3, max_entry: int = 6):
    multisets = [
        ms for k in range(1, max_len + 1) for ms in combinations_with_replacement(range(1, max_entry + 1), k)
    ]
    for num in multisets:
        for den in multisets:
            yield CGF(num, den)


def cumulant_suite(max_d: int = 5) -> SuiteResult:
    """Closed-form cumulants against cumulants of the expanded coefficients."""

    def check(res, g: CGF, label: str):
        try:
            p = expand_cgf(g)
        except (NonPolynomial, NegativeCoefficient):
            return
        res.cases += 1
        oracle = cumulants_from_moments(moments_from_poly(p, max_d))
        closed = [cgf_cumulant(g, d) for d in range(1, max_d + 1)]
        if oracle != closed:
            res.failures.append(label)

    def body(res):
        for g in _small_cgfs():
            check(res, g, f"cgf {g.num}/{g.den}")
        for n in range(1, 7):
            for parts in partitions(n):
                lam = Partition(parts)
                check(res, syt_maj_cgf(lam), f"syt {lam}")
                for m in range(lam.length, 5):
                    check(res, ssyt_rank_cgf_weyl(lam, m), f"ssyt {lam} m={m}")
        for a, b, c in [(1, 1, 1), (2, 2, 2), (2, 3, 3), (3, 3, 2)]:
            check(res, pp_size_cgf(a, b, c), f"pp {a},{b},{c}")
        for n in range(1, 8):
            for tree in all_trees(n):
                check(res, forest_cgf(tree), f"forest {tree}")

    return _timed("cumulants", body)


def chain_suite(max_n: int = 7, degrees=(2, 3, 4)) -> SuiteResult:
    def body(res):
        for n in range(1, max_n + 1):
            for tree in all_trees(n):
                for chain in maximal_chains(tree):
                    for d in degrees:
                        res.cases += 1
                        left, right = forest_dc_check(tree, chain, d)
                        if left != right:
                            res.failures.append(f"{tree} chain={chain} d={d}")

    return _timed("chain", body)


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "syt": syt_suite,
    "ssyt": ssyt_suite,
    "pp": pp_suite,
    "forest": forest_suite,
    "cumulants": cumulant_suite,
    "chain": chain_suite,
    "labelings": labeling_suite,
}


def run_suites(names=None, seed: int = DEFAULT_SEED) -> list[SuiteResult]:
    out = []
    for name in names or SUITES:
        if name == "labelings":
            out.append(labeling_suite(seed=seed))
        else:
            out.append(SUITES[name]())
    return out
