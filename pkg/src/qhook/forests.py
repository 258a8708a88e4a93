"""Rooted forests as posets and the q-hook formula for their linear extensions.

Orientation: roots are maximal, children sit below their parent, so the
hook of x counts x together with all of its descendants.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from .dustpan import WeightMultiset, hat
from .errors import (
    BadParameters,
    ChainNotMaximal,
    InstanceTooLarge,
    NotATree,
    NotStandardized,
    ParseError,
    RankTooLarge,
)
from .exactpoly import CGF, DensePoly, bernoulli, expand_cgf, report_from_cumulants

MAX_EXTENSION_N = 10
DEFAULT_SEED = 20240601
SAMPLED_LABELINGS = 200


# ---------------------------------------------------------------- posets


@dataclass(frozen=True)
class FinitePoset:
    """A poset on 0..n-1 given by its cover relations (lower, upper)."""

    n: int
    covers: tuple[tuple[int, int], ...]

    @cached_property
    def below(self) -> tuple[frozenset[int], ...]:
        """below[x] = {t : t <= x}, including x."""
        down = [set() for _ in range(self.n)]
        for lo, hi in self.covers:
            down[hi].add(lo)
        memo: dict[int, frozenset[int]] = {}

        def close(x: int) -> frozenset[int]:
            if x not in memo:
                acc = {x}
                for y in down[x]:
                    acc |= close(y)
                memo[x] = frozenset(acc)
            return memo[x]

        return tuple(close(x) for x in range(self.n))

    def less(self, x: int, y: int) -> bool:
        return x != y and x in self.below[y]

    def hook(self, x: int) -> int:
        return len(self.below[x])

    @property
    def is_forest(self) -> bool:
        lowers = [lo for lo, _ in self.covers]
        return len(set(lowers)) == len(lowers)


def diamond() -> FinitePoset:
    """bottom=0 < left=1, right=2 < top=3."""
    return FinitePoset(4, ((0, 1), (0, 2), (1, 3), (2, 3)))


def chain_poset(n: int) -> FinitePoset:
    return FinitePoset(n, tuple((i, i + 1) for i in range(n - 1)))


# ---------------------------------------------------------------- forests


@dataclass(frozen=True)
class RootedForest:
    """children[x] lists the nodes covered by x; roots are the maximal nodes."""

    children: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        kids = tuple(tuple(c) for c in self.children)
        n = len(kids)
        seen = [0] * n
        for c in kids:
            for y in c:
                if not 0 <= y < n:
                    raise BadParameters(f"child index {y} out of range")
                seen[y] += 1
        if any(s > 1 for s in seen):
            raise BadParameters("a node has more than one parent")
        object.__setattr__(self, "children", kids)
        if n and not self.roots:
            raise BadParameters("forest has a cycle")
        # reachability from roots rules out cycles among non-roots
        reached = 0
        stack = list(self.roots)
        while stack:
            x = stack.pop()
            reached += 1
            stack.extend(kids[x])
        if reached != n:
            raise BadParameters("forest has a cycle")

    @property
    def n(self) -> int:
        return len(self.children)

    @cached_property
    def parent(self) -> tuple[int | None, ...]:
        par: list[int | None] = [None] * self.n
        for x, c in enumerate(self.children):
            for y in c:
                par[y] = x
        return tuple(par)

    @cached_property
    def roots(self) -> tuple[int, ...]:
        has_parent = {y for c in self.children for y in c}
        return tuple(x for x in range(self.n) if x not in has_parent)

    @property
    def is_tree(self) -> bool:
        return len(self.roots) == 1

    @cached_property
    def poset(self) -> FinitePoset:
        return FinitePoset(self.n, tuple((y, x) for x, c in enumerate(self.children) for y in c))

    @cached_property
    def subtree_sizes(self) -> tuple[int, ...]:
        size = [1] * self.n
        for x in reversed(self.preorder()):
            for y in self.children[x]:
                size[x] += size[y]
        return tuple(size)

    def ancestors(self, x: int) -> list[int]:
        """x and everything above it, bottom to top."""
        out = [x]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def preorder(self) -> list[int]:
        out = []
        stack = list(reversed(self.roots))
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(reversed(self.children[x]))
        return out

    def depth_of(self, x: int) -> int:
        return len(self.ancestors(x))

    @classmethod
    def from_parents(cls, parents: Sequence[int | None]) -> "RootedForest":
        kids: list[list[int]] = [[] for _ in parents]
        for x, p in enumerate(parents):
            if p is not None:
                kids[p].append(x)
        return cls(tuple(tuple(k) for k in kids))

    def without(self, removed: Iterable[int]) -> "RootedForest":
        """Induced subforest on the remaining nodes, relabelled in increasing order."""
        gone = set(removed)
        keep = [x for x in range(self.n) if x not in gone]
        index = {x: i for i, x in enumerate(keep)}
        parents = []
        for x in keep:
            p = self.parent[x]
            while p is not None and p in gone:
                p = self.parent[p]
            parents.append(index[p] if p is not None else None)
        return RootedForest.from_parents(parents)

    def to_text(self) -> str:
        def enc(x: int) -> str:
            return "(" + "".join(enc(y) for y in self.children[x]) + ")"

        return " ".join(enc(r) for r in self.roots)

    def canonical(self) -> str:
        """Isomorphism-invariant encoding (children sorted)."""

        def enc(x: int) -> str:
            return "(" + "".join(sorted((enc(y) for y in self.children[x]), reverse=True)) + ")"

        return " ".join(sorted((enc(r) for r in self.roots), reverse=True))

    def __str__(self):
        return self.to_text()


def parse_forest(text: str) -> RootedForest:
    """Parse nested parentheses; nodes are numbered in pre-order."""
    parents: list[int | None] = []
    stack: list[int] = []
    for pos, ch in enumerate(text):
        if ch == "(":
            parents.append(stack[-1] if stack else None)
            stack.append(len(parents) - 1)
        elif ch == ")":
            if not stack:
                raise ParseError("unbalanced ')'", position=pos)
            stack.pop()
        elif ch.isspace():
            if stack:
                raise ParseError("whitespace inside a tree", position=pos)
        else:
            raise ParseError(f"unexpected character {ch!r}", position=pos)
    if stack:
        raise ParseError("unclosed '('", position=len(text))
    return RootedForest.from_parents(parents)


def _as_poset(P) -> FinitePoset:
    return P.poset if isinstance(P, RootedForest) else P


def poset_hooks(P) -> tuple[int, ...]:
    if isinstance(P, RootedForest):
        return tuple(sorted(P.subtree_sizes, reverse=True))
    return tuple(sorted((P.hook(x) for x in range(P.n)), reverse=True))


def forest_rank(P: RootedForest) -> int:
    if P.n == 0:
        raise BadParameters("rank of an empty forest is undefined")
    depth = [0] * P.n
    for x in P.preorder():
        p = P.parent[x]
        depth[x] = 1 if p is None else depth[p] + 1
    return max(depth)


def forest_cgf(P) -> CGF:
    return CGF(range(1, _as_poset(P).n + 1), poset_hooks(P), 0)


def forest_cumulant(P, d: int) -> Fraction:
    n = _as_poset(P).n
    bd = bernoulli(d)
    return bd / d * (sum(k**d for k in range(1, n + 1)) - sum(h**d for h in poset_hooks(P)))


def lp_degree(P) -> int:
    n = _as_poset(P).n
    return n * (n + 1) // 2 - sum(poset_hooks(P))


# ---------------------------------------------------------------- labelings


def parse_labeling(text: str, n: int | None = None) -> tuple[int, ...]:
    vals = []
    pos = 0
    for piece in text.split(","):
        try:
            vals.append(int(piece.strip()))
        except ValueError:
            raise ParseError(f"not an integer: {piece.strip()!r}", position=pos) from None
        pos += len(piece) + 1
    w = tuple(vals)
    check_labeling(w, n if n is not None else len(w))
    return w


def check_labeling(w: Sequence[int], n: int):
    if sorted(w) != list(range(1, n + 1)):
        raise BadParameters(f"labeling must be a bijection onto 1..{n}")


def natural_labeling(P) -> tuple[int, ...]:
    """Label by a fixed linear extension (postorder for forests)."""
    poset = _as_poset(P)
    if isinstance(P, RootedForest):
        order = []

        def post(x):
            for y in P.children[x]:
                post(y)
            order.append(x)

        for r in P.roots:
            post(r)
    else:
        order = sorted(range(poset.n), key=lambda x: (poset.hook(x), x))
    w = [0] * poset.n
    for i, x in enumerate(order, start=1):
        w[x] = i
    return tuple(w)


def perm_inv(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def perm_maj(perm: Sequence[int]) -> int:
    return sum(i + 1 for i in range(len(perm) - 1) if perm[i] > perm[i + 1])


@dataclass(frozen=True)
class LinearExtensionReport:
    extensions: tuple[tuple[tuple[int, ...], int, int], ...]
    inversion_set: frozenset[tuple[int, int]]
    descent_set: frozenset[int]
    inv: int
    maj: int

    @property
    def words(self) -> list[str]:
        return ["".join(map(str, perm)) for perm, _, _ in self.extensions]

    def maj_poly(self) -> DensePoly:
        return DensePoly.from_exponents(m for _, _, m in self.extensions)

    def inv_poly(self) -> DensePoly:
        return DensePoly.from_exponents(i for _, i, _ in self.extensions)


def _extensions(poset: FinitePoset) -> list[tuple[int, ...]]:
    down = [set() for _ in range(poset.n)]
    for lo, hi in poset.covers:
        down[hi].add(lo)
    out = []
    placed = [False] * poset.n
    seq: list[int] = []

    def grow():
        if len(seq) == poset.n:
            out.append(tuple(seq))
            return
        for x in range(poset.n):
            if not placed[x] and all(placed[y] for y in down[x]):
                placed[x] = True
                seq.append(x)
                grow()
                seq.pop()
                placed[x] = False

    grow()
    return out


def linear_extensions(P, w: Sequence[int]) -> LinearExtensionReport:
    """Linear extensions as label words w(p_1)...w(p_n), smaller elements first."""
    poset = _as_poset(P)
    if poset.n > MAX_EXTENSION_N:
        raise InstanceTooLarge(f"n = {poset.n} exceeds {MAX_EXTENSION_N}")
    check_labeling(w, poset.n)
    exts = []
    for order in _extensions(poset):
        perm = tuple(w[x] for x in order)
        exts.append((perm, perm_inv(perm), perm_maj(perm)))
    exts.sort()
    inv_set = frozenset(
        (w[x], w[y]) for y in range(poset.n) for x in poset.below[y] if x != y and w[x] > w[y]
    )
    des = {x for lo_hi in poset.covers for x in [lo_hi[0]] if w[lo_hi[0]] > w[lo_hi[1]]}
    return LinearExtensionReport(
        extensions=tuple(exts),
        inversion_set=inv_set,
        descent_set=frozenset(w[x] for x in des),
        inv=len(inv_set),
        maj=sum(poset.hook(x) for x in des),
    )


def is_natural(P, w: Sequence[int]) -> bool:
    poset = _as_poset(P)
    return all(w[lo] < w[hi] for lo, hi in poset.covers)


def is_regular(P, w: Sequence[int]) -> bool:
    poset = _as_poset(P)
    n = poset.n
    for z in range(n):
        for x in poset.below[z]:
            if x == z:
                continue
            lo, hi = sorted((w[x], w[z]))
            for y in range(n):
                if lo < w[y] < hi and not (poset.less(x, y) or poset.less(y, z)):
                    return False
    return True


@dataclass(frozen=True)
class BWReport:
    maj_holds: bool
    inv_holds: bool
    regular: bool
    maj_gf: DensePoly
    inv_gf: DensePoly
    quotient: DensePoly | None
    maj_shift: int
    inv_shift: int

    def to_json(self) -> dict:
        return {
            "maj_holds": self.maj_holds,
            "inv_holds": self.inv_holds,
            "regular": self.regular,
            "maj_shift": self.maj_shift,
            "inv_shift": self.inv_shift,
            "maj_gf": self.maj_gf.to_json(),
            "inv_gf": self.inv_gf.to_json(),
            "quotient": None if self.quotient is None else self.quotient.to_json(),
        }


def _shifted(p: DensePoly, k: int) -> DensePoly:
    return DensePoly(p.offset + k, p.coeffs)


def verify_bw(P, w: Sequence[int]) -> BWReport:
    """Compare the inv/maj generating functions of L(P, w) with the hook quotient."""
    from .errors import NonPolynomial, NegativeCoefficient

    rep = linear_extensions(P, w)
    try:
        quot = expand_cgf(forest_cgf(P))
    except (NonPolynomial, NegativeCoefficient):
        quot = None
    maj_gf, inv_gf = rep.maj_poly(), rep.inv_poly()
    return BWReport(
        maj_holds=quot is not None and maj_gf == _shifted(quot, rep.maj),
        inv_holds=quot is not None and inv_gf == _shifted(quot, rep.inv),
        regular=is_regular(P, w),
        maj_gf=maj_gf,
        inv_gf=inv_gf,
        quotient=quot,
        maj_shift=rep.maj,
        inv_shift=rep.inv,
    )


def labelings_to_check(n: int, seed: int = DEFAULT_SEED, samples: int = SAMPLED_LABELINGS) -> list[tuple[int, ...]]:
    """Every labeling for n <= 5, otherwise a seeded random sample."""
    if n <= 5:
        return list(permutations(range(1, n + 1)))
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        out.append(tuple(perm))
    return out


# ---------------------------------------------------------------- tree families


def standardize(P: RootedForest) -> RootedForest:
    """Join the roots under a new top node, then strip roots with a single child."""
    if P.n == 0:
        raise BadParameters("cannot standardize an empty forest")
    parents = list(P.parent)
    if len(P.roots) > 1:
        top = len(parents)
        parents = [top if p is None else p for p in parents] + [None]
    tree = RootedForest.from_parents(parents)
    while tree.n > 1 and len(tree.children[tree.roots[0]]) == 1:
        tree = tree.without([tree.roots[0]])
    return tree


def chain_tree(n: int) -> RootedForest:
    return RootedForest.from_parents([None] + list(range(n - 1)))


def star_tree(n: int) -> RootedForest:
    return RootedForest.from_parents([None] + [0] * (n - 1))


def complete_binary_tree(depth: int) -> RootedForest:
    n = 2**depth - 1
    return RootedForest.from_parents([None] + [(i - 1) // 2 for i in range(1, n)])


def h_tree(n: int, r: int) -> RootedForest:
    """Chain of r nodes with n - r extra leaves under the second-smallest chain node.

    Node 0 is the root, the chain runs 0 > 1 > ... > r-1, extra leaves follow.
    """
    if not 1 < r <= n:
        raise BadParameters(f"need 1 < r <= n, got n={n}, r={r}")
    parents: list[int | None] = [None] + list(range(r - 1))
    parents += [r - 2] * (n - r)
    return RootedForest.from_parents(parents)


def all_trees(n: int) -> list[RootedForest]:
    """Every unlabeled rooted tree on n nodes, one per isomorphism class, in canonical order."""
    if n < 1:
        return []
    level = {"()"}
    for _ in range(n - 1):
        nxt = set()
        for code in level:
            tree = parse_forest(code)
            for x in range(tree.n):
                kids = [list(c) for c in tree.children]
                kids.append([])
                kids[x].append(tree.n)
                nxt.add(RootedForest(tuple(tuple(k) for k in kids)).canonical())
        level = nxt
    return [parse_forest(code) for code in sorted(level)]


def all_forests(n: int) -> list[RootedForest]:
    """Every unlabeled rooted forest on n nodes (trees on n+1 nodes minus the root)."""
    return [t.without([t.roots[0]]) for t in all_trees(n + 1)]


def maximal_chains(P: RootedForest) -> list[list[int]]:
    """Leaf-to-root paths, each listed bottom to top."""
    return [P.ancestors(x) for x in P.preorder() if not P.children[x]]


def _pick_chain(P: RootedForest, strategy: str) -> list[int]:
    chains = maximal_chains(P)
    if strategy == "leftmost":
        return chains[0]
    if strategy == "longest":
        best = max(len(c) for c in chains)
        return next(c for c in chains if len(c) == best)
    raise BadParameters(f"unknown chain strategy {strategy!r}")


def _check_chain(P: RootedForest, chain: Sequence[int]) -> list[int]:
    chain = list(chain)
    if not chain:
        raise ChainNotMaximal("chain is empty")
    ordered = sorted(chain, key=lambda x: -P.depth_of(x))
    if ordered != P.ancestors(ordered[0]) or P.children[ordered[0]]:
        raise ChainNotMaximal("chain must run from a leaf up to its root")
    return ordered


@dataclass(frozen=True)
class ElevationData:
    chain: tuple[int, ...]  # bottom to top
    n: int
    elevations: tuple[int, ...]  # sorted decreasing
    s: dict[int, int]

    @property
    def r(self) -> int:
        return len(self.chain)

    @cached_property
    def hat(self) -> WeightMultiset:
        return hat(WeightMultiset(tuple(self.elevations)))

    def to_json(self) -> dict:
        return {
            "chain": list(self.chain),
            "r": self.r,
            "elevations": list(self.elevations),
            "s": {str(k): v for k, v in self.s.items()},
        }


def elevations(P: RootedForest, strategy: str = "leftmost", chain: Sequence[int] | None = None) -> ElevationData:
    """Elevation e_u = #{v in C : u not <= v} for u off a maximal chain C."""
    if not P.is_tree:
        raise NotATree("elevations are defined for trees")
    C = _check_chain(P, chain) if chain is not None else _pick_chain(P, strategy)
    r, n = len(C), P.n
    on_chain = set(C)
    elev = []
    for u in range(n):
        if u in on_chain:
            continue
        above = sum(1 for v in P.ancestors(u) if v in on_chain)
        elev.append(r - above)
    s = {k: sum(1 for e in elev if e >= k - n + r) for k in range(n - r + 1, n + 1)}
    return ElevationData(tuple(C), n, tuple(sorted(elev, reverse=True)), s)


def _h2(x: int, y: int, deg: int) -> int:
    """Complete homogeneous symmetric polynomial of degree deg in two variables."""
    return sum(x**j * y ** (deg - j) for j in range(deg + 1))


def forest_dc_check(P: RootedForest, chain: Sequence[int], d: int) -> tuple[Fraction, Fraction]:
    """Both sides of the chain decomposition of kappa_d for a tree and a maximal chain."""
    if d < 1:
        raise BadParameters("d must be positive")
    if not P.is_tree:
        raise NotATree("chain decomposition needs a tree")
    C = _check_chain(P, chain)
    data = elevations(P, chain=C)
    n, r = P.n, data.r
    left = forest_cumulant(P, d)
    rest = P.without(C)
    inner = forest_cumulant(rest, d) if rest.n else Fraction(0)
    total = 0
    for e in data.elevations:
        for k in range(n - r + 1, n - r + e + 1):
            total += _h2(k, k - data.s[k], d - 1)
    return left, inner + bernoulli(d) / d * total


@dataclass(frozen=True)
class BoundsReport:
    lower: float
    middle: int
    upper: float
    alpha: float
    d: int

    @property
    def passes(self) -> bool:
        return self.lower <= self.middle <= self.upper

    def to_json(self) -> dict:
        return {"lower": self.lower, "middle": self.middle, "upper": self.upper,
                "alpha": self.alpha, "d": self.d, "passes": self.passes}


def generic_bounds_check(P: RootedForest, d: int, alpha: float) -> BoundsReport:
    """Check b*a**d/d * n**(d+1) <= sum k**d - sum h**d <= (1/(d+1) + 1/n) * n**(d+1)."""
    if not 0 < alpha < 1:
        raise BadParameters("alpha must lie in (0, 1)")
    if not P.is_tree:
        raise NotATree("bounds are stated for trees")
    n, r = P.n, forest_rank(P)
    if r > alpha * n:
        raise RankTooLarge(f"rank {r} exceeds alpha * n = {alpha * n}")
    x = (2 / (1 - alpha)) ** 2 - 1
    a, b = 1 / x, 1 / (x + 1)
    middle = sum(k**d for k in range(1, n + 1)) - sum(h**d for h in poset_hooks(P))
    return BoundsReport(b * a**d / d * n ** (d + 1), middle, (1 / (d + 1) + 1 / n) * n ** (d + 1), alpha, d)


def regime(n: int, r: int) -> str:
    gap = n - r
    if gap < math.sqrt(n):
        return "degenerate (n−r = o(√n)) candidate"
    if gap > n ** (11 / 12):
        return "generic (n−r = ω(n^{11/12})) candidate"
    return "open gap"


@dataclass(frozen=True)
class DegenerateReport:
    n: int
    r: int
    elevation: ElevationData
    regime: str
    e_over_r_sq: Fraction
    predicted: dict[int, float]
    exact: dict[int, float]
    sigma: float

    @property
    def gap(self) -> int:
        return self.n - self.r

    @property
    def difference(self) -> dict[int, float]:
        return {d: self.exact[d] - self.predicted[d] for d in self.predicted}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "n_minus_r": self.gap,
            "n_minus_r_over_sqrt_n": self.gap / math.sqrt(self.n),
            "regime": self.regime,
            **self.elevation.to_json(),
            "e_over_r_norm2_sq": {"exact": str(self.e_over_r_sq), "float": float(self.e_over_r_sq)},
            "hat_e": [float(v) for v in self.elevation.hat],
            "predicted_standardized": {str(d): v for d, v in self.predicted.items()},
            "exact_standardized": {str(d): v for d, v in self.exact.items()},
            "difference": {str(d): v for d, v in self.difference.items()},
            "dustpan_t": [float(v) for v in self.elevation.hat],
            "dustpan_sigma": self.sigma,
        }


def is_standardized(P: RootedForest) -> bool:
    return P.is_tree and len(P.children[P.roots[0]]) >= 2


def degenerate_diagnostics(
    P: RootedForest, upto: int = 6, strategy: str = "longest", require_standardized: bool = True
) -> DegenerateReport:
    """Compare exact standardized cumulants with the elevation-multiset prediction."""
    if require_standardized and not is_standardized(P):
        raise NotStandardized("expected a tree whose root has at least two children")
    data = elevations(P, strategy=strategy)
    n, r = P.n, data.r
    exact_rep = report_from_cumulants([forest_cumulant(P, d) for d in range(1, upto + 1)])
    t = data.hat
    predicted, exact = {}, {}
    for d in range(2, upto + 1):
        predicted[d] = float(bernoulli(d) / d) * math.fsum(float(v) ** d for v in t)
        exact[d] = exact_rep.standardized[d - 1]
    sq = math.fsum(float(v) ** 2 for v in t)
    return DegenerateReport(
        n=n,
        r=r,
        elevation=data,
        regime=regime(n, r),
        e_over_r_sq=Fraction(sum(e * e for e in data.elevations), r * r),
        predicted=predicted,
        exact=exact,
        sigma=math.sqrt(max(0.0, 1 - sq / 12)),
    )


def easy_construction_tree(t: Sequence, N: int) -> RootedForest:
    """Standardized tree whose scaled elevations approach t (largest entry 1).

    A chain v_0 < ... < v_{r-1} with r = N - |t|; each positive t_i hangs a
    leaf under v_{ceil((r-1) t_i)}, each zero entry hangs a leaf under v_1.
    """
    vals = sorted((Fraction(v) if not isinstance(v, float) else v for v in t), reverse=True)
    m = len(vals)
    if not vals or vals[0] != 1 or vals[-1] < 0:
        raise BadParameters("t must be decreasing, nonnegative, with largest entry 1")
    r = N - m
    if r < 3:
        raise BadParameters(f"N must be at least |t| + 3 = {m + 3}")
    # node j is v_{r-1-j}: node 0 is the root
    parents: list[int | None] = [None] + list(range(r - 1))
    for v in vals:
        level = math.ceil((r - 1) * v) if v > 0 else 1
        parents.append(r - 1 - level)
    return RootedForest.from_parents(parents)


__all__ = [
    "FinitePoset",
    "diamond",
    "chain_poset",
    "RootedForest",
    "parse_forest",
    "poset_hooks",
    "forest_rank",
    "forest_cgf",
    "forest_cumulant",
    "lp_degree",
    "parse_labeling",
    "natural_labeling",
    "perm_inv",
    "perm_maj",
    "LinearExtensionReport",
    "linear_extensions",
    "is_natural",
    "is_regular",
    "BWReport",
    "verify_bw",
    "labelings_to_check",
    "standardize",
    "chain_tree",
    "star_tree",
    "complete_binary_tree",
    "h_tree",
    "all_trees",
    "all_forests",
    "maximal_chains",
    "ElevationData",
    "elevations",
    "forest_dc_check",
    "BoundsReport",
    "generic_bounds_check",
    "regime",
    "DegenerateReport",
    "is_standardized",
    "degenerate_diagnostics",
    "easy_construction_tree",
]
