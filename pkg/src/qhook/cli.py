"""Command-line interface: ``qhook <command> ...``.

Exit codes: 0 success, 2 malformed input, 3 domain error, 4 guard exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .dustpan import (
    DustpanLaw,
    DustpanParams,
    char_fn,
    density_grid,
    discrete_vs_discrete_distance,
    discrete_vs_limit_distance,
    dustpan_cumulant,
    hat,
    parse_weights,
)
from .errors import DomainError, ParseError, QHookError
from .exactpoly import (
    CGF,
    DensePoly,
    cgf_cumulant,
    check_log_concave,
    check_symmetry,
    check_unimodal,
    decimal_string,
    expand_cgf,
    report_from_cumulants,
    standardize_value,
    to_float,
)
from .forests import (
    DEFAULT_SEED,
    chain_tree,
    complete_binary_tree,
    degenerate_diagnostics,
    easy_construction_tree,
    forest_cgf,
    forest_cumulant,
    h_tree,
    linear_extensions,
    natural_labeling,
    parse_forest,
    star_tree,
)
from .oracles import SUITES, run_suites
from .tableaux import (
    Partition,
    classify_ssyt,
    distance_profile,
    enumerate_pp,
    enumerate_ssyt,
    enumerate_syt,
    parse_partition,
    pp_size_cgf,
    rectangle,
    ssyt_cumulant,
    ssyt_rank_cgf_hookcontent,
    ssyt_rank_cgf_weyl,
    syt_maj_cgf,
)

TARGET_KINDS = ("syt", "ssyt", "pp", "forest")


# ---------------------------------------------------------------- parsing helpers


def _int_list(text: str, what: str) -> list[int]:
    out, pos = [], 0
    for piece in text.split(","):
        try:
            out.append(int(piece.strip()))
        except ValueError:
            raise ParseError(f"{what}: not an integer: {piece.strip()!r}", position=pos) from None
        pos += len(piece) + 1
    return out


def _box(text: str) -> tuple[int, int, int]:
    vals = _int_list(text, "box")
    if len(vals) != 3 or min(vals) < 1:
        raise ParseError("box must be three positive integers a,b,c")
    return tuple(vals)  # type: ignore[return-value]


def _float_list(text: str) -> list[float]:
    out = []
    for pos, piece in enumerate(text.split(",")):
        try:
            out.append(float(Fraction(piece.strip())))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a number: {piece.strip()!r}", position=pos) from None
    return out


@dataclass
class Target:
    """A resolved discrete distribution: its CGF and a human label."""

    kind: str
    label: str
    cgf: CGF
    shape: Partition | None = None
    m: int | None = None
    box: tuple[int, int, int] | None = None
    forest: Any = None

    def cumulant(self, d: int) -> Fraction:
        if self.kind == "ssyt":
            # pairwise form skips equal rows, so huge m stays cheap
            return ssyt_cumulant(self.shape, self.m, d)
        return cgf_cumulant(self.cgf, d)


def _require(args, name: str, kind: str):
    val = getattr(args, name, None)
    if val is None:
        raise ParseError(f"{kind} needs --{name.replace('_', '-')}")
    return val


def resolve_target(kind: str, args) -> Target:
    if kind == "syt":
        lam = parse_partition(_require(args, "shape", kind))
        return Target(kind, f"syt {lam}", syt_maj_cgf(lam), shape=lam)
    if kind == "ssyt":
        lam = parse_partition(_require(args, "shape", kind))
        m = _require(args, "m", kind)
        build = ssyt_rank_cgf_hookcontent if args.form == "hookcontent" else ssyt_rank_cgf_weyl
        # the Weyl product has C(m,2) factors; only build it when it is small
        cgf = build(lam, m) if m <= 400 or args.form == "hookcontent" else CGF((), ())
        return Target(kind, f"ssyt {lam} m={m}", cgf, shape=lam, m=m)
    if kind == "pp":
        a, b, c = _box(_require(args, "box", kind))
        return Target(kind, f"pp {a},{b},{c}", pp_size_cgf(a, b, c), box=(a, b, c))
    if kind == "forest":
        forest = parse_forest(_require(args, "tree", kind))
        return Target(kind, f"forest {forest}", forest_cgf(forest), forest=forest)
    raise ParseError(f"unknown target kind {kind!r}")


def _expand(target: Target) -> DensePoly:
    if target.kind == "ssyt" and not target.cgf.num and target.m and target.m > 400:
        target.cgf = ssyt_rank_cgf_weyl(target.shape, target.m)
    return expand_cgf(target.cgf)


def _oracle_poly(target: Target) -> DensePoly:
    if target.kind == "syt":
        return DensePoly.from_exponents(v for _, v in enumerate_syt(target.shape))
    if target.kind == "ssyt":
        return DensePoly.from_exponents(v for _, v in enumerate_ssyt(target.shape, target.m))
    if target.kind == "pp":
        return DensePoly.from_exponents(v for _, v in enumerate_pp(*target.box))
    w = natural_labeling(target.forest)
    return linear_extensions(target.forest, w).maj_poly()


# ---------------------------------------------------------------- output


def _cell(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    if x is None:
        return ""
    return str(x)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float) and not math.isfinite(x):
        return repr(x)
    return x


def emit(args, payload: dict, columns: Sequence[str] | None = None, rows: Sequence[Sequence] | None = None):
    out = args.stdout
    if args.csv and columns is not None:
        out.write(f"# qhook {__version__}\n")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows or ():
            writer.writerow([_cell(v) for v in row])
        out.write(buf.getvalue())
        return
    body = {"version": __version__, **_jsonable(payload)}
    out.write(json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False) + "\n")


# ---------------------------------------------------------------- commands


def cmd_gf(args) -> int:
    target = resolve_target(args.kind, args)
    payload: dict[str, Any] = {"target": target.label, "cgf": target.cgf.to_json()}
    rows = []
    if args.expand or args.oracle:
        poly = _expand(target)
        payload["poly"] = poly.to_json()
        payload["poly_text"] = str(poly)
        payload["mass"] = str(poly.mass)
        payload["symmetric"] = check_symmetry(poly)
        payload["unimodal"] = check_unimodal(poly)
        payload["log_concave"] = check_log_concave(poly)
        rows = [(poly.offset + i, c) for i, c in enumerate(poly.coeffs)]
        if args.oracle:
            brute = _oracle_poly(target)
            payload["oracle"] = {"agrees": brute == poly, "poly": brute.to_json()}
            if brute != poly:
                emit(args, payload)
                return 1
    emit(args, payload, ("exponent", "coefficient"), rows)
    return 0


def cmd_cumulants(args) -> int:
    target = resolve_target(args.kind, args)
    upto = max(args.upto, 2)
    exact = [target.cumulant(d) for d in range(1, upto + 1)]
    payload: dict[str, Any] = {"target": target.label, "exact": {str(d): k for d, k in enumerate(exact, 1)}}
    std = None
    if args.standardized:
        std = report_from_cumulants(exact).standardized
        payload["standardized"] = {str(d): v for d, v in enumerate(std, 1)}
    rows = [(d, exact[d - 1], std[d - 1] if std else None) for d in range(1, upto + 1)]
    emit(args, payload, ("d", "kappa_exact", "kappa_standardized"), rows)
    return 0


def _scan_params(args) -> list[int]:
    if args.params is None:
        raise ParseError("scan needs --params")
    params = []
    for piece in args.params.split(","):
        piece = piece.strip()
        if ".." in piece:
            lo, hi = _int_list(piece.replace("..", ","), "params")
            params.extend(range(lo, hi + 1))
        else:
            params.extend(_int_list(piece, "params"))
    if not params or any(a >= b for a, b in zip(params, params[1:])):
        raise ParseError("scan parameters must be nonempty and strictly increasing")
    return params


def _degrees(args) -> list[int]:
    return _int_list(args.d, "d") if args.d else [4]


def _num(x: Fraction) -> float | str:
    """A float when representable, else a 17-digit scientific string."""
    f = to_float(x)
    return f if math.isfinite(f) else decimal_string(x)


def _std_row(kappa, degrees) -> dict:
    k2 = kappa(2)
    return {f"kappa{d}_std": 1.0 if d == 2 else standardize_value(kappa(d), k2, d) for d in degrees}


def _ssyt_row(lam: Partition, m: int, degrees) -> dict:
    row: dict[str, Any] = {"m": m, **_std_row(lambda d: ssyt_cumulant(lam, m, d), degrees)}
    rep = classify_ssyt(lam, m)
    row["n_over_m"] = _num(rep.n_over_m)
    row["lambda1_over_m3"] = _num(rep.lambda1_over_m3)
    row["weft"] = _num(rep.weft) if rep.weft is not None else None
    row["k"] = rep.k
    prof = distance_profile(lam, m)
    if not prof.degenerate:
        row["limit_kappa4_std"] = _num(prof.standardized_cumulant(4))
    return row


def cmd_scan(args) -> int:
    family = args.family
    degrees = _degrees(args)
    params = None if family == "custom-list" else _scan_params(args)
    rows: list[dict] = []
    if family in ("scale-partition", "scale-rows"):
        base = parse_partition(_require(args, "base", family))
        m0 = args.m if args.m is not None else base.length
        for p in params:
            factor = 10**p if args.scale == "pow10" else p
            m = m0 if family == "scale-partition" else m0 + p
            lam = base.scaled(factor)
            label = f"10^{p}" if args.scale == "pow10" else str(p)
            row = {"param": p, "instance": f"{label}*({base}) m={m}", **_ssyt_row(lam, m, degrees)}
            rows.append(row)
    elif family == "pp-box":
        base = _int_list(_require(args, "base", family), "base")
        if len(base) != 2 or min(base) < 1:
            raise ParseError("pp-box base must be two positive integers a,b")
        a, b = base
        for c in params:
            g = pp_size_cgf(a, b, c)
            row = {"param": c, "instance": f"pp {a},{b},{c}", "median": sorted((a, b, c))[1], "ab": a * b}
            row.update(_std_row(lambda d: cgf_cumulant(g, d), degrees))
            rows.append(row)
    elif family == "tree-family":
        for n in params:
            tree = _family_tree(args, n)
            row = {"param": n, "instance": f"{args.tree_kind} n={n}", "n": tree.n}
            row.update(_std_row(lambda d: forest_cumulant(tree, d), degrees))
            rows.append(row)
    else:
        if not args.items:
            raise ParseError("custom-list needs --items")
        for i, item in enumerate(args.items.split(";")):
            target = _parse_item(item)
            row = {"param": i, "instance": target.label}
            row.update(_std_row(target.cumulant, degrees))
            rows.append(row)
    columns = sorted({k for r in rows for k in r}, key=lambda c: (c not in ("param", "instance"), c))
    emit(args, {"family": family, "rows": rows}, columns, [[r.get(c) for c in columns] for r in rows])
    return 0


def _family_tree(args, n: int):
    kind = args.tree_kind
    if kind == "h":
        if args.k is None:
            raise ParseError("tree-family h needs --k (so r = n - k)")
        return h_tree(n, n - args.k)
    if kind == "construction":
        t = parse_weights(_require(args, "t", "construction"))
        return easy_construction_tree(t.entries, n)
    if kind == "star":
        return star_tree(n)
    if kind == "chain":
        return chain_tree(n)
    if kind == "binary":
        return complete_binary_tree(n)
    raise ParseError(f"unknown tree kind {kind!r}")


def _parse_item(item: str) -> Target:
    """"ssyt 3,1 4", "syt 2,2", "pp 2,2,2" or "forest ((()))"."""
    parts = item.split()
    if not parts:
        raise ParseError("empty item in --items")
    kind = parts[0]
    ns = argparse.Namespace(shape=None, m=None, box=None, tree=None, form="weyl")
    if kind in ("syt", "ssyt") and len(parts) >= 2:
        ns.shape = parts[1]
        if kind == "ssyt":
            if len(parts) < 3:
                raise ParseError(f"ssyt item needs m: {item!r}")
            ns.m = _int_list(parts[2], "m")[0]
    elif kind == "pp" and len(parts) == 2:
        ns.box = parts[1]
    elif kind == "forest" and len(parts) >= 2:
        ns.tree = " ".join(parts[1:])
    else:
        raise ParseError(f"cannot parse item {item!r}")
    return resolve_target(kind, ns)


def cmd_classify(args) -> int:
    kind = args.kind
    if kind == "ssyt":
        lam = parse_partition(_require(args, "shape", kind))
        m = _require(args, "m", kind)
        payload = classify_ssyt(lam, m).to_json()
    elif kind == "pp":
        a, b, c = _box(_require(args, "box", kind))
        payload = classify_ssyt(rectangle(a, b), a + c).to_json()
        payload["median"] = sorted((a, b, c))[1]
        payload["ab"] = a * b
    elif kind == "tree":
        tree = parse_forest(_require(args, "tree", kind))
        payload = degenerate_diagnostics(tree, upto=max(args.upto, 4), require_standardized=False).to_json()
    else:
        raise ParseError(f"unknown classify kind {kind!r}")
    emit(args, payload)
    return 0


def cmd_dist(args) -> int:
    t = parse_weights(_require(args, "t", "dist"))
    params = DustpanParams(t, args.sigma)
    action = args.action
    if action in ("density", "cdf"):
        if args.at is None:
            raise ParseError(f"dist {action} needs --at")
        xs = _float_list(args.at)
        law = DustpanLaw(params)
        vals = law.pdf(xs) if action == "density" else law.cdf(xs)
        rows = [(x, float(v)) for x, v in zip(xs, vals)]
        emit(args, {action: [{"x": x, "value": v} for x, v in rows]}, ("x", action), rows)
    elif action == "grid":
        if args.sigma:
            raise DomainError("grid output is for sigma = 0; use density/cdf with --at")
        grid = density_grid(t, points=args.points)
        rows = [(g.x, g.pdf, g.cdf) for g in grid]
        if args.gnuplot:
            args.stdout.write("".join(f"{x:.17g} {y:.17g}\n" for x, y, _ in rows))
            return 0
        emit(args, {"grid": [{"x": a, "pdf": b, "cdf": c} for a, b, c in rows]}, ("x", "pdf", "cdf"), rows)
    elif action == "cumulants":
        top = args.d_max if args.d_max is not None else max(args.upto, 4)
        rows = [(d, dustpan_cumulant(params, d)) for d in range(2, top + 1)]
        emit(args, {"cumulants": {str(d): v for d, v in rows}}, ("d", "kappa"), rows)
    elif action == "charfn":
        if args.at is None:
            raise ParseError("dist charfn needs --at")
        rows = []
        for s in _float_list(args.at):
            z = char_fn(params, s)
            rows.append((s, z.real, z.imag))
        emit(args, {"charfn": [{"s": s, "re": a, "im": b} for s, a, b in rows]}, ("s", "re", "im"), rows)
    elif action == "hat":
        h = hat(t)
        emit(args, {"hat": [float(v) for v in h]}, ("entry",), [(float(v),) for v in h])
    else:
        raise ParseError(f"unknown dist action {action!r}")
    return 0


def cmd_compare(args) -> int:
    target = resolve_target(args.kind, args)
    poly = _expand(target)
    if args.self_check:
        rep = discrete_vs_discrete_distance(poly, poly)
        limit_desc: Any = "self"
    else:
        if args.delta_limit:
            if target.kind != "ssyt":
                raise DomainError("--delta-limit applies to ssyt targets")
            prof = distance_profile(target.shape, target.m)
            if prof.degenerate:
                raise DomainError("distance multiset is zero")
            lim = DustpanParams(prof.integer_delta, 0.0)
        elif args.t is not None:
            lim = DustpanParams(parse_weights(args.t), args.sigma)
        else:
            raise ParseError("compare needs --t, --delta-limit or --self")
        rep = discrete_vs_limit_distance(poly, lim)
        limit_desc = lim.to_json()
    emit(args, {"target": target.label, "limit": limit_desc, **rep.to_json()},
         ("kolmogorov", "levy", "levy_tol"), [(rep.kolmogorov, rep.levy, rep.levy_tol)])
    return 0


def cmd_oracle(args) -> int:
    names = args.suite.split(",") if args.suite else None
    if names:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise ParseError(f"unknown suite(s): {', '.join(unknown)}")
    results = run_suites(names, seed=args.seed)
    rows = [(r.name, r.cases, r.passed, len(r.failures), len(r.notes)) for r in results]
    payload = {"suites": [r.to_json() for r in results]}
    # timings vary between runs, so keep them out of the deterministic payload
    for s in payload["suites"]:
        s.pop("seconds")
    emit(args, payload, ("suite", "cases", "passed", "failures", "notes"), rows)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------- parser


def _add_target_options(p: argparse.ArgumentParser):
    p.add_argument("--shape", help='partition, e.g. "8,4,3,1,1"')
    p.add_argument("--m", type=int, help="largest allowed entry for ssyt")
    p.add_argument("--box", help="plane-partition box a,b,c")
    p.add_argument("--tree", help='forest in parentheses notation, e.g. "((()()))"')
    p.add_argument("--form", choices=("weyl", "hookcontent"), default="weyl")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output (default)")
    common.add_argument("--csv", action="store_true", help="CSV output with a version header line")
    common.add_argument("--upto", type=int, default=4, help="highest cumulant order D")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled labeling sweeps")
    common.add_argument("--job", help="read the invocation from a JSON job file")

    parser = argparse.ArgumentParser(prog="qhook", description=__doc__.splitlines()[0], parents=[common])
    parser.add_argument("--version", action="version", version=f"qhook {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("gf", parents=[common], help="build (and expand) a generating function")
    p.add_argument("kind", choices=TARGET_KINDS)
    _add_target_options(p)
    p.add_argument("--expand", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("cumulants", parents=[common], help="exact and standardized cumulants")
    p.add_argument("kind", choices=TARGET_KINDS)
    _add_target_options(p)
    p.add_argument("--standardized", action="store_true")
    p.set_defaults(func=cmd_cumulants)

    p = sub.add_parser("scan", parents=[common], help="cumulant and diagnostic tables over a family")
    p.add_argument("--family", required=True,
                   choices=("scale-partition", "scale-rows", "pp-box", "tree-family", "custom-list"))
    p.add_argument("--base", help="base partition, or a,b for pp-box")
    p.add_argument("--m", type=int, help="m (scale-partition) or base m (scale-rows, default: length)")
    p.add_argument("--params", help="strictly increasing list; ranges like 0..10 allowed")
    p.add_argument("--scale", choices=("pow10", "linear"), default="pow10")
    p.add_argument("--d", help="cumulant orders to report, e.g. 4,6 (default 4)")
    p.add_argument("--tree-kind", choices=("h", "construction", "star", "chain", "binary"), default="h")
    p.add_argument("--k", type=int, help="n - r for the h tree family")
    p.add_argument("--t", help="target weights for the construction tree family")
    p.add_argument("--items", help='";"-separated targets, e.g. "ssyt 3,1 4; pp 2,2,2"')
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("classify", parents=[common], help="per-instance limit-law diagnostics")
    p.add_argument("kind", choices=("ssyt", "pp", "tree"))
    p.add_argument("--shape")
    p.add_argument("--m", type=int)
    p.add_argument("--box")
    p.add_argument("--tree")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("dist", parents=[common], help="uniform-sum and DUSTPAN distributions")
    p.add_argument("action", choices=("density", "cdf", "grid", "cumulants", "charfn", "hat"))
    p.add_argument("--t", help='weights, e.g. "1,1/2,1/3"')
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--at", help="comma-separated evaluation points")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--d", dest="d_max", type=int, help="highest cumulant order")
    p.add_argument("--gnuplot", action="store_true", help="plain two-column x/density grid")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("compare", parents=[common], help="distance between a discrete law and a limit")
    p.add_argument("kind", choices=TARGET_KINDS)
    _add_target_options(p)
    p.add_argument("--t", help="limit weights")
    p.add_argument("--sigma", type=float, default=0.0)
    p.add_argument("--delta-limit", action="store_true", help="use the distance-multiset limit of an ssyt target")
    p.add_argument("--self", dest="self_check", action="store_true", help="compare the target with itself")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", parents=[common], help="run the small-instance equivalence suites")
    p.add_argument("--suite", help=f"comma-separated subset of: {', '.join(SUITES)}")
    p.set_defaults(func=cmd_oracle)
    return parser


def job_to_argv(job: dict) -> list[str]:
    """{"command": "gf", "kind": "ssyt", "shape": "3,1", "m": 4, "expand": true} -> argv."""
    if not isinstance(job, dict) or "command" not in job:
        raise ParseError("job file must be a JSON object with a 'command' key")
    job = dict(job)
    argv = [str(job.pop("command"))]
    for key in ("kind", "action"):
        if key in job:
            argv.append(str(job.pop(key)))
    for key, val in job.items():
        flag = "--" + key.replace("_", "-")
        if key == "self":
            flag = "--self"
        if val is True:
            argv.append(flag)
        elif val is False or val is None:
            continue
        elif isinstance(val, list):
            argv += [flag, ",".join(map(str, val))]
        else:
            argv += [flag, str(val)]
    return argv


def main(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.job:
            try:
                with open(args.job, encoding="utf-8") as fh:
                    job = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise ParseError(f"cannot read job file: {exc}") from None
            try:
                args = parser.parse_args(job_to_argv(job))
            except SystemExit as exc:
                return int(exc.code or 0)
        if not getattr(args, "func", None):
            parser.print_help(stderr)
            return 2
        args.stdout = stdout
        return args.func(args)
    except QHookError as exc:
        stderr.write(f"qhook: {type(exc).__name__}: {exc}\n")
        return exc.exit_code


__all__ = ["main", "build_parser", "job_to_argv", "resolve_target", "emit"]
