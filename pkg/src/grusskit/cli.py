"""Command-line front end.

Reports go to standard output as a JSON document; human diagnostics go to
standard error.  Exit codes: 0 success, 1 input or evaluation error, 2
inequality violation found by ``verify``.
"""

from __future__ import annotations

import argparse
import datetime
import os
import sys

from . import __version__, battery, jsonio
from .bounds import (bound_D_corollaries, bound_D_kernel, bound_D_monotone_K,
                     bound_D_monotone_Q, bound_D_prior, bound_T_bv,
                     bound_T_holder_bv, bound_T_holder_lipschitz,
                     bound_T_holder_monotone, bound_T_lipschitz_u,
                     bound_T_monotone, weighted_bounds)
from .errors import GrussKitError, SchemaError
from .functionals import (cheby_T, functional_D, identity_residual_D,
                          weighted_Tw)
from .quadrature import (Partition, adaptive_quadrature, composite_S,
                         remainder_bound_holder, remainder_bound_osc)
from .sharpness import run_catalogue
from .stieltjes import riemann_integral, rs_integral, rs_product_integral


def _load_spec(args) -> jsonio.ParsedSpec:
    if getattr(args, "json", None):
        return jsonio.loads_document(args.json)
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as handle:
            return jsonio.loads_document(handle.read())
    raise SchemaError("$", "supply --input PATH or --json TEXT")


def _report(args, results, seed=None) -> dict:
    return {
        "tool": "grusskit",
        "version": __version__,
        "command": list(args.argv_echo),
        "seed": seed,
        "timestamp": datetime.datetime.now(datetime.timezone.utc)
        .isoformat(),
        "results": results,
    }


def _emit(args, results, seed=None, stdout=None) -> None:
    doc = _report(args, results, seed)
    print(jsonio.dumps_report(doc), file=stdout or sys.stdout)


def _cmd_integrate(args) -> int:
    spec = _load_spec(args)
    f = spec.require("f")
    if "u" in spec.functions:
        res = rs_integral(f, spec.functions["u"], args.from_, args.to)
    else:
        res = riemann_integral(f, args.from_, args.to)
    _emit(args, {"integral": jsonio.integral_to_jsonable(res)})
    return 0


def _cmd_cheby(args) -> int:
    spec = _load_spec(args)
    f, g = spec.require("f"), spec.require("g")
    if "u" in spec.functions:
        res = cheby_T(f, g, spec.functions["u"])
    else:
        res = weighted_Tw(f, g, spec.require("w"))
    _emit(args, {"functional": jsonio.functional_to_jsonable(res)})
    return 0


def _cmd_dfunc(args) -> int:
    spec = _load_spec(args)
    f, u = spec.require("f"), spec.require("u")
    res = functional_D(f, u)
    results = {"functional": jsonio.functional_to_jsonable(res)}
    if args.residual:
        results["identity_residual"] = identity_residual_D(f, u)
    _emit(args, results)
    return 0


def _run_bound(theorem: str, spec: jsonio.ParsedSpec, p: float | None):
    f = spec.functions.get("f")
    g = spec.functions.get("g")
    u = spec.functions.get("u")
    w = spec.functions.get("w")
    if theorem == "thm_2_1a":
        return bound_T_bv(f, g, u, spec.cert("f", "bounds"))
    if theorem == "thm_2_2":
        return bound_T_monotone(f, g, u, spec.cert("f", "bounds"))
    if theorem == "thm_2_3a":
        return bound_T_lipschitz_u(f, g, u, spec.cert("f", "bounds"),
                                   spec.cert("u", "lipschitz"))
    if theorem in {"thm_2_1", "cor_2_2"}:
        return bound_T_holder_bv(f, g, u, spec.cert("f", "holder"))
    if theorem in {"thm_2_3", "cor_2_4"}:
        return bound_T_holder_monotone(f, g, u, spec.cert("f", "holder"))
    if theorem in {"thm_2_5", "cor_2_6"}:
        return bound_T_holder_lipschitz(f, g, u, spec.cert("f", "holder"),
                                        spec.cert("u", "lipschitz"), p=p)
    if theorem.startswith("item_"):
        which = "item" + theorem.split("_")[1]
        if which in {"item1", "item2", "item3"}:
            return weighted_bounds(f, g, w, which,
                                   f_bounds=spec.cert("f", "bounds"))
        return weighted_bounds(f, g, w, which,
                               f_holder=spec.cert("f", "holder"), p=p)
    if theorem == "thm_a_1":
        return bound_D_prior(f, u, f_bounds=spec.cert("f", "bounds"),
                             u_lipschitz=spec.cert("u", "lipschitz"))
    if theorem == "thm_a_2":
        return bound_D_prior(f, u, f_lipschitz=spec.cert("f", "lipschitz"))
    if theorem == "thm_a_6_i":
        return bound_D_kernel(f, u, "bv")
    if theorem == "thm_a_6_ii":
        return bound_D_kernel(f, u, "lipschitz",
                              spec.cert("f", "lipschitz"))
    if theorem == "thm_a_6_iii":
        return bound_D_kernel(f, u, "monotone")
    if theorem == "cor_a_7":
        return bound_D_corollaries(f, u, "a12")
    if theorem == "cor_a_8":
        return bound_D_corollaries(f, u, "a13", p=p,
                                   f_lipschitz=spec.cert("f", "lipschitz"))
    if theorem == "cor_a_9":
        return bound_D_corollaries(f, u, "a14", p=p)
    if theorem == "thm_a_11":
        from .bounds import positivity_check_D
        return positivity_check_D(f, u)
    if theorem == "thm_b_1":
        return bound_D_monotone_K(f, u, spec.cert("f", "lipschitz"))
    if theorem == "thm_b_2":
        return bound_D_monotone_Q(f, u, spec.cert("f", "bv"))
    raise SchemaError("theorem", f"unknown theorem id {theorem!r}")


def _cmd_bound(args) -> int:
    spec = _load_spec(args)
    out = _run_bound(args.theorem, spec, args.p)
    reports = out if isinstance(out, list) else [out]
    _emit(args, {"bounds": [jsonio.bound_report_to_jsonable(r)
                            for r in reports]})
    return 0


def _cmd_quad(args) -> int:
    spec = _load_spec(args)
    f, g, u = spec.require("f"), spec.require("g"), spec.require("u")
    a, b = spec.domain
    results: dict = {}
    if args.sweep:
        lo_n, hi_n = (int(x) for x in args.sweep.split(":"))
        holder = None
        for c in spec.certificates.get("f", []):
            if c.kind == "holder":
                holder = c
        rows = []
        exact = rs_product_integral([f, g], u).value
        n = lo_n
        while n <= hi_n:
            part = Partition.uniform(a, b, n)
            if holder is not None:
                rb = remainder_bound_holder(f, g, u, part, holder)
            else:
                rb = remainder_bound_osc(f, g, u, part)
            approx = composite_S(f, g, u, part)
            rows.append((part.mesh, rb.stated, abs(exact - approx)))
            n *= 2
        results["sweep"] = [list(r) for r in rows]
        if args.csv:
            with open(args.csv, "w", encoding="utf-8") as handle:
                handle.write("mesh,bound,true_error\n")
                for mesh, bound, err in rows:
                    handle.write(f"{mesh!r},{bound!r},{err!r}\n")
    elif args.partition:
        kind, _, count = args.partition.partition(":")
        if kind != "uniform":
            raise SchemaError("partition", "expected uniform:<n>")
        part = Partition.uniform(a, b, int(count))
        value = composite_S(f, g, u, part)
        rb = remainder_bound_osc(f, g, u, part)
        results["quadrature"] = {
            "value": value,
            "remainder_bound": rb.stated,
            "tight_bound": rb.tight,
            "partition": list(part.points),
        }
    else:
        res = adaptive_quadrature(f, g, u, args.tol, args.max_cells)
        results["quadrature"] = jsonio.quadrature_to_jsonable(res)
    _emit(args, results)
    return 0


def _cmd_sharpness(args) -> int:
    rows = run_catalogue(args.a, args.b)
    print(f"{'id':12s} {'theorem':12s} {'ratio':>22s} {'expected':>9s} pass",
          file=sys.stderr)
    for wid, tid, ratio, expected, ok in rows:
        print(f"{wid:12s} {tid:12s} {ratio:22.17f} {expected:9.3f} "
              f"{'yes' if ok else 'NO'}", file=sys.stderr)
    _emit(args, {"sharpness": [
        {"id": wid, "theorem": tid, "ratio": ratio,
         "expected": expected, "pass": ok}
        for wid, tid, ratio, expected, ok in rows]})
    return 0 if all(r[4] for r in rows) else 2


def _cmd_verify(args, seed: int) -> int:
    ids = battery.THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    summaries = [battery.verify_theorem(t, args.trials, seed) for t in ids]
    _emit(args, {"verify": [s.to_jsonable() for s in summaries]}, seed=seed)
    bad = [s for s in summaries if not s.ok]
    if bad:
        for s in bad:
            print(f"violations in {s.theorem_id}: {len(s.violations)}",
                  file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="grusskit",
        description="Certified Stieltjes integration and Gruss-type "
                    "inequality verification")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add_spec_args(p):
        p.add_argument("--input", help="path to a function-spec JSON file")
        p.add_argument("--json", help="inline function-spec JSON")

    p = sub.add_parser("integrate", help="Stieltjes or Riemann integral")
    add_spec_args(p)
    p.add_argument("--from", dest="from_", type=float, default=None)
    p.add_argument("--to", dest="to", type=float, default=None)

    p = sub.add_parser("cheby", help="normalised product-mean functional")
    add_spec_args(p)

    p = sub.add_parser("dfunc", help="Stieltjes/Riemann mismatch functional")
    add_spec_args(p)
    p.add_argument("--residual", action="store_true",
                   help="also report the kernel-identity residual")

    p = sub.add_parser("bound", help="evaluate one certified bound")
    add_spec_args(p)
    p.add_argument("--theorem", required=True)
    p.add_argument("--p", type=float, default=None,
                   help="exponent for the L^p branches")

    p = sub.add_parser("quad", help="composite quadrature")
    add_spec_args(p)
    p.add_argument("--partition", help="uniform:<n>")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--max-cells", type=int, default=4096)
    p.add_argument("--sweep", help="<nmin>:<nmax> doubling mesh sweep")
    p.add_argument("--csv", help="write (mesh, bound, true_error) rows here")

    p = sub.add_parser("sharpness", help="run the extremal witness table")
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=1.0)

    p = sub.add_parser("verify", help="randomised soundness battery")
    p.add_argument("--theorem", default="all")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    return ap


def run(argv: list[str]) -> int:
    """Parse argv, execute, print the report; returns the exit code."""
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.argv_echo = list(argv)
    env_seed = os.environ.get("STIELTJES_SEED")
    seed = None
    if getattr(args, "seed", None) is not None:
        seed = args.seed
    if env_seed is not None:
        seed = int(env_seed)
    if seed is None:
        seed = 0
    try:
        if args.cmd == "integrate":
            return _cmd_integrate(args)
        if args.cmd == "cheby":
            return _cmd_cheby(args)
        if args.cmd == "dfunc":
            return _cmd_dfunc(args)
        if args.cmd == "bound":
            return _cmd_bound(args)
        if args.cmd == "quad":
            return _cmd_quad(args)
        if args.cmd == "sharpness":
            return _cmd_sharpness(args)
        if args.cmd == "verify":
            return _cmd_verify(args, seed)
    except SchemaError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except GrussKitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
