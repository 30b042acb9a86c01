"""Command-line front end.

Subcommands: eval (single function values), singular (modulus solver),
choreography (trajectory CSV export), walk (lattice return probability by
quadrature or Monte Carlo), verify (the full identity suite).
"""

from __future__ import annotations

import argparse
import math
import sys
from datetime import datetime, timezone

from . import choreography as cg
from . import elliptic as el
from . import gammafn as gm
from . import jacobi as jc
from . import randomwalk as rw
from . import verify as vf
from .quadrature import QuadratureSpec

_EVAL_FUNCTIONS = {
    "K": (1, lambda a: el.complete_K(a[0])),
    "E": (1, lambda a: el.complete_E(a[0])),
    "F": (2, lambda a: el.incomplete_F(a[0], a[1])),
    "sn": (2, lambda a: jc.jacobi_sncndn(a[0], a[1]).sn),
    "cn": (2, lambda a: jc.jacobi_sncndn(a[0], a[1]).cn),
    "dn": (2, lambda a: jc.jacobi_sncndn(a[0], a[1]).dn),
    "gamma": (1, lambda a: gm.gamma(a[0])),
    "beta": (2, lambda a: gm.beta(a[0], a[1])),
    "f_series": (1, lambda a: el.series_f(a[0])),
    "ratio": (1, lambda a: el.ratio_Kprime_over_K(a[0])),
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singmod",
        description="Special functions and identity checks around Legendre's "
                    "third singular modulus k = sin(pi/12).")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function at full precision")
    p_eval.add_argument("function", choices=sorted(_EVAL_FUNCTIONS))
    p_eval.add_argument("args", nargs="*", type=float)

    p_sing = sub.add_parser("singular", help="solve K'(k)/K(k) = sqrt(N) for k")
    p_sing.add_argument("N", type=float)

    p_cho = sub.add_parser("choreography",
                           help="export one period of the three-body motion")
    p_cho.add_argument("--k", type=float, default=math.cos(math.pi / 12),
                       help="modulus (default cos(pi/12), the residual-free one)")
    p_cho.add_argument("--samples", type=int, default=1024)
    p_cho.add_argument("--out", default="trajectories.csv")

    p_walk = sub.add_parser("walk", help="Z^3 return probability")
    p_walk.add_argument("mode", choices=("quadrature", "montecarlo"))
    p_walk.add_argument("params", nargs="*",
                        help="montecarlo: N_WALKS MAX_STEPS")
    p_walk.add_argument("--nodes", type=int, default=None)
    p_walk.add_argument("--panels", type=int, default=2)
    p_walk.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)

    p_ver = sub.add_parser("verify", help="run the identity suite")
    p_ver.add_argument("--profile", default="default", choices=vf.PROFILES)
    p_ver.add_argument("--out", default=None)
    p_ver.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)
    p_ver.add_argument("--samples", type=int, default=10 ** 6,
                       help="Monte Carlo walk count used by the mc_* checks")
    p_ver.add_argument("--override", action="append", default=[],
                       metavar="NAME=TOL",
                       help="replace one check tolerance (repeatable)")
    return parser


def _cmd_eval(args) -> int:
    arity, fn = _EVAL_FUNCTIONS[args.function]
    if len(args.args) != arity:
        print(f"error: {args.function} takes {arity} argument(s), "
              f"got {len(args.args)}", file=sys.stderr)
        return 2
    print(repr(fn(args.args)))
    return 0


def _cmd_singular(args) -> int:
    if not args.N > 0.0:
        print("error: N must be positive", file=sys.stderr)
        return 2
    mod = el.singular_modulus(args.N)
    residual = abs(el.ratio_Kprime_over_K(mod.k) - math.sqrt(args.N))
    print(f"k = {mod.k!r}")
    print(f"k^2 = {mod.k ** 2!r}")
    print(f"residual |K'/K - sqrt(N)| = {residual:.3e}")
    return 0


def _cmd_choreography(args) -> int:
    cfg = cg.ChoreographyConfig(modulus=args.k, samples=args.samples,
                                output_path=args.out)
    rows = cg.export_trajectories(cfg)
    worst = max(math.hypot(r[7], r[8]) for r in rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    print(f"max center-of-mass residual norm = {worst:.6e}")
    return 0


def _cmd_walk(args) -> int:
    if args.mode == "quadrature":
        w_spec = rw.DEFAULT_W_SPEC
        wp_spec = rw.DEFAULT_WPLUS_SPEC
        if args.nodes is not None:
            w_spec = QuadratureSpec(nodes=args.nodes, panels=args.panels)
            wp_spec = w_spec
        w = rw.watson_W(w_spec)
        wp = rw.watson_W_plus(wp_spec)
        print(f"W = {w!r}")
        print(f"W+ = {wp!r}")
        print(f"p = 1 - 1/(3 W+) = {1.0 - 1.0 / (3.0 * wp)!r}")
        return 0
    if len(args.params) != 2:
        print("error: montecarlo needs N_WALKS MAX_STEPS", file=sys.stderr)
        return 2
    n_walks, max_steps = (int(float(p)) for p in args.params)
    est = rw.mc_return_probability(n_walks, max_steps, args.seed)
    print(f"n_walks = {est.n_walks}")
    print(f"max_steps = {est.max_steps}")
    print(f"returns = {est.returns}")
    print(f"p_hat = {est.p_hat!r}")
    print(f"stderr = {est.stderr!r}")
    print(f"seed = {est.seed}")
    return 0


def _cmd_verify(args) -> int:
    overrides = {}
    for item in args.override:
        name, _, value = item.partition("=")
        if not value:
            print(f"error: bad override {item!r}, expected NAME=TOL", file=sys.stderr)
            return 2
        overrides[name] = float(value)
    report = vf.run_verification(profile=args.profile, seed=args.seed,
                                 mc_walks=args.samples,
                                 overrides=overrides or None)
    stamp = datetime.now(timezone.utc).isoformat()
    text = vf.render_report(report, timestamp=stamp)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for c in report.checks:
        status = "ok  " if c.passed else "FAIL"
        err = c.rel_err if c.mode == "rel" else c.abs_err
        print(f"{status} {c.name}: {c.mode}_err={err:.3e} tol={c.tol:.3e}")
    print(f"total={report.total} failed={report.failed} "
          f"digest={report.config_digest[:12]}")
    return 0 if report.failed == 0 else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "singular":
            return _cmd_singular(args)
        if args.command == "choreography":
            return _cmd_choreography(args)
        if args.command == "walk":
            return _cmd_walk(args)
        return _cmd_verify(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
