"""Command-line interface.

Subcommands: search, verify-table, tvalue, generate, experiment.  All
machine-readable output is CSV on stdout with stable headers; metadata
(tool version, parameter provenance, seeds) rides on leading lines
prefixed with '#'.  Exit status: 0 success, 1 verification failure,
2 usage error.
"""

import argparse
import os
import sys

from . import __version__
from .experiments import (
    PumpData,
    PumpModelConfig,
    run_gaussian_experiment,
    run_pump_experiment,
    summarize,
)
from .gf2poly import format_poly
from .params import entry_for, read_params_file, table, verify
from .lattice import profile
from .generator import word_stream
from .search import algorithm1, census_t3


def _add_threads_flag(sub):
    sub.add_argument(
        "--threads",
        type=int,
        default=None,
        help="worker threads for parallelizable stages "
        "(default: CUD_THREADS or the hardware count)",
    )


def _resolve_params(args):
    """Generator parameters from --params-file or the bundled table."""
    if getattr(args, "params_file", None):
        return read_params_file(args.params_file), f"file:{args.params_file}"
    if getattr(args, "m", None) is None:
        raise SystemExit("either --m or --params-file is required")
    return entry_for(args.m).params, f"builtin:m={args.m}"


def _header(provenance: str, extra: dict | None = None):
    print(f"# tausworthe {__version__}")
    print(f"# parameters {provenance}")
    for k, v in (extra or {}).items():
        print(f"# {k} {v}")


def _cmd_verify_table(args) -> int:
    failures = 0
    print(f"# tausworthe {__version__}")
    print("# parameters builtin:all")
    print("m,check,expected,actual,pass")
    for entry in table():
        report = verify(entry, recompute_t=args.recompute_t)
        for c in report.checks:
            ok = "true" if c.passed else "false"
            print(f"{report.m},{c.name},{c.expected},{c.actual},{ok}")
            if not c.passed:
                failures += 1
    return 1 if failures else 0


def _cmd_tvalue(args) -> int:
    params, provenance = _resolve_params(args)
    _header(provenance)
    prof = profile(params.p, params.q, args.smax, params.w)
    print("m,s,t,l,gap")
    for s in range(1, max(params.m, args.smax) + 1):
        t = "" if s < 2 or s > args.smax else prof.t[s]
        l = prof.l.get(s, "")
        gap = prof.gaps.get(s, "")
        print(f"{params.m},{s},{t},{l},{gap}")
    print(f"delta,{prof.delta}")
    return 0


def _cmd_generate(args) -> int:
    params, provenance = _resolve_params(args)
    _header(provenance, {"count": args.count, "format": args.format})
    words = word_stream(params, args.count)
    w = params.w
    for word in words:
        word = int(word)
        if args.format == "hex":
            print(f"0x{word:0{(w + 3) // 4}x}")
        elif args.format == "binary":
            print(format(word, f"0{w}b"))
        else:
            print(repr(word / (1 << w)))
    return 0


def _cmd_search(args) -> int:
    if args.census:
        hist13 = census_t3(args.m, args.w, "steps13")
        histp = census_t3(args.m, args.w, "primitive")
        _header(f"search:m={args.m}", {"w": args.w})
        print("mode,t3,count")
        for mode, hist in (("steps13", hist13), ("primitive", histp)):
            for t3 in sorted(hist):
                print(f"{mode},{t3},{hist[t3]}")
        return 0
    records = algorithm1(args.m, args.w, threads=args.threads)
    if not records:
        print(f"# tausworthe {__version__}", file=sys.stderr)
        print("no pair survives the filters", file=sys.stderr)
        return 1
    if args.top:
        records = records[: args.top]
    _header(f"search:m={args.m}", {"w": args.w, "delta_threshold": args.delta_threshold})
    tcols = ",".join(f"t{s}" for s in range(3, args.m + 1))
    print(f"rank,path,p,q,sigma,{tcols},delta")
    for r in records:
        p_txt = format_poly(r.pair.fm, args.m + 1).replace(" ", "")
        q_txt = format_poly(r.pair.fm1, args.m).replace(" ", "")
        tvals = ",".join(str(t) for t in r.tvec)
        print(f"{r.rank},{r.pair.path_bits()},{p_txt},{q_txt},{r.sigma},{tvals},{r.delta}")
    return 0


def _cmd_experiment(args) -> int:
    params = None
    provenance = "iid-baseline"
    if args.source == "cud":
        params, provenance = _resolve_params(args)
    if args.kind == "gauss":
        est = run_gaussian_experiment(
            params, args.m, args.rho, args.replicates, args.source, args.seed
        )
        _header(
            provenance,
            {"experiment": "gauss", "m": args.m, "rho": args.rho,
             "replicates": args.replicates, "source": args.source, "seed": args.seed},
        )
        print("replicate,ex1,ex2,ex1x2")
        for r, row in enumerate(est):
            print(f"{r},{row[0]!r},{row[1]!r},{row[2]!r}")
        s = summarize(est)
        print("stat,ex1,ex2,ex1x2")
        print(f"std,{s.std[0]!r},{s.std[1]!r},{s.std[2]!r}")
        return 0
    cfg = PumpModelConfig(m=args.m, replicates=args.replicates)
    est = run_pump_experiment(params, cfg, args.source, args.seed)
    _header(
        provenance,
        {"experiment": "pump", "m": args.m, "replicates": args.replicates,
         "source": args.source, "seed": args.seed},
    )
    lam_cols = ",".join(f"lambda{j}" for j in range(1, 11))
    print(f"replicate,{lam_cols},beta")
    for r, row in enumerate(est):
        print(f"{r}," + ",".join(repr(v) for v in row))
    s = summarize(est)
    print("param,variance")
    names = [f"lambda{j}" for j in range(1, 11)] + ["beta"]
    for name, v in zip(names, s.variance):
        print(f"{name},{v!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tausworthe",
        description="Short-period Tausworthe generators for Markov chain "
        "quasi-Monte Carlo: search, verification, and experiments.",
    )
    ap.add_argument("--version", action="version", version=f"tausworthe {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("verify-table", help="re-derive every bundled table entry")
    sp.add_argument(
        "--recompute-t",
        action="store_true",
        help="also recompute the full t-value profiles (slow for large m)",
    )
    _add_threads_flag(sp)
    sp.set_defaults(func=_cmd_verify_table)

    sp = sub.add_parser("tvalue", help="t-value and resolution profile of a generator")
    sp.add_argument("--m", type=int, help="use the bundled entry of this degree")
    sp.add_argument("--params-file", help="three-line parameter file")
    sp.add_argument("--smax", type=int, default=20, help="largest dimension for t-values")
    _add_threads_flag(sp)
    sp.set_defaults(func=_cmd_tvalue)

    sp = sub.add_parser("generate", help="emit output words of a generator")
    sp.add_argument("--m", type=int, help="use the bundled entry of this degree")
    sp.add_argument("--params-file", help="three-line parameter file")
    sp.add_argument("--count", type=int, default=16, help="number of outputs")
    sp.add_argument("--format", choices=("hex", "dec", "binary"), default="hex")
    _add_threads_flag(sp)
    sp.set_defaults(func=_cmd_generate)

    sp = sub.add_parser("search", help="rank all candidate pairs of a given degree")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--w", type=int, default=32, help="word size lower bound for sigma")
    sp.add_argument("--top", type=int, default=0, help="emit only the best N records")
    sp.add_argument("--delta-threshold", type=int, default=3)
    sp.add_argument("--census", action="store_true", help="dimension-3 t-value histogram only")
    _add_threads_flag(sp)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("experiment", help="Gibbs-sampling studies")
    kinds = sp.add_subparsers(dest="kind", required=True)
    for kind in ("gauss", "pump"):
        kp = kinds.add_parser(kind)
        kp.add_argument("--m", type=int, required=True)
        kp.add_argument("--params-file", help="three-line parameter file")
        kp.add_argument("--replicates", type=int, default=100 if kind == "gauss" else 300)
        kp.add_argument("--source", choices=("cud", "iid"), default="cud")
        kp.add_argument("--seed", type=int, default=2024)
        if kind == "gauss":
            kp.add_argument("--rho", type=float, default=0.0)
        _add_threads_flag(kp)
        kp.set_defaults(func=_cmd_experiment, kind=kind)
    return ap


def dispatch(argv=None) -> int:
    """Parse argv and run the selected subcommand."""
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", None) in (None, 0):
        env = os.environ.get("CUD_THREADS")
        args.threads = int(env) if env else (os.cpu_count() or 1)
    return args.func(args)


def main() -> None:
    sys.exit(dispatch())
