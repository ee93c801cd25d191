"""Command line interface.

Exit codes: 0 success, 2 domain error (also argparse failures), 3 degenerate
instance, 4 elimination failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DegenerateInstanceError, DomainError, EliminationError
from .harness import (ExperimentConfig, meta_report, monte_carlo_hexagon, pair_experiment,
                      plot_curves, resolve_height, triangulation_json, triangulation_report)
from .heights import in_secondary_cone
from .lattice import load_triangulation
from .orient import facet_system, orientation_witness, standard_triangle
from .plotting import write_atomic
from .systems import meta_system


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _fraction_list(text: str):
    return tuple(_fraction(part) for part in text.split(","))


def _emit(payload, out: str | None, fmt: str = "json"):
    if fmt == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif fmt == "csv":
        body = _to_csv(payload)
    else:
        raise DomainError(f"cannot render {fmt!r} for this command")
    if out:
        write_atomic(out, body)
    else:
        sys.stdout.write(body)


def _to_csv(payload) -> str:
    rows = payload.get("results", []) if isinstance(payload, dict) else payload
    if not rows:
        return "\n"
    keys = sorted({k for row in rows for k in row})
    lines = [",".join(keys)]
    for row in rows:
        lines.append(",".join(str(row.get(k, "")) for k in keys))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wronski", description=__doc__)
    ap.add_argument("--config", help="JSON experiment config; overrides the subcommand")
    sub = ap.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--out", help="output file (atomic write); stdout otherwise")
        p.add_argument("--format", default="json", choices=["json", "csv", "svg"])
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("triangulate", help="honeycomb triangulation as JSON")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--report", action="store_true", help="statistics instead of raw complex")
    p.add_argument("--height", help="rho | min | FILE, for the cone column of --report")
    common(p)

    p = sub.add_parser("orient", help="orientability from facet sign vectors")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--delta", type=int)
    g.add_argument("--polygon", help="triangulation JSON file; its hull is used")
    common(p)

    p = sub.add_parser("heights", help="evaluate a height function, optionally check the cone")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--height", default="rho", help="rho | min | FILE")
    p.add_argument("--check-cone", action="store_true")
    common(p)

    p = sub.add_parser("meta", help="the three color slices; optionally eliminate to t")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--height", default="rho")
    p.add_argument("--eliminate", action="store_true")
    p.add_argument("--refine", type=int, default=2)
    p.add_argument("--t0-scan", type=_fraction_list, default=(Fraction(0), Fraction(1)),
                   metavar="A,B", help="window for reported real roots")
    p.add_argument("--dump", help="write the slice polynomials to this file")
    common(p)

    p = sub.add_parser("pair", help="one curve pair: build and count real intersections")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--height", default="rho")
    p.add_argument("--t", type=_fraction, required=True)
    p.add_argument("--c", type=_fraction_list, required=True, metavar="a,b,c")
    p.add_argument("--cprime", type=_fraction_list, required=True, metavar="d,e,f")
    p.add_argument("--count", action="store_true", default=True)
    common(p)

    p = sub.add_parser("montecarlo", help="random hexagon pairs, exact counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t-range", type=_fraction_list, default=(Fraction(-1), Fraction(1)))
    p.add_argument("--c-range", type=_fraction_list, default=(Fraction(-50), Fraction(50)))
    common(p)

    p = sub.add_parser("plot", help="SVG of a curve pair with intersection markers")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--height", default="rho")
    p.add_argument("--t", type=_fraction, required=True)
    p.add_argument("--c", type=_fraction_list, required=True)
    p.add_argument("--cprime", type=_fraction_list, required=True)
    p.add_argument("--window", type=_fraction_list, default=(Fraction(-2), Fraction(2),
                                                             Fraction(-2), Fraction(2)))
    p.add_argument("--resolution", type=int, default=512)
    common(p)
    return ap


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "triangulate":
        if args.report:
            rec = triangulation_report(args.delta, args.height)
            _emit(rec.to_json(), args.out, args.format)
        else:
            _emit(triangulation_json(args.delta), args.out, args.format)
    elif cmd == "orient":
        if args.delta is not None:
            fs = facet_system(standard_triangle(args.delta))
        else:
            fs = facet_system(load_triangulation(args.polygon).points)
        witness = orientation_witness(fs)
        _emit({"orientable": witness is not None,
               "witness": list(witness) if witness else None}, args.out, args.format)
    elif cmd == "heights":
        hf = resolve_height(args.height, args.delta)
        payload = {"delta": args.delta, "heights": hf.to_json()}
        if args.check_cone:
            ok, violations = in_secondary_cone(hf)
            payload["in_cone"] = ok
            payload["violations"] = [
                {"kind": v.kind, "anchor": list(v.anchor)} for v in violations]
        _emit(payload, args.out, args.format)
    elif cmd == "meta":
        if args.eliminate:
            rec = meta_report(args.delta, args.height, refine=args.refine,
                              seed=args.seed, scan=args.t0_scan)
            _emit(rec.to_json(), args.out, args.format)
        else:
            system = meta_system(args.delta, resolve_height(args.height, args.delta))
            payload = {"delta": args.delta,
                       "f": [str(f) for f in system.f],
                       "f_terms": [f.to_json() for f in system.f]}
            if args.dump:
                write_atomic(args.dump, json.dumps(payload, indent=2) + "\n")
            _emit(payload, args.out, args.format)
    elif cmd == "pair":
        rec = pair_experiment(args.delta, args.height, args.t, args.c, args.cprime,
                              seed=args.seed)
        _emit(rec.to_json(), args.out, args.format)
    elif cmd == "montecarlo":
        rec = monte_carlo_hexagon(args.n, args.seed, args.t_range, args.c_range)
        _emit(rec.to_json() if args.format == "json" else rec.to_json(),
              args.out, args.format)
    elif cmd == "plot":
        if len(args.window) != 4:
            raise DomainError("--window needs x0,x1,y0,y1")
        if not args.out:
            raise DomainError("plot requires --out FILE")
        plot_curves(args.delta, args.height, args.t, args.c, args.cprime,
                    args.window, args.resolution, args.out, seed=args.seed)
        sys.stdout.write(args.out + "\n")
    else:
        raise DomainError("no command given (see --help)")
    return 0


def _run_config(path: str) -> int:
    with open(path, "r", encoding="utf-8") as fh:
        cfg = ExperimentConfig.from_json(json.load(fh))
    if cfg.kind == "montecarlo":
        rec = monte_carlo_hexagon(cfg.n, cfg.seed, cfg.t_range, cfg.c_range)
    elif cfg.kind == "pair":
        rec = pair_experiment(cfg.delta, cfg.height, cfg.t, cfg.c, cfg.cprime,
                              seed=cfg.seed or 0)
    elif cfg.kind == "meta":
        rec = meta_report(cfg.delta, cfg.height, refine=cfg.refine, seed=cfg.seed or 0)
    elif cfg.kind == "triangulate":
        rec = triangulation_report(cfg.delta, cfg.height)
    elif cfg.kind == "orient":
        witness = orientation_witness(facet_system(standard_triangle(cfg.delta)))
        _emit({"orientable": witness is not None,
               "witness": list(witness) if witness else None}, cfg.out, cfg.fmt)
        return 0
    elif cfg.kind == "plot":
        if not cfg.out:
            raise DomainError("plot config requires an output path")
        plot_curves(cfg.delta, cfg.height, cfg.t, cfg.c, cfg.cprime, cfg.window,
                    cfg.resolution, cfg.out, seed=cfg.seed or 0)
        return 0
    else:
        raise DomainError(f"unsupported config kind {cfg.kind!r}")
    if cfg.out:
        rec.write(cfg.out)
    else:
        _emit(rec.to_json(), None, "json")
    return 0


_VALUE_FLAGS = {"--t", "--c", "--cprime", "--t-range", "--c-range", "--window", "--t0-scan"}


def _glue_negative_values(argv):
    """Join flag and value when the value starts with a minus sign."""
    out = []
    skip = False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in _VALUE_FLAGS and k + 1 < len(argv) and argv[k + 1].startswith("-") \
                and any(ch.isdigit() for ch in argv[k + 1]):
            out.append(f"{tok}={argv[k + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = ap.parse_args(_glue_negative_values(list(argv)))
    try:
        if args.config:
            return _run_config(args.config)
        return _dispatch(args)
    except (DomainError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateInstanceError as exc:
        print(f"degenerate instance: {exc}", file=sys.stderr)
        return 3
    except EliminationError as exc:
        print(f"elimination failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
