"""Command-line interface: ``liefusion <command> [options]``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import cache
from .fusion import alcove, fusion_decompose, kac_walton, path_matrix
from .modular import DEFAULT_EPS, RoundingError, frobenius_schur, s_matrix, sigma_sums, verlinde
from .rootdata import InvalidAlgebraError, WeightError, check_weight, parse_algebra, parse_weight
from .symmetry import automorphisms, rep_type
from .tensor import tensor_decompose
from .verify import GRIDS, run_grid, vanishing_census

SCHEMA_VERSION = 1


def _weight(text):
    return list(parse_weight(text))


def _complex(z) -> list:
    return [float(np.real(z)), float(np.imag(z))]


def _decomp(d) -> list:
    return [{"weight": list(w), "multiplicity": m} for w, m in d.items()]


def _fmt_w(w) -> str:
    return "(" + ",".join(map(str, w)) + ")"


class Output:
    """Accumulates the human-readable lines and the structured record of one command."""

    def __init__(self, command, inputs):
        self.record = {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs, "results": {}}
        self.lines = []

    def line(self, text=""):
        self.lines.append(text)


def cmd_tensor(args, out):
    d = tensor_decompose(args.alg, args.lhs, args.rhs, diagnostics=args.diagnostics)
    for w, m in d.items():
        out.line(f"{_fmt_w(w)}:{m}")
    out.line(f"total {d.total()}")
    out.record["results"] = {"decomposition": _decomp(d), "total": d.total()}
    if d.diagnostics:
        di = d.diagnostics
        stats = {k: getattr(di, k) for k in ("phi", "psi", "nonneg", "nonneg_wall", "negative", "negative_wall")}
        out.line(" ".join(f"{k}={v}" for k, v in stats.items()))
        out.record["results"]["diagnostics"] = stats


def cmd_fuse(args, out):
    ring = alcove(args.alg, args.level)
    if args.method == "verlinde":
        d = verlinde(ring, args.lhs, args.rhs)
    elif args.method == "kw":
        d = kac_walton(ring, args.lhs, args.rhs)
    else:
        d = fusion_decompose(ring, args.lhs, args.rhs)
    for w, m in d.items():
        out.line(f"{_fmt_w(w)}:{m}")
    out.line(f"total {d.total()}")
    out.record["results"] = {"decomposition": _decomp(d), "total": d.total()}


def cmd_smatrix(args, out):
    ring = alcove(args.alg, args.level)
    md = s_matrix(ring, args.tolerance)
    out.record["results"] = {
        "alcove": [list(w) for w in ring.alcove],
        "S": [[_complex(z) for z in row] for row in md.S],
        "T": [_complex(z) for z in md.T_diag],
        "qdim": [float(q) for q in md.qdim],
    }
    if args.csv:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["weight"] + [_fmt_w(w) for w in ring.alcove])
        for w, row in zip(ring.alcove, md.S):
            writer.writerow([_fmt_w(w)] + [f"{z.real:.12g}{z.imag:+.12g}j" for z in row])
        out.lines.append(buf.getvalue().rstrip("\n"))
        return
    for w, row in zip(ring.alcove, md.S):
        out.line(f"{_fmt_w(w):<20}" + " ".join(f"{z.real:+.6f}{z.imag:+.6f}j" for z in row))


def cmd_sigma(args, out):
    ring = alcove(args.alg, args.level)
    md = s_matrix(ring, args.tolerance)
    sums = sigma_sums(md)
    rows = []
    for w, z in zip(ring.alcove, sums):
        kind = rep_type(ring.alg, w)
        zero = abs(z) < md.zero_threshold
        rows.append({"weight": list(w), "sigma": _complex(z), "rep_type": str(kind), "vanishes": bool(zero)})
        out.line(f"{_fmt_w(w):<20} {z.real:+.10f}{z.imag:+.10f}j {str(kind):<13} {'zero' if zero else ''}")
    out.record["results"] = {"alcove": [list(w) for w in ring.alcove], "sigma": rows}


def cmd_fs(args, out):
    ring = alcove(args.alg, args.level)
    weights = [ring.check(args.weight)] if args.weight else list(ring.alcove)
    rows = []
    for w in weights:
        value = frobenius_schur(ring, w)
        rows.append({"weight": list(w), "indicator": value, "rep_type": str(rep_type(ring.alg, w))})
        out.line(f"{_fmt_w(w):<20} {value:+d} {rep_type(ring.alg, w)}")
    out.record["results"] = {"indicators": rows}


def cmd_rep_type(args, out):
    w = check_weight(args.alg, args.weight, dominant=True)
    kind = rep_type(args.alg, w)
    out.line(str(kind))
    out.record["results"] = {"rep_type": str(kind)}


def cmd_automorphisms(args, out):
    ring = alcove(args.alg, args.level)
    autos = automorphisms(ring.alg)
    rows = []
    if not autos:
        out.line(f"{ring.alg} has no center automorphisms")
    for a in autos:
        entry = {"name": a.name, "modulus": a.modulus, "order": a.order}
        out.line(f"{a.name}: order {a.order}, grading mod {a.modulus}")
        if args.weight:
            w = ring.check(args.weight)
            orbit = [a.power(w, ring.level, p) for p in range(a.order)]
            entry["orbit"] = [list(x) for x in orbit]
            entry["tau"] = a.tau(w)
            out.line("  orbit " + " -> ".join(_fmt_w(x) for x in orbit))
            out.line(f"  tau {a.tau(w)}")
        rows.append(entry)
    out.record["results"] = {"automorphisms": rows}


def cmd_path_matrix(args, out):
    ring = alcove(args.alg, args.level)
    X = path_matrix(ring)
    for row in X:
        out.line(" ".join(f"{int(x):3d}" for x in row))
    out.record["results"] = {"alcove": [list(w) for w in ring.alcove], "X": X.tolist()}


def cmd_verify(args, out):
    reports = run_grid(args.grid, seed=args.seed, eps=args.tolerance)
    for r in reports:
        out.line(str(r))
    failed = [r for r in reports if r.failures]
    out.line(f"{len(reports) - len(failed)}/{len(reports)} reports pass")
    out.record["results"] = {"reports": [r.to_dict() for r in reports]}
    return 1 if failed else 0


def cmd_census(args, out):
    results = []
    for k in args.level:
        c = vanishing_census(alcove(args.alg, k), args.tolerance)
        results.append(c.to_dict())
        acc = " ".join(_fmt_w(w) for w in c.accidental)
        out.line(f"k={k:<3} size={c.size:<4} vanishing={len(c.vanishing()):<4} accidental={len(c.accidental)} {acc}".rstrip())
    out.record["results"] = {"census": results}


def _add_alg(p, level=False):
    p.add_argument("--alg", required=True, type=parse_algebra, help="algebra name, e.g. E6")
    if level:
        p.add_argument("--level", required=True, type=int)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", nargs="?", const="-", default=argparse.SUPPRESS, metavar="FILE",
                        help="emit the JSON record (to FILE if given)")
    common.add_argument("--tolerance", type=float, default=argparse.SUPPRESS, help=f"zero tolerance (default {DEFAULT_EPS})")
    common.add_argument("--cache-dir", default=argparse.SUPPRESS, help=f"multiplicity cache (or set {cache.ENV_VAR})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled checks")

    parser = argparse.ArgumentParser(prog="liefusion", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tensor", parents=[common], help="classical tensor product")
    _add_alg(p)
    p.add_argument("--lhs", required=True, type=_weight)
    p.add_argument("--rhs", required=True, type=_weight)
    p.add_argument("--diagnostics", action="store_true")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("fuse", parents=[common], help="level-k fusion product")
    _add_alg(p, level=True)
    p.add_argument("--lhs", required=True, type=_weight)
    p.add_argument("--rhs", required=True, type=_weight)
    p.add_argument("--method", choices=["rs", "kw", "verlinde"], default="rs")
    p.set_defaults(func=cmd_fuse)

    p = sub.add_parser("smatrix", parents=[common], help="modular S matrix")
    _add_alg(p, level=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_smatrix)

    p = sub.add_parser("sigma", parents=[common], help="column sums of S with representation types")
    _add_alg(p, level=True)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("fs-indicator", parents=[common], help="Frobenius-Schur indicators")
    _add_alg(p, level=True)
    p.add_argument("--weight", type=_weight)
    p.set_defaults(func=cmd_fs)

    p = sub.add_parser("rep-type", parents=[common], help="real, complex or quaternionic")
    _add_alg(p)
    p.add_argument("--weight", required=True, type=_weight)
    p.set_defaults(func=cmd_rep_type)

    p = sub.add_parser("automorphisms", parents=[common], help="center automorphisms and gradings")
    _add_alg(p, level=True)
    p.add_argument("--weight", type=_weight)
    p.set_defaults(func=cmd_automorphisms)

    p = sub.add_parser("path-matrix", parents=[common], help="sum of all fusion matrices")
    _add_alg(p, level=True)
    p.set_defaults(func=cmd_path_matrix)

    p = sub.add_parser("verify-theorems", parents=[common], help="run the sum-rule and oracle checks")
    p.add_argument("--grid", choices=sorted(GRIDS), default="default")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", parents=[common], help="classify zeros of the S column sums")
    p.add_argument("--alg", required=True, type=parse_algebra)
    p.add_argument("--level", required=True, type=int, nargs="+")
    p.set_defaults(func=cmd_census)
    return parser


def _settings(args):
    args.json = getattr(args, "json", None)
    args.tolerance = getattr(args, "tolerance", DEFAULT_EPS)
    args.seed = getattr(args, "seed", 0)
    args.cache_dir = getattr(args, "cache_dir", None)


def _inputs(args) -> dict:
    skip = {"func", "json", "command", "cache_dir"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip:
            continue
        out[k] = v.name if hasattr(v, "name") and hasattr(v, "series") else v
    return out


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _settings(args)
    if args.cache_dir:
        cache.set_cache_dir(args.cache_dir)
    out = Output(args.command, _inputs(args))
    try:
        status = args.func(args, out) or 0
    except (InvalidAlgebraError, WeightError, ValueError, RoundingError) as exc:
        print(f"liefusion: error: {exc}", file=sys.stderr)
        return 1
    if args.json is None:
        print("\n".join(out.lines))
    else:
        text = json.dumps(out.record, indent=2, sort_keys=True)
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text + "\n")
            print("\n".join(out.lines))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
