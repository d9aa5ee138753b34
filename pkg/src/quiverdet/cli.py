"""Command-line front end.

Dimension vectors and weights are comma lists (``3,3``); a weight starting
with a minus sign is passed as ``--weight=-1,0``.  Partitions accept the
exponent shorthand (``2,1^2``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bott import GrassmannianShape, bott, cohomology_Qdual_twist, cohomology_S_twist
from .characters import kronecker, kronecker_oracle
from .klw import KroneckerSetting, cm_weight_search, complex, degree, dual_weight, support_degree
from .manifest import run_manifest
from .notation import render
from .partitions import format_partition, parse_partition
from .quiver import DEFAULT_PRIME, DEFAULT_SAMPLES, generic_hom_ext, homext_condition, parse_quiver
from .tensor import TensorSetting, codim_and_fiber, tensor_complex, tensor_degree, tensor_dual_weight


def _ints(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}") from None


def _partition(text: str) -> tuple:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, payload, text: str) -> None:
    out = json.dumps(payload, ensure_ascii=False) if args.format == "json" else text
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _kron_setting(args) -> KroneckerSetting:
    return KroneckerSetting(args.m, args.alpha, args.gamma)


def cmd_kron(args) -> int:
    fn = kronecker_oracle if args.oracle else kronecker
    g = fn(args.lam, args.mu, args.nu)
    _emit(args, {"kronecker": g}, str(g))
    return 0


def cmd_bott(args) -> int:
    shape = GrassmannianShape(args.r, args.s)
    if args.twist == "S":
        out = cohomology_S_twist(shape, args.partition, args.w)
    elif args.twist == "Qdual":
        out = cohomology_Qdual_twist(shape, args.partition, args.w)
    else:
        out = bott(shape, args.on_q, args.on_s)
    if out is None:
        _emit(args, None, "all cohomology vanishes")
    else:
        w = ",".join(map(str, out.weight))
        _emit(args, {"degree": out.degree, "weight": list(out.weight), "dual": out.dual},
              f"H^{out.degree}: S^({w}){' (dual)' if out.dual else ''}")
    return 0


def cmd_ext(args) -> int:
    q = parse_quiver(args.quiver)
    res = generic_hom_ext(q, args.gamma, args.beta, samples=args.samples, prime=args.prime, seed=args.seed)
    cond = homext_condition(q, args.gamma, args.beta, samples=args.samples, prime=args.prime, seed=args.seed)
    payload = {"hom": res.hom, "ext": res.ext, "euler": res.euler, "homext": cond}
    _emit(args, payload, f"hom={res.hom} ext={res.ext} euler={res.euler} homext={cond}")
    return 0


def cmd_complex(args) -> int:
    cx = complex(_kron_setting(args), args.weight or (0, 0), jobs=args.jobs)
    text = render(cx, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_tcomplex(args) -> int:
    cx = tensor_complex(TensorSetting(args.alpha, args.gamma), args.weight or (0, 0, 0), jobs=args.jobs)
    text = render(cx, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_degree(args) -> int:
    d = degree(_kron_setting(args))
    _emit(args, {"degree": d}, str(d))
    return 0


def cmd_tdegree(args) -> int:
    st = TensorSetting(args.alpha, args.gamma)
    d = support_degree(tensor_complex(st)) if args.support else tensor_degree(st)
    _emit(args, {"degree": d}, str(d))
    return 0


def cmd_tcodim(args) -> int:
    cf = codim_and_fiber(TensorSetting(args.alpha, args.gamma), seed=args.seed)
    _emit(args, cf._asdict() | {"agrees": cf.agrees},
          f"e={cf.e} h={cf.h} probe_e={cf.probe_e} probe_h={cf.probe_h}")
    return 0


def cmd_cm_search(args) -> int:
    lo, hi = args.box
    box = [(a, b) for a in range(lo, hi + 1) for b in range(lo, hi + 1)]
    res = cm_weight_search(_kron_setting(args), box, seed=args.seed)
    payload = {"weights": [[list(w), cert] for w, cert in res.weights], "reason": res.reason}
    lines = [f"({w[0]};{w[1]}) {cert}" for w, cert in res.weights] or [f"none ({res.reason})"]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_dual_weight(args) -> int:
    if len(args.alpha) == 3:
        w = tensor_dual_weight(TensorSetting(args.alpha, args.gamma), args.weight or (0, 0, 0))
    else:
        w = dual_weight(KroneckerSetting(args.m, args.alpha, args.gamma), args.weight or (0, 0))
    _emit(args, {"weight": list(w)}, "(" + ";".join(map(str, w)) + ")")
    return 0


def cmd_run(args) -> int:
    report = run_manifest(args.manifest, jobs=args.jobs, seed=args.seed)
    if args.format == "json":
        payload = [{"index": r.index, "name": r.name, "kind": r.kind, "ok": r.ok, "messages": r.lines}
                   for r in report.results]
        _emit(args, payload, "")
    else:
        _emit(args, None, report.text())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("shorthand", "json"), default="shorthand")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized rank checks")
    common.add_argument("--jobs", type=int, default=1, help="worker threads")
    common.add_argument("--output", help="write output to this file")

    parser = argparse.ArgumentParser(prog="quiverdet", parents=[common],
                                     description="Complexes and degrees for Kronecker quiver and 3-tensor determinantal varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def kron_args(p, weight=True):
        p.add_argument("m", type=int, help="number of arrows")
        p.add_argument("alpha", type=_ints)
        p.add_argument("gamma", type=_ints)
        if weight:
            p.add_argument("--weight", type=_ints, default=None, help="line weight w1,w2")

    def tensor_args(p, weight=True):
        p.add_argument("alpha", type=_ints)
        p.add_argument("gamma", type=_ints)
        if weight:
            p.add_argument("--weight", type=_ints, default=None, help="line weight w1,w2,w3")

    p = add("kron", cmd_kron, "Kronecker coefficient g(lam, mu, nu)")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("nu", type=_partition)
    p.add_argument("--oracle", action="store_true", help="use the independent symmetric-function route")

    p = add("bott", cmd_bott, "cohomology of a homogeneous bundle on Gr")
    p.add_argument("r", type=int, help="ambient dimension")
    p.add_argument("s", type=int, help="subbundle rank")
    p.add_argument("--twist", choices=("S", "Qdual"), help="single-factor twist with --partition and --w")
    p.add_argument("--partition", type=_partition, default=())
    p.add_argument("--w", type=int, default=0)
    p.add_argument("--on-q", type=_ints, default=None, help="weight on the quotient")
    p.add_argument("--on-s", type=_ints, default=None, help="weight on the subbundle")

    p = add("ext", cmd_ext, "generic hom and ext between dimension vectors")
    p.add_argument("quiver", help='"Km" or "n:0-1,1-2"')
    p.add_argument("gamma", type=_ints)
    p.add_argument("beta", type=_ints)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--prime", type=int, default=DEFAULT_PRIME)

    kron_args(add("complex", cmd_complex, "terms of the K_m complex"))
    kron_args(add("degree", cmd_degree, "degree of the K_m determinantal hypersurface"), weight=False)
    p = add("cm-search", cmd_cm_search, "line weights giving Cohen-Macaulay complexes")
    kron_args(p, weight=False)
    p.add_argument("--box", type=_ints, default=(-3, 3), help="lo,hi range for both weights")

    p = add("dual-weight", cmd_dual_weight, "dual line weight (two or three factors)")
    p.add_argument("--m", type=int, default=None, help="arrows; omit for three-factor tensors")
    p.add_argument("alpha", type=_ints)
    p.add_argument("gamma", type=_ints)
    p.add_argument("--weight", type=_ints, default=None)

    tensor_args(add("tcomplex", cmd_tcomplex, "terms of the 3-tensor complex"))
    p = add("tdegree", cmd_tdegree, "degree of the 3-tensor hypersurface")
    tensor_args(p, weight=False)
    p.add_argument("--support", action="store_true", help="use the complex length when h - e >= 0")
    tensor_args(add("tcodim", cmd_tcodim, "codimension and generic fiber dimension"), weight=False)

    p = add("run", cmd_run, "run a manifest of jobs with goldens")
    p.add_argument("manifest")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bott" and args.twist is None and (args.on_q is None or args.on_s is None):
        parser.error("bott needs --twist or both --on-q and --on-s")
    if args.command == "dual-weight" and len(args.alpha) == 2 and args.m is None:
        parser.error("dual-weight on a quiver needs --m")
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
