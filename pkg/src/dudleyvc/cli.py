"""Command line interface: verify, enumerate, vcdim, sample, demo, trial.

Exit codes: 0 verified maximum, 1 verified non-maximum, 2 approximate or
indeterminate, 3 error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import harness
from .arrangement import brute_force_arrangement, dualize, enumerate_arrangement
from .basis import builtin_basis, parse_basis_file
from .floyd import Mode, build_design_matrix
from .sampling import GAUSSIAN, UNIFORM, SamplingSpec, format_points, parse_points, sample_points
from .setsystem import format_set_system, is_maximum, parse_set_system, sauer_bound, vc_dimension


class CLIError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors must not collide with exit code 2 (approximate verdict)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(harness.EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _params(pairs):
    out = {}
    for item in pairs or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise CLIError(f"--param expects key=value, got {item!r}")
        out[key.strip()] = value.strip()
    return out


def _basis(args):
    if args.basis_file:
        return parse_basis_file(Path(args.basis_file).read_text())
    if args.family:
        return builtin_basis(args.family, **_params(args.param))
    raise CLIError("give --basis-file or --family")


def _spec(args, k, N=None):
    return SamplingSpec(
        N=N if N is not None else args.n,
        k=k,
        seed=args.seed,
        distribution=args.dist,
        precision_bits=args.bits,
    )


def _points(args, basis):
    if args.points:
        k, points = parse_points(Path(args.points).read_text())
        if k != basis.k:
            raise CLIError(f"points file has k={k}, basis expects k={basis.k}")
        return points, f"file {args.points}"
    if args.n is None:
        raise CLIError("give --points or --n (with --seed) to sample")
    spec = _spec(args, basis.k)
    return sample_points(spec), spec.describe()


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _add_basis_args(p):
    p.add_argument("--basis-file", help="basis file (dim:/f0:/f: lines)")
    p.add_argument("--family", help="built-in family: disks, monomials, poly_threshold, trig, halfspaces")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="family parameter, repeatable")


def _add_sample_args(p, with_points=True):
    if with_points:
        p.add_argument("--points", help="points file (k=<k> header, comma-separated rows)")
    p.add_argument("--n", type=int, help="number of points to sample")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dist", choices=(UNIFORM, GAUSSIAN), default=UNIFORM,
                   help="uniform on [0,1]^k or standard Gaussian")
    p.add_argument("--bits", type=int, default=53, help="dyadic precision of sampled coordinates")


def cmd_verify(args):
    basis = _basis(args)
    points, provenance = _points(args, basis)
    report = harness.run_verify(
        basis, points, exhaustive=args.exhaustive, oracle=args.oracle,
        epsilon=args.epsilon, provenance=provenance,
    )
    _emit(report.to_text(timing=args.timing), args.out)
    if args.json:
        Path(args.json).write_text(report.to_json(timing=args.timing))
    return report.exit_code


def cmd_enumerate(args):
    basis = _basis(args)
    points, _ = _points(args, basis)
    dm = build_design_matrix(basis, points)
    exact = dm.mode is Mode.EXACT
    hs = dualize(dm)
    enum = enumerate_arrangement(hs, exact=exact, tol=args.epsilon)
    if args.oracle:
        brute = brute_force_arrangement(hs, exact=exact, tol=args.epsilon)
        if brute.set_system != enum.set_system:
            raise harness.OracleMismatchError("incremental enumeration disagrees with brute force")
    _emit(format_set_system(enum.set_system), args.out)
    return 0 if enum.certified else harness.EXIT_APPROXIMATE


def cmd_vcdim(args):
    if args.set_system:
        system = parse_set_system(Path(args.set_system).read_text())
        d = args.dim
    else:
        basis = _basis(args)
        points, _ = _points(args, basis)
        dm = build_design_matrix(basis, points)
        system = enumerate_arrangement(dualize(dm), exact=dm.mode is Mode.EXACT).set_system
        d = args.dim if args.dim is not None else basis.n
    vc = vc_dimension(system)
    lines = [
        f"N: {system.ground_size}",
        f"count: {len(system)}",
        f"vc_dimension: {vc}",
    ]
    code = 0
    if d is not None:
        verdict = is_maximum(system, d, args.exhaustive)
        lines += [
            f"dimension: {d}",
            f"sauer_bound: {sauer_bound(system.ground_size, d)}",
            f"maximum: {str(verdict.is_maximum).lower()}",
            f"maximum_criterion: {verdict.criterion}",
        ]
        code = 0 if verdict.is_maximum else 1
    _emit("\n".join(lines) + "\n", args.out)
    return code


def cmd_sample(args):
    if args.n is None:
        raise CLIError("sample needs --n")
    spec = _spec(args, args.k)
    _emit(format_points(sample_points(spec), args.k), args.out)
    return 0


def cmd_demo(args):
    report = harness.run_demo(args.name, oracle=args.oracle)
    _emit(report.to_text(timing=args.timing), args.out)
    return report.exit_code


def cmd_trial(args):
    basis = _basis(args)
    if args.n is None:
        raise CLIError("trial needs --n")
    spec = _spec(args, basis.k)
    summary = harness.repeated_trials(basis, spec, args.trials, n_jobs=args.jobs)
    _emit(summary.to_text(), args.out)
    return 0 if summary.maximum_count == summary.trials else 1


def build_parser():
    parser = _Parser(prog="dudleyvc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="Floyd checks, cell count, VC dimension, maximum verdict")
    _add_basis_args(p)
    _add_sample_args(p)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--epsilon", type=float, default=1e-9)
    p.add_argument("--timing", action="store_true", help="include per-phase timings (not reproducible)")
    p.add_argument("--json", help="also write a JSON report here")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="write the restricted set system")
    _add_basis_args(p)
    _add_sample_args(p)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--epsilon", type=float, default=1e-9)
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("vcdim", help="VC dimension of a set-system file or an enumerated class")
    p.add_argument("--set-system", help="set-system file (N=<N> count=<c> header)")
    _add_basis_args(p)
    _add_sample_args(p)
    p.add_argument("--dim", type=int, help="intended dimension for the maximum check")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_vcdim)

    p = sub.add_parser("sample", help="write a seeded points file")
    p.add_argument("--k", type=int, required=True)
    _add_sample_args(p, with_points=False)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("demo", help="run a built-in scenario")
    p.add_argument("name", choices=harness.DEMOS)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--timing", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("trial", help="repeat verification over consecutive seeds")
    _add_basis_args(p)
    _add_sample_args(p, with_points=False)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_trial)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CLIError, ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return harness.EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
