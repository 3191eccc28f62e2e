"""Command-line front end.

Exit codes: 0 success, 2 usage error (including a missing input file or a
function outside an operation's domain), 3 parse error, 4 size-cap error,
5 verification failure.
"""

import argparse
import json
import sys

from . import bench, export
from .endofunctions import EndoFunction, flatten, is_bijective
from .expansion import coefficient_direct, coefficient_via_flattening, det_terrible
from .limits import DEFAULT_SEED, DomainError, ParseError, SizeError
from .matrix import ExactMatrix, det_bareiss, det_cofactor, det_leibniz, perm_brute, perm_ryser
from .partitions import enumerate_ordered_partitions
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_SIZE, EXIT_VERIFY = 0, 2, 3, 4, 5

DET_METHODS = {
    "terrible": det_terrible,
    "leibniz": det_leibniz,
    "cofactor": det_cofactor,
    "bareiss": det_bareiss,
}
PERM_METHODS = {"ryser": perm_ryser, "brute": perm_brute}


class UsageError(Exception):
    pass


class VerifyFailed(Exception):
    pass


def _load_matrix(path):
    try:
        if path == "-":
            return ExactMatrix.parse(sys.stdin.read())
        return ExactMatrix.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_det(args):
    A = _load_matrix(args.file)
    if args.method == "bareiss":
        return f"{det_bareiss(A)}\n"
    return f"{DET_METHODS[args.method](A, cap=args.cap)}\n"


def cmd_perm(args):
    A = _load_matrix(args.file)
    return f"{PERM_METHODS[args.method](A, cap=args.cap)}\n"


def cmd_coeffs(args):
    if args.function:
        f = EndoFunction.parse(args.function)
        direct = coefficient_direct(f, cap=args.cap)
        row = {
            "function": " ".join(map(str, f.table)),
            "c_f": direct,
            "is_bijective": is_bijective(f),
            "domain_size": flatten(f).function.n,
            "c_f_via_flattening": coefficient_via_flattening(f, cap=args.cap),
        }
        if args.format == "json":
            return json.dumps({"schema": 1, **row}, indent=2) + "\n"
        keys = list(row)
        vals = [str(v).lower() if isinstance(v, bool) else str(v) for v in row.values()]
        return ",".join(keys) + "\n" + ",".join(vals) + "\n"
    if args.n is None:
        raise UsageError("coeffs needs n or --function")
    if args.format == "json":
        return export.coefficients_json(args.n, cap=args.cap)
    return export.coefficients_csv(args.n, cap=args.cap)


def cmd_partitions(args):
    if args.count:
        count = sum(1 for _ in enumerate_ordered_partitions(args.n, cap=args.cap))
        return f"{count}\n"
    if args.format == "json":
        return export.partitions_json(args.n, cap=args.cap)
    return export.partitions_text(args.n, cap=args.cap)


def cmd_poset(args):
    if args.format == "json":
        return export.poset_json(args.n, args.direction, cap=args.cap)
    return export.poset_dot(args.n, args.direction, cap=args.cap)


def cmd_polytope(args):
    f = EndoFunction.parse(args.function)
    if args.format == "dot":
        return export.polytope_dot(f, cap=args.cap)
    return export.polytope_json(f, cap=args.cap)


def cmd_forest(args):
    return export.forest_dot(EndoFunction.parse(args.function))


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    lines = []
    ok = True
    for name in names:
        res = run_suite(name, n_max=args.n_max, trials=args.trials, seed=args.seed)
        ok &= res.passed
        lines.append(res.line())
    lines.append("ALL PASS" if ok else "FAILURES")
    out = "\n".join(lines) + "\n"
    if not ok:
        raise VerifyFailed(out)
    return out


def cmd_bench(args):
    ns = range(args.n_min, args.n_max + 1)
    methods = args.methods.split(",") if args.methods else None
    for m in methods or ():
        if m not in bench.METHODS:
            raise UsageError(f"unknown method {m!r}; choose from {', '.join(bench.METHODS)}")
    rows = bench.run(ns, methods, seed=args.seed, repeats=args.repeats)
    return bench.to_csv(rows)


def build_parser():
    p = argparse.ArgumentParser(
        prog="opdet",
        description="Exact determinants via the ordered-partition expansion, with oracles and exports.",
    )
    p.add_argument("--cap", type=int, default=None, help="override the size cap for this run")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("det", help="determinant of a matrix file (text or JSON, '-' for stdin)")
    s.add_argument("--method", choices=DET_METHODS, default="terrible")
    s.add_argument("file")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("perm", help="permanent of a matrix file")
    s.add_argument("--method", choices=PERM_METHODS, default="ryser")
    s.add_argument("file")
    s.set_defaults(func=cmd_perm)

    s = sub.add_parser("coeffs", help="coefficient c_f of every function on 1..n, or of one function")
    s.add_argument("n", type=int, nargs="?")
    s.add_argument("--function", help="single function, e.g. '3: 2 3 1'")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.set_defaults(func=cmd_coeffs)

    s = sub.add_parser("partitions", help="list or count ordered partitions of 1..n")
    s.add_argument("n", type=int)
    s.add_argument("--count", action="store_true")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_partitions)

    s = sub.add_parser("poset", help="covering relations of the ordered-partition poset")
    s.add_argument("n", type=int)
    s.add_argument("--format", choices=("dot", "json"), default="dot")
    s.add_argument(
        "--direction",
        choices=("down", "up"),
        default="down",
        help="down: B -> merge of two adjacent blocks; up: the reverse",
    )
    s.set_defaults(func=cmd_poset)

    s = sub.add_parser("polytope", help="faces of S_f for an acyclic function, with Euler characteristic")
    s.add_argument("--function", required=True, help="e.g. '3: 1 1 1'")
    s.add_argument("--format", choices=("json", "dot"), default="json")
    s.set_defaults(func=cmd_polytope)

    s = sub.add_parser("forest", help="rooted forest of an acyclic function, as DOT")
    s.add_argument("--function", required=True)
    s.set_defaults(func=cmd_forest)

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("--suite", choices=["all", *SUITES], default="all")
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--trials", type=int, default=None)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bench", help="time every method; CSV on stdout")
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--methods", help="comma-separated subset of methods")
    s.add_argument("--repeats", type=int, default=3)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is not None and args.cap < 1:
        parser.error("--cap must be >= 1")
    try:
        out = args.func(args)
    except VerifyFailed as exc:
        sys.stdout.write(str(exc))
        return EXIT_VERIFY
    except (UsageError, DomainError) as exc:
        print(f"opdet: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeError as exc:
        print(f"opdet: size error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ParseError as exc:
        print(f"opdet: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
