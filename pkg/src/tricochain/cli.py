"""Command-line interface: verify algebras, certify tensor associativity,
check the cochain embedding, and compute cohomology.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 bad input
(unreadable or malformed file, out-of-range options).  JSON reports are
deterministic for a fixed input file and seed; wall time appears only in the
human-readable output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .algebra import verify_tridendriform
from .algfile import AlgebraFileError, load_algebra
from .cochain import check_commutation, check_injectivity, check_roundtrip
from .cohomology import cohomology_dims
from .tensoralg import (check_associativity, generator_basis_triples,
                        random_tensor_triples, triples_max_degree)

DEGREE_CAP = 3


def _resolve_threads(value) -> int:
    if value is None:
        value = os.environ.get("TRICOCHAIN_THREADS", "1")
    try:
        n = int(value)
    except (TypeError, ValueError):
        raise ValueError(f"--threads: expected an integer, got {value!r}")
    if n < 1:
        raise ValueError("--threads: must be at least 1")
    return n


def _file_digest(path) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _report(command: str, path, passed: bool, payload: dict) -> dict:
    return {
        "command": command,
        "input": {"path": str(path), "sha256": _file_digest(path)},
        "passed": passed,
        "payload": payload,
    }


def _violation_lines(rep, limit: int = 5) -> list[str]:
    lines = []
    for v in rep.violations[:limit]:
        d = v.to_dict()
        lines.append(f"  {d['axiom']} at {d['at']}: left={d['left']} right={d['right']}")
    if len(rep.violations) > limit:
        lines.append(f"  ... {len(rep.violations) - limit} more violations")
    return lines


def _emit(args, report: dict, lines: list[str], wall: float) -> int:
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
        print(f"result: {'PASS' if report['passed'] else 'FAIL'}")
        print(f"wall time: {wall:.3f} s")
    return 0 if report["passed"] else 1


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    name, alg = load_algebra(args.file)
    rep = verify_tridendriform(alg)
    payload = {"algebra": name, "dim": alg.dim, "verification": rep.to_dict()}
    lines = [f"algebra: {name} (dim {alg.dim})",
             f"identity instances checked: {rep.checked}"]
    lines += _violation_lines(rep)
    report = _report("verify", args.file, rep.passed, payload)
    return _emit(args, report, lines, time.perf_counter() - t0)


def cmd_assoc_check(args) -> int:
    t0 = time.perf_counter()
    name, alg = load_algebra(args.file)
    if args.random < 0:
        print("error: --random must be nonnegative", file=sys.stderr)
        return 2
    if args.max_degree < 1:
        print("error: --max-degree must be at least 1", file=sys.stderr)
        return 2
    ver = verify_tridendriform(alg)
    payload = {"algebra": name, "dim": alg.dim, "seed": args.seed,
               "max_degree": args.max_degree, "random_count": args.random,
               "verification": ver.to_dict()}
    lines = [f"algebra: {name} (dim {alg.dim})", f"seed: {args.seed}"]
    if not ver.passed and not args.force:
        payload["refused"] = True
        lines.append(f"identity verification failed ({len(ver.violations)} violations); refusing the tensor check")
        lines += _violation_lines(ver)
        lines.append("rerun with --force to evaluate the tensor product anyway")
        return _emit(args, _report("assoc-check", args.file, False, payload), lines, time.perf_counter() - t0)
    exhaustive_triples = generator_basis_triples(alg)
    exhaustive = check_associativity(alg, exhaustive_triples)
    rnd_triples = random_tensor_triples(alg, args.random, max_degree=args.max_degree, seed=args.seed)
    rnd = check_associativity(alg, rnd_triples)
    payload["exhaustive"] = exhaustive.to_dict()
    payload["random"] = rnd.to_dict()
    payload["max_degree_exercised"] = max(triples_max_degree(exhaustive_triples),
                                          triples_max_degree(rnd_triples))
    passed = ver.passed and exhaustive.passed and rnd.passed
    lines.append(f"exhaustive generator triples: {exhaustive.checked} checked, {len(exhaustive.violations)} failed")
    lines += _violation_lines(exhaustive, limit=2)
    lines.append(f"random triples (degree <= {args.max_degree}): {rnd.checked} checked, {len(rnd.violations)} failed")
    lines += _violation_lines(rnd, limit=2)
    return _emit(args, _report("assoc-check", args.file, passed, payload), lines, time.perf_counter() - t0)


def cmd_cochain_check(args) -> int:
    t0 = time.perf_counter()
    if args.degree < 1:
        print("error: --degree must be at least 1", file=sys.stderr)
        return 2
    if args.degree > DEGREE_CAP and not args.allow_deep:
        print(f"error: --degree {args.degree} exceeds the cap {DEGREE_CAP} (pass --allow-deep to override)",
              file=sys.stderr)
        return 2
    name, alg = load_algebra(args.file)
    ver = verify_tridendriform(alg)
    payload = {"algebra": name, "dim": alg.dim, "degree": args.degree,
               "verification": ver.to_dict()}
    lines = [f"algebra: {name} (dim {alg.dim})", f"degree: {args.degree}"]
    if not ver.passed and not args.force:
        payload["refused"] = True
        lines.append(f"identity verification failed ({len(ver.violations)} violations); refusing the cochain check")
        lines += _violation_lines(ver)
        lines.append("rerun with --force to evaluate the cochain checks anyway")
        return _emit(args, _report("cochain-check", args.file, False, payload), lines, time.perf_counter() - t0)
    n = args.degree
    roundtrip = check_roundtrip(alg, n)
    commutation = check_commutation(alg, n)
    payload["roundtrip"] = roundtrip.to_dict()
    payload["commutation"] = commutation.to_dict()
    lines.append(f"extraction round trip: {roundtrip.checked} cells checked, {len(roundtrip.violations)} failed")
    lines.append(f"coboundary commutation: {commutation.checked} instances checked, {len(commutation.violations)} failed")
    results = [ver.passed, roundtrip.passed, commutation.passed]
    if n <= 2:
        explicit = check_commutation(alg, n, explicit=True)
        payload["commutation_explicit"] = explicit.to_dict()
        lines.append(f"explicit-formula commutation: {explicit.checked} instances checked, {len(explicit.violations)} failed")
        results.append(explicit.passed)
    injective = check_injectivity(alg, n)
    payload["injective"] = injective
    lines.append(f"embedding injective in degree {n}: {injective}")
    results.append(injective)
    passed = all(results)
    return _emit(args, _report("cochain-check", args.file, passed, payload), lines, time.perf_counter() - t0)


def cmd_cohomology(args) -> int:
    t0 = time.perf_counter()
    if args.max_degree < 1:
        print("error: --max-degree must be at least 1", file=sys.stderr)
        return 2
    if args.max_degree > DEGREE_CAP and not args.allow_deep:
        print(f"error: --max-degree {args.max_degree} exceeds the cap {DEGREE_CAP} (pass --allow-deep to override)",
              file=sys.stderr)
        return 2
    name, alg = load_algebra(args.file)
    rep = cohomology_dims(alg, args.max_degree, emit_cocycles=args.emit_cocycles)
    payload = {"algebra": name, "dim": alg.dim, "cohomology": rep.to_dict()}
    lines = [f"algebra: {name} (dim {alg.dim})"]
    for s in rep.degrees:
        lines.append(f"n={s.n}: dim C^n = {s.dim_cochains}, rank = {s.rank_delta}, "
                     f"kernel = {s.kernel_dim}, H^n = {s.h_dim}")
    for n, flag in rep.composites_zero:
        lines.append(f"delta^{n} o delta^{n - 1} = 0: {flag}")
    if args.emit_cocycles:
        for n, vecs in rep.cocycles:
            lines.append(f"cocycle basis in degree {n}: {[[str(x) for x in v] for v in vecs]}")
    passed = rep.all_composites_zero
    return _emit(args, _report("cohomology", args.file, passed, payload), lines, time.perf_counter() - t0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricochain",
        description="Exact verification and cohomology of three-product algebras over the rationals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit a deterministic JSON report (byte-identical for fixed input and seed)")
    common.add_argument("--threads", default=None, metavar="N",
                        help="worker-thread bound (default: TRICOCHAIN_THREADS or 1); computation is "
                             "exact and currently sequential, so output never depends on this")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="check the seven defining identities plus sum-product associativity")
    p.add_argument("file", help="algebra file (JSON structure constants)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("assoc-check", parents=[common],
                       help="certify associativity of the tensor-product algebra on exhaustive and random triples")
    p.add_argument("file", help="algebra file (JSON structure constants)")
    p.add_argument("--max-degree", type=int, default=3, metavar="N",
                   help="maximum monomial degree of random triples (default 3)")
    p.add_argument("--random", type=int, default=200, metavar="R",
                   help="number of seeded random triples (default 200)")
    p.add_argument("--seed", type=int, default=0, metavar="S", help="random seed (default 0)")
    p.add_argument("--force", action="store_true",
                   help="run the tensor check even if the identity verification failed")
    p.set_defaults(func=cmd_assoc_check)

    p = sub.add_parser("cochain-check", parents=[common],
                       help="certify the cochain embedding: round trip, coboundary commutation, injectivity")
    p.add_argument("file", help="algebra file (JSON structure constants)")
    p.add_argument("--degree", type=int, required=True, metavar="N", help="cochain degree (1..3)")
    p.add_argument("--allow-deep", action="store_true",
                   help=f"override the degree cap of {DEGREE_CAP} (cost grows exponentially)")
    p.add_argument("--force", action="store_true",
                   help="run the checks even if the identity verification failed")
    p.set_defaults(func=cmd_cochain_check)

    p = sub.add_parser("cohomology", parents=[common],
                       help="assemble differentials and report dims, ranks, kernels and H^n")
    p.add_argument("file", help="algebra file (JSON structure constants)")
    p.add_argument("--max-degree", type=int, default=2, metavar="N", help="largest degree to compute (default 2)")
    p.add_argument("--emit-cocycles", action="store_true", help="include kernel bases in the report")
    p.add_argument("--allow-deep", action="store_true",
                   help=f"override the degree cap of {DEGREE_CAP} (cost grows exponentially)")
    p.set_defaults(func=cmd_cohomology)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.threads = _resolve_threads(args.threads)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except AlgebraFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
