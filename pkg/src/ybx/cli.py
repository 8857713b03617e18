"""Command-line interface: ``ybx <command> ...``.

Exit codes: 0 success, 1 the input violates an axiom or a requested
property fails, 2 usage or file error, 3 the requested answer is unknown
within the search caps.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, cabling, corpus, decomposition, quotients
from .core import MalformedTableError, Solution, classify, diagonal_map, is_morphism, validate
from .monoid import DEFAULT_L_MAX, DEFAULT_NODE_CAP, DehornoyCapExceeded, dehornoy_class

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def read_solution(path: str) -> Solution:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"{path}: cannot read file ({exc.strerror})") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from exc
    try:
        return Solution.from_dict(data)
    except MalformedTableError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def read_valid(path: str, out) -> Solution | None:
    s = read_solution(path)
    report = validate(s)
    if report:
        print(f"{path}: not a solution", file=out)
        for v in report[:20]:
            print(f"  {v}", file=out)
        return None
    return s


def emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def write_solution(s: Solution, output: str | None) -> None:
    if output:
        Path(output).write_text(s.to_json(), encoding="utf-8")
    else:
        sys.stdout.write(s.to_json())


def cmd_validate(args) -> int:
    s = read_solution(args.file)
    report = validate(s)
    emit(args, {"valid": not report, "violations": [str(v) for v in report]},
         "valid" if not report else "invalid\n" + "\n".join(f"  {v}" for v in report))
    return EXIT_OK if not report else EXIT_VIOLATION


def _info_payload(s: Solution, args) -> dict:
    flags = classify(s)
    info = {"n": s.n, "name": s.name, **flags.__dict__}
    try:
        q = diagonal_map(s)
        info["diagonal"] = q.cycle_string()
        info["q_partition"] = q.cycle_type()
        info["dehornoy_class"] = dehornoy_class(s)
    except (ValueError, DehornoyCapExceeded) as exc:
        info["diagonal"] = None
        info["q_partition"] = None
        info["dehornoy_class"] = None
        info["diagonal_error"] = str(exc)
    n_max, orbits = decomposition.max_decomposability(s)
    info["n_max"] = n_max
    info["orbits"] = str(orbits)
    info["decomposable"] = n_max >= 2
    inj = quotients.injectivization(s, l_max=args.l_max, node_cap=args.node_cap)
    if not inj.kernel.is_discrete():
        info["injective"] = False
    else:
        info["injective"] = True if inj.status is quotients.Status.EXACT else "unknown"
    info["inj_kernel"] = str(inj.kernel)
    info["inj_status"] = str(inj.status)
    info["A_nilpotent"] = analysis.is_A_nilpotent(s)
    info["multipermutation_level"] = quotients.multipermutation_level(s)
    verdict = analysis.indecomposability_report(s, l_max=args.l_max, node_cap=args.node_cap)
    info["verdict"] = str(verdict.conclusion)
    info["criteria"] = [
        {"criterion": r.criterion, "fired": r.fired, "cause": r.cause} for r in verdict.reasons
    ]
    if s.n >= 2:
        simple, _ = analysis.is_simple(s)
        info["simple"] = simple
    return info


def cmd_info(args) -> int:
    s = read_valid(args.file, sys.stderr)
    if s is None:
        return EXIT_VIOLATION
    info = _info_payload(s, args)
    lines = []
    for key, value in info.items():
        if key == "criteria":
            for c in value:
                state = "fired" if c["fired"] else f"not fired ({c['cause']})"
                lines.append(f"criterion {c['criterion']}: {state}")
        else:
            lines.append(f"{key}: {value}")
    emit(args, info, "\n".join(lines))
    return EXIT_OK


def cmd_cable(args) -> int:
    s = read_valid(args.file, sys.stderr)
    if s is None:
        return EXIT_VIOLATION
    if args.k < 1:
        raise UsageError("-k must be a positive integer")
    try:
        cabled = cabling.cable(s, args.k, reduce=args.reduce)
    except cabling.NotABiquandleError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_VIOLATION
    result = cabled.result
    if args.json:
        payload = {"k": cabled.k, "solution": result.to_dict(),
                   "lambda_cycles": [p.cycle_string() for p in result.lam]}
        print(json.dumps(payload, indent=2))
        if args.output:
            write_solution(result, args.output)
    else:
        write_solution(result, args.output)
    return EXIT_OK


def cmd_quotient(args) -> int:
    s = read_valid(args.file, sys.stderr)
    if s is None:
        return EXIT_VIOLATION
    if args.kind == "bq":
        res = quotients.bq_quotient(s)
    elif args.kind == "retract":
        res = quotients.retract(s)
    else:
        res = quotients.injectivization(s, l_max=args.l_max, node_cap=args.node_cap)
    payload = {"kind": args.kind, "kernel": str(res.kernel), "status": str(res.status),
               "size": res.quotient.n}
    if args.output:
        write_solution(res.quotient, args.output)
        emit(args, payload, f"kernel: {res.kernel}\nstatus: {res.status}\nsize: {res.quotient.n}")
    elif args.json:
        payload["solution"] = res.quotient.to_dict()
        print(json.dumps(payload, indent=2))
    else:
        print(f"kernel: {res.kernel}\nstatus: {res.status}", file=sys.stderr)
        write_solution(res.quotient, None)
    return EXIT_UNKNOWN if res.status is quotients.Status.UNKNOWN else EXIT_OK


def cmd_decompose(args) -> int:
    s = read_valid(args.file, sys.stderr)
    if s is None:
        return EXIT_VIOLATION
    n_max, orbits = decomposition.max_decomposability(s)
    _, certificate = decomposition.is_decomposable(s)
    payload = {"n_max": n_max, "partition": str(orbits), "blocks": orbits.blocks(),
               "certificate": list(certificate) if certificate else None}
    text = f"n_max: {n_max}\npartition: {orbits}\ncertificate: " + (
        " ".join(map(str, certificate)) if certificate else "none (indecomposable)")
    emit(args, payload, text)
    return EXIT_OK


def cmd_simple(args) -> int:
    s = read_valid(args.file, sys.stderr)
    if s is None:
        return EXIT_VIOLATION
    if s.n < 2:
        raise UsageError("simplicity needs n >= 2")
    simple, witness = analysis.is_simple(s)
    payload = {"simple": simple, "witness": str(witness) if witness else None}
    emit(args, payload, f"simple: {simple}" + (f"\nwitness kernel: {witness}" if witness else ""))
    return EXIT_OK


def cmd_morphism(args) -> int:
    s = read_valid(args.source, sys.stderr)
    t = read_valid(args.target, sys.stderr)
    if s is None or t is None:
        return EXIT_VIOLATION
    try:
        f = [int(v) for v in args.map.split(",")]
        ok = is_morphism(f, s, t)
    except ValueError as exc:
        raise UsageError(f"--map: {exc}") from exc
    emit(args, {"morphism": ok}, f"morphism: {ok}")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_enumerate(args) -> int:
    if args.n > corpus.MAX_ENUMERATION_SIZE:
        raise UsageError(f"-n must be at most {corpus.MAX_ENUMERATION_SIZE}")
    if args.n >= corpus.SLOW_ENUMERATION_SIZE and not args.slow:
        raise UsageError(f"-n {args.n} needs --slow")
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    files = []
    for i, s in enumerate(corpus.enumerate_solutions(args.n, slow=args.slow)):
        s = Solution(*s.tables(), name=f"n{args.n}_{i:05d}")
        fname = f"{s.name}.json"
        (outdir / fname).write_text(s.to_json(), encoding="utf-8")
        files.append(fname)
    manifest = {"n": args.n, "count": len(files), "files": files}
    (outdir / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    emit(args, {"n": args.n, "count": len(files)}, f"n={args.n}: {len(files)} solutions")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--l-max", type=int, default=DEFAULT_L_MAX)
    caps.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)

    parser = argparse.ArgumentParser(prog="ybx", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the solution axioms")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", parents=[common, caps], help="summary of invariants and verdicts")
    p.add_argument("file")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("cable", parents=[common], help="k-cabled solution of a biquandle")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--reduce", action="store_true", help="reduce k modulo the Dehornoy class")
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("quotient", parents=[common, caps], help="bq, retract or inj quotient")
    p.add_argument("file")
    p.add_argument("--kind", choices=["bq", "retract", "inj"], required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("decompose", parents=[common], help="maximal decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("simple", parents=[common], help="simplicity test")
    p.add_argument("file")
    p.set_defaults(func=cmd_simple)

    p = sub.add_parser("morphism", parents=[common], help="check a map of solutions")
    p.add_argument("--map", required=True, help="comma-separated images, e.g. 0,0,1")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_morphism)

    p = sub.add_parser("enumerate", parents=[common], help="write all solutions of size n")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.add_argument("--slow", action="store_true", help="allow n = 4")
    p.set_defaults(func=cmd_enumerate)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ybx: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
