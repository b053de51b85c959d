"""Command-line entry point: ``mpx <subcommand> ...``.

Exit codes: 0 success or MATCH, 1 MISMATCH / not shellable / not isomorphic,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .digraph import FAMILIES, Digraph, gen_family
from .errors import MpxError
from .harness import SUITES, reports_to_csv, run_suite
from .homology import homology
from .multipath import enumerate_multipaths, multipath_complex
from .shellability import DEFAULT_BUDGET, find_shelling
from .simplicial import SimplicialComplex, are_isomorphic


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _read_json(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None


def _load(path: str, cls):
    data = _read_json(path)
    try:
        return cls.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: not a valid {cls.__name__} document ({exc})") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc.strerror}") from None
    else:
        print(text)


def cmd_gen(args) -> int:
    g = gen_family(args.family, args.n)
    _emit(dumps(g.to_json()), args.out)
    return 0


def cmd_multipaths(args) -> int:
    poset = enumerate_multipaths(_load(args.input, Digraph))
    if args.count_only:
        print(len(poset))
    else:
        _emit(dumps(poset.to_json()), args.out)
    return 0


def cmd_complex(args) -> int:
    x = multipath_complex(_load(args.input, Digraph))
    _emit(dumps(x.to_json()), args.out)
    return 0


def cmd_homology(args) -> int:
    h = homology(_load(args.input, SimplicialComplex), reduced=args.reduced)
    if args.format == "csv":
        lines = ["dim,betti,torsion"]
        lines += [f"{i},{g.betti},{' '.join(map(str, g.torsion))}"
                  for i, g in sorted(h.groups.items())]
        _emit("\n".join(lines), args.out)
    else:
        _emit(dumps(h.to_json()), args.out)
    return 0


def cmd_shelling(args) -> int:
    outcome = find_shelling(_load(args.input, SimplicialComplex), budget=args.budget)
    print(dumps(outcome.to_json()))
    return 0 if outcome.is_shelling else 1


def cmd_verify(args) -> int:
    reports = run_suite(args.suite, args.max_n, jobs=args.jobs)
    if args.format == "csv":
        sys.stdout.write(reports_to_csv(reports))
    else:
        for r in reports:
            print(dumps(r.to_json()))
    return 1 if any(r.verdict == "MISMATCH" for r in reports) else 0


def cmd_iso(args) -> int:
    a = _load(args.a, SimplicialComplex)
    b = _load(args.b, SimplicialComplex)
    iso = are_isomorphic(a, b)
    if iso is None:
        print(dumps({"isomorphic": False}))
        return 1
    print(dumps({"isomorphic": True, "bijection": [[k, v] for k, v in iso.items()]}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mpx", description="Multipath complexes of digraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="generate a digraph from a named family")
    s.add_argument("--family", required=True, type=str.upper, choices=FAMILIES)
    s.add_argument("--n", required=True, type=int)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("multipaths", help="list the path poset of a digraph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_multipaths)

    s = sub.add_parser("complex", help="build the multipath complex of a digraph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_complex)

    s = sub.add_parser("homology", help="integral homology of a complex")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--reduced", action="store_true")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("shelling", help="search for a shelling order")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_shelling)

    s = sub.add_parser("verify", help="check the closed-form predictions")
    s.add_argument("--suite", required=True, choices=SUITES + ("all",))
    s.add_argument("--max-n", type=int, default=6)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("iso", help="test two complexes for isomorphism")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_iso)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, MpxError) as exc:
        print(f"mpx {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
