"""``omlab`` command-line front end.

Exit status: 0 when every applicable check passed, 1 when a mathematical
check failed, 2 for usage, parse and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path

from . import deductive as ds
from .algebra import AxiomViolation, FiniteAlgebra, axiom_reports, validate
from .algfile import parse_alg, read_alg, write_alg
from .corpus import corpus_dir
from .errors import BudgetExceeded, InvalidState, OmlabError, ParseError
from .laws import DEPTHS, run_suite
from .lp import fmt
from .search import SearchSpec, enumerate_models, manifest
from .states import (StateVector, classify_state, enumerate_01_states, kernel,
                     state_space_report)

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str) -> FiniteAlgebra:
    return read_alg(path)


# --- validate ---------------------------------------------------------------

def cmd_validate(args) -> int:
    path = Path(args.file)
    table, one, zero = parse_alg(path.read_text(encoding="utf-8"))
    try:
        validate(table, one, zero, path.stem)
        reports = []
    except AxiomViolation as exc:
        reports = exc.reports
    if args.json:
        payload = {"algebra": path.stem, "valid": not reports,
                   "violations": [{"law": r.law, "witnesses": [list(w) for w in r.witnesses]}
                                  for r in reports]}
        _emit(args, dumps(payload))
    else:
        lines = [f"{path.stem}: {'valid' if not reports else 'INVALID'}"]
        lines += [f"  {r.law} fails at {', '.join(map(str, r.witnesses))}" for r in reports]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_CHECK if reports else EXIT_OK


# --- laws and corpus --------------------------------------------------------

def _suite_text(report) -> str:
    lines = [f"{report.algebra} (depth {report.depth})"]
    for e in report.entries:
        mark = {"holds": "ok  ", "fails": "FAIL", "not-applicable": "n/a ", "skipped": "skip"}[e.verdict]
        extra = ""
        if e.witnesses:
            extra = f"  witness {e.witnesses[0]}"
        if e.note and e.verdict != "holds":
            extra += f"  [{e.note}]"
        kind = "" if e.kind == "theorem" else f" ({e.kind})"
        lines.append(f"  {mark} {e.label}{kind}{extra}")
    return "\n".join(lines) + "\n"


def cmd_laws(args) -> int:
    alg = _load(args.file)
    report = run_suite(alg, args.depth, args.budget_subsets, args.samples, args.seed)
    _emit(args, dumps(report.as_dict()) if args.json else _suite_text(report))
    return EXIT_CHECK if report.failures else EXIT_OK


def _suite_for_file(path: Path, depth: str, budget, samples: int, seed: int):
    try:
        alg = read_alg(path)
    except (OSError, OmlabError) as exc:
        return path.name, None, f"{type(exc).__name__}: {exc}"
    return path.name, run_suite(alg, depth, budget, samples, seed), None


def run_corpus(directory, depth: str = "all", budget: int | None = None, samples: int = 16,
               seed: int = 0, workers: int | None = None) -> tuple[int, dict]:
    """Run the suite on every ``.alg`` file; results come back in path order."""
    files = sorted(Path(directory).glob("*.alg"))
    job = partial(_suite_for_file, depth=depth, budget=budget, samples=samples, seed=seed)
    if workers == 1 or len(files) < 2:
        results = list(map(job, files))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, files))
    reports = [(name, rep) for name, rep, err in results if err is None]
    errors = [{"file": name, "error": err} for name, _, err in results if err is not None]
    failures = sum(len(r.failures) for _, r in reports)
    summary = {
        "algebras": len(reports),
        "statements_checked": sum(1 for _, r in reports for e in r.entries if e.applicable),
        "failures": failures,
        "skipped_budget": sum(len(r.skipped) for _, r in reports),
        "errors": len(errors),
    }
    payload = {
        "depth": depth,
        "seed": seed,
        "samples": samples,
        "summary": summary,
        "errors": errors,
        "reports": [dict(r.as_dict(), file=name) for name, r in reports],
    }
    code = EXIT_USAGE if errors else (EXIT_CHECK if failures else EXIT_OK)
    return code, payload


def cmd_corpus(args) -> int:
    directory = args.directory or corpus_dir()
    code, payload = run_corpus(directory, args.depth, args.budget_subsets, args.samples, args.seed)
    if args.json:
        _emit(args, dumps(payload))
    else:
        s = payload["summary"]
        lines = [f"{r['file']}: {sum(e['verdict'] == 'fails' and e['kind'] == 'theorem' for e in r['entries'])} failures"
                 for r in payload["reports"]]
        lines += [f"{e['file']}: ERROR {e['error']}" for e in payload["errors"]]
        lines.append(f"algebras {s['algebras']}, statements checked {s['statements_checked']}, "
                     f"failures {s['failures']}, skipped by budget {s['skipped_budget']}, "
                     f"errors {s['errors']}")
        _emit(args, "\n".join(lines) + "\n")
    return code


# --- deductive systems ------------------------------------------------------

def cmd_ds_enumerate(args) -> int:
    alg = _load(args.file)
    fam = ds.enumerate_family(alg, args.kind, args.budget_subsets)
    if args.json:
        _emit(args, dumps({"algebra": alg.name, "kind": fam.kind, "members": fam.hex_members()}))
    else:
        lines = [f"{alg.name}: {len(fam.members)} {fam.kind} subsets"]
        lines += [f"  {hex(m)}  {{{', '.join(map(str, ds.members(m, alg.size)))}}}"
                  for m in fam.members]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_ds_characterize(args) -> int:
    alg = _load(args.file)
    fn = ds.characterize_ioml_via_ds if args.mode == "p1" else ds.characterize_boolean_via_ds
    ch = fn(alg, args.budget_subsets)
    sep = ds.separation_check(alg, args.mode, args.budget_subsets)
    expected = ch.left
    w = ch.witness
    payload = {
        "algebra": alg.name,
        "mode": args.mode,
        "left": ch.left,
        "right": ch.right,
        "agree": ch.agree,
        "witness": None if w is None else {"subset": hex(w[0]), "x": w[1], "y": w[2]},
        "separation": {"holds": sep.holds, "agree": sep.holds == expected,
                       "failing": None if sep.failing is None else list(sep.failing)},
    }
    if args.json:
        _emit(args, dumps(payload))
    else:
        name = "IOML" if args.mode == "p1" else "implicative-Boolean"
        prop = args.mode.upper()
        lines = [f"{alg.name}: {name} = {ch.left}; every o-DS has {prop} = {ch.right}; "
                 f"{'agree' if ch.agree else 'DISAGREE'}"]
        if w is not None:
            lines.append(f"  o-DS {hex(w[0])} fails {prop} at x={w[1]}, y={w[2]}")
        lines.append(f"  separation by o-DS with {prop}: {sep.holds}"
                     + ("" if sep.failing is None else f" (fails for x={sep.failing[0]}, y={sep.failing[1]})"))
        _emit(args, "\n".join(lines) + "\n")
    ok = ch.agree and sep.holds == expected
    return EXIT_OK if ok else EXIT_CHECK


# --- states -----------------------------------------------------------------

def _verdict_dict(v) -> dict:
    return {
        "holds": v.holds,
        "failing": None if v.failing is None else list(v.failing),
        "note": v.note,
        "witnesses": [{"args": list(k), "state": s.strings()} for k, s in v.witnesses.items()],
    }


def state_report_dict(rep) -> dict:
    return {"algebra": rep.algebra, "feasible": rep.feasible,
            "unital": _verdict_dict(rep.unital), "full": _verdict_dict(rep.full),
            "rich": _verdict_dict(rep.rich)}


def cmd_states_report(args) -> int:
    alg = _load(args.file)
    rep = state_space_report(alg, verbose=args.verbose)
    if args.json:
        _emit(args, dumps(state_report_dict(rep)))
    else:
        lines = [f"{alg.name}: states {'exist' if rep.feasible else 'do not exist'}"]
        for name in ("unital", "full", "rich"):
            v = getattr(rep, name)
            tail = "" if v.failing is None else f" (fails at {v.failing})"
            lines.append(f"  {name}: {v.holds}{tail}{'  ' + v.note if v.note else ''}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def classification_dict(alg, s, c) -> dict:
    return {"algebra": alg.name, "state": s.strings(), "flags": c.as_dict(),
            "witnesses": {k: list(v) for k, v in sorted(c.witnesses.items())},
            "kernel": hex(kernel(alg, s))}


def cmd_states_classify(args) -> int:
    alg = _load(args.file)
    try:
        s = StateVector.parse(args.state, alg.name)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad state {args.state!r}: {exc}", 1) from None
    c = classify_state(alg, s)
    if args.json:
        _emit(args, dumps(classification_dict(alg, s, c)))
    else:
        lines = [f"{alg.name}: s = ({', '.join(s.strings())})"]
        for k, v in c.as_dict().items():
            w = c.witnesses.get(k)
            lines.append(f"  {k}: {v}" + (f"  witness {w}" if w else ""))
        lines.append(f"  kernel: {{{', '.join(map(str, ds.members(kernel(alg, s), alg.size)))}}}")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_states_zero_one(args) -> int:
    alg = _load(args.file)
    states = enumerate_01_states(alg, args.budget_subsets)
    if args.json:
        _emit(args, dumps({"algebra": alg.name, "states": [s.strings() for s in states]}))
    else:
        lines = [f"{alg.name}: {len(states)} {{0,1}}-states"]
        lines += ["  (" + ", ".join(s.strings()) + ")" for s in states]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


# --- search -----------------------------------------------------------------

def cmd_search(args) -> int:
    spec = SearchSpec(args.size, frozenset(args.require or ()), args.limit)
    models = enumerate_models(spec)
    man = manifest(models, args.size)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for alg in models:
            (out / f"{alg.name}.alg").write_text(write_alg(alg), encoding="utf-8")
        (out / "manifest.json").write_text(dumps(man), encoding="utf-8")
    if args.json:
        sys.stdout.write(dumps(man))
    else:
        counts = ", ".join(f"{k} {v}" for k, v in man["counts"].items()) or "none"
        sys.stdout.write(f"size {args.size}: {man['total']} models ({counts})\n")
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--budget-subsets", type=int, default=None, metavar="K",
                        help="largest subset count to enumerate (default 2^14 or $OMLAB_BUDGET)")
    common.add_argument("--samples", type=int, default=16, metavar="K",
                        help="random convex combinations added to the state sample")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, metavar="PATH")

    p = argparse.ArgumentParser(prog="omlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="check the axioms of an .alg file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    law = sub.add_parser("laws", parents=[common], help="run the law suite on one algebra")
    law.add_argument("file")
    law.add_argument("--depth", choices=tuple(DEPTHS), default="all")
    law.set_defaults(func=cmd_laws)

    d = sub.add_parser("ds", help="deductive systems")
    dsub = d.add_subparsers(dest="ds_command", required=True)
    de = dsub.add_parser("enumerate", parents=[common])
    de.add_argument("--kind", choices=ds.KINDS, default="ods")
    de.add_argument("file")
    de.set_defaults(func=cmd_ds_enumerate)
    dc = dsub.add_parser("characterize", parents=[common])
    dc.add_argument("--mode", choices=("p1", "p2"), default="p1")
    dc.add_argument("file")
    dc.set_defaults(func=cmd_ds_characterize)

    s = sub.add_parser("states", help="states and their types")
    ssub = s.add_subparsers(dest="states_command", required=True)
    sr = ssub.add_parser("report", parents=[common])
    sr.add_argument("file")
    sr.add_argument("--verbose", action="store_true", help="probe every pair, keep all results")
    sr.set_defaults(func=cmd_states_report)
    sc = ssub.add_parser("classify", parents=[common])
    sc.add_argument("file")
    sc.add_argument("--state", required=True, help='comma-separated fractions, e.g. "0,1/2,1/2,1"')
    sc.set_defaults(func=cmd_states_classify)
    sz = ssub.add_parser("zero-one", parents=[common])
    sz.add_argument("file")
    sz.set_defaults(func=cmd_states_zero_one)

    se = sub.add_parser("search", parents=[common], help="enumerate models up to isomorphism")
    se.add_argument("--size", type=int, required=True)
    se.add_argument("--require", action="append", choices=("ioml", "boolean", "non-ioml"))
    se.add_argument("--limit", type=int, default=None)
    se.set_defaults(func=cmd_search)

    c = sub.add_parser("corpus", parents=[common], help="run the law suite over a directory")
    c.add_argument("directory", nargs="?", default=None,
                   help="directory of .alg files (default: the shipped corpus)")
    c.add_argument("--depth", choices=tuple(DEPTHS), default="all")
    c.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, AxiomViolation, InvalidState, BudgetExceeded, OmlabError, OSError,
            ValueError) as exc:
        print(f"omlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
