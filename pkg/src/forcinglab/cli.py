"""Command-line interface.

Exit codes: 0 success or "generic-generated", 1 definite negative answer,
2 input or precondition error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .checks import verify_instance
from .config import DEFAULT_CAPS
from .errors import FixpointViolation, ForcingLabError, NotTransitiveError
from .hf import HfSet, format_hf, is_transitive, parse_hf
from .names import format_name
from .oracle import generic_sets
from .sigma import (
    SEPARATED,
    VARIANTS,
    Supercondition,
    build_generic,
    check_generic_generated,
    classify_by_bound,
    lambda_star,
    probe_open_question,
    sigma_fixpoint,
)
from .specfile import ForcingSpec, load_spec

SCHEMA = "forcinglab.report/1"

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(ForcingLabError):
    pass


def _sc_json(sc: Supercondition | None):
    if sc is None:
        return None
    return {
        "cond": sc.cond,
        "assign": {(s.label or format_name(s)): format_hf(x) for s, x in sc.assign},
    }


def _sc_text(sc: Supercondition | None) -> str:
    if sc is None:
        return "-"
    body = ", ".join(f"{k}↦{v}" for k, v in _sc_json(sc)["assign"].items())
    return f"<{sc.cond}, {{{body}}}>"


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="forcing spec file (.fs)")
    common.add_argument("--name", help="name to use as t (default: the spec file's default)")
    common.add_argument("--step", choices=VARIANTS, default=SEPARATED, help="step reading")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--trace", action="store_true", help="include every Σ level")
    common.add_argument("--oracle", action="store_true", help="attach the brute-force cross-check")
    common.add_argument("--max-conditions", type=int)
    common.add_argument("--max-pe", type=int, dest="max_potential_elements")
    common.add_argument("--max-x", type=int, dest="max_x_elements")
    common.add_argument("--max-rank-cap", type=int, dest="cap_max_rank")
    common.add_argument("--max-size-cap", type=int, dest="cap_max_size")

    def with_x(p, required=True):
        p.add_argument("--x", help="braces literal, e.g. '{{},{{}}}'")
        p.add_argument("--x-set", help="id of a 'set' declared in the spec file")
        p.set_defaults(x_required=required)

    ap = argparse.ArgumentParser(prog="forcinglab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"forcinglab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    with_x(sub.add_parser("check", parents=[common], help="is X = t[G] for some generic G?"))
    sub.add_parser("generics", parents=[common], help="list generic filters and t[G]")
    sv = sub.add_parser("survey", parents=[common], help="classify bounded transitive sets")
    sv.add_argument("--max-rank", type=int, default=3)
    sv.add_argument("--max-size", type=int, default=5)
    sub.add_parser("lambda-star", parents=[common], help="uniform bound on stabilization")
    bg = sub.add_parser("build-generic", parents=[common], help="construct a generic with t[G] = X")
    with_x(bg)
    bg.add_argument("--start-cond", help="start from the least fixpoint member with this condition")
    with_x(sub.add_parser("probe", parents=[common], help="probe generics inside Σ̂(X, t)"))
    vf = sub.add_parser("verify", parents=[common], help="run every property check on one instance")
    with_x(vf, required=False)
    vf.add_argument("--max-rank", type=int, default=3)
    vf.add_argument("--max-size", type=int, default=5)
    return ap


def _get_x(args, spec: ForcingSpec | None) -> HfSet | None:
    if getattr(args, "x", None) is not None:
        X = parse_hf(args.x)
    elif getattr(args, "x_set", None) is not None:
        if spec is None:
            raise UsageError("--x-set needs --spec")
        if args.x_set not in spec.sets:
            raise UsageError(f"unknown set {args.x_set!r}")
        X = spec.sets[args.x_set]
    elif getattr(args, "x_required", False):
        raise UsageError("this command needs --x or --x-set")
    else:
        return None
    if not is_transitive(X):
        raise NotTransitiveError(f"X is not transitive: {format_hf(X)}")
    return X


def _levels(trace, spec):
    return [sorted((_sc_text(sc) for sc in lv)) for lv in trace.levels]


def _cmd_check(args, spec, caps):
    X = _get_x(args, spec)
    t = spec.name(args.name)
    v = check_generic_generated(spec.poset, X, t, args.step, args.oracle, caps)
    rep = {
        "X": format_hf(X),
        "generic_generated": v.generic_generated,
        "lambda": v.lam,
        "witness": _sc_json(v.witness),
        "oracle_agreement": v.oracle_agreement,
    }
    if args.trace:
        tr = sigma_fixpoint(spec.poset, X, t, args.step, caps=caps)
        rep["levels"] = _levels(tr, spec)
    head = "GENERIC-GENERATED" if v.generic_generated else "NOT generic-generated"
    text = [f"{head}, lambda={v.lam}"]
    if v.witness is not None:
        text.append(f"witness: {_sc_text(v.witness)}")
    if v.oracle_agreement is not None:
        text.append(f"oracle agreement: {'yes' if v.oracle_agreement else 'NO'}")
    if args.trace:
        for g, lv in enumerate(rep["levels"]):
            text.append(f"Σ_{g} ({len(lv)}): " + " ".join(lv))
    code = EXIT_OK if v.generic_generated else EXIT_NO
    if v.oracle_agreement is False and args.step == SEPARATED:
        # the coupled reading is known to disagree on degenerate inputs
        code = EXIT_INTERNAL
    return code, rep, text


def _cmd_generics(args, spec, caps):
    t = spec.name(args.name)
    cat = generic_sets(spec.poset, t)
    rep = {
        "generics": [{"filter": sorted(G.members), "value": format_hf(v)} for G, v in cat.entries],
        "values": [format_hf(v) for v in cat.sorted_values()],
    }
    text = [f"{len(cat.entries)} generic filter(s), {len(cat.values)} distinct value(s)"]
    for G, v in cat.entries:
        text.append(f"  {{{','.join(sorted(G.members))}}}  t[G] = {format_hf(v)}")
    return EXIT_OK, rep, text


def _cmd_survey(args, spec, caps):
    t = spec.name(args.name)
    bound = lambda_star(spec.poset, t, args.step, caps)
    rows = classify_by_bound(spec.poset, t, args.max_rank, args.max_size, args.step, caps)
    rep = {
        "lambda_star": bound,
        "rows": [
            {"X": format_hf(r.X), "generic_generated": r.generic_generated,
             "levels_computed": r.levels_computed}
            for r in rows
        ],
    }
    if args.oracle:
        values = generic_sets(spec.poset, t).values
        for row, r in zip(rep["rows"], rows):
            row["oracle_agreement"] = (r.X in values) == r.generic_generated
    text = [f"lambda* = {bound}; {len(rows)} transitive set(s) surveyed"]
    for row in rep["rows"]:
        mark = "yes" if row["generic_generated"] else "no "
        extra = ""
        if "oracle_agreement" in row:
            extra = "  oracle ok" if row["oracle_agreement"] else "  ORACLE DISAGREES"
        text.append(f"  {mark}  {row['X']}{extra}")
    code = EXIT_OK
    if args.oracle and args.step == SEPARATED and not all(
        r["oracle_agreement"] for r in rep["rows"]
    ):
        code = EXIT_INTERNAL
    return code, rep, text


def _cmd_lambda_star(args, spec, caps):
    t = spec.name(args.name)
    bound = lambda_star(spec.poset, t, args.step, caps)
    per = []
    for G, X in generic_sets(spec.poset, t).entries:
        per.append({"filter": sorted(G.members), "X": format_hf(X),
                    "lambda": sigma_fixpoint(spec.poset, X, t, args.step, caps=caps).lam})
    rep = {"lambda_star": bound, "per_generic": per}
    text = [f"lambda* = {bound}"] + [
        f"  {{{','.join(p['filter'])}}}  X = {p['X']}  lambda = {p['lambda']}" for p in per
    ]
    return EXIT_OK, rep, text


def _cmd_build_generic(args, spec, caps):
    X = _get_x(args, spec)
    t = spec.name(args.name)
    tr = sigma_fixpoint(spec.poset, X, t, args.step, caps=caps)
    if not tr.nonempty:
        rep = {"X": format_hf(X), "generic_generated": False, "lambda": tr.lam}
        return EXIT_NO, rep, [f"NOT generic-generated, lambda={tr.lam}; nothing to build"]
    if args.start_cond:
        spec.poset.idx(args.start_cond)
        members = [sc for sc in tr.fixpoint if sc.cond == args.start_cond]
        if not members:
            raise UsageError(f"no fixpoint member has condition {args.start_cond!r}")
        start = min(members, key=lambda sc: (len(sc.assign), _sc_text(sc)))
    else:
        start = tr.least_member()
    out = build_generic(spec.poset, start, X, t, args.step, caps)
    rep = {
        "X": format_hf(X),
        "start": _sc_json(start),
        "filter": sorted(out.filter.members),
        "value": format_hf(out.value),
        "assignment": _sc_json(out.final)["assign"],
        "steps": [{"requirement": what, "supercondition": _sc_json(sc)} for what, sc in out.steps],
    }
    text = [f"start: {_sc_text(start)}"]
    text += [f"  {what}: {_sc_text(sc)}" for what, sc in out.steps]
    text.append(f"G = {{{','.join(rep['filter'])}}}, t[G] = {rep['value']}")
    return EXIT_OK, rep, text


def _cmd_probe(args, spec, caps):
    X = _get_x(args, spec)
    t = spec.name(args.name)
    pr = probe_open_question(spec.poset, X, t, args.step, caps)
    rep = {
        "X": format_hf(X),
        "sigma_hat": sorted(pr.sigma_hat),
        "candidates": [
            {"filter": sorted(G.members), "value": format_hf(v), "equals_X": ok}
            for G, v, ok in pr.candidates
        ],
        "summary": pr.summary,
    }
    text = [f"Σ̂ = {{{','.join(rep['sigma_hat'])}}}"]
    text += [
        f"  {{{','.join(c['filter'])}}}  t[G] = {c['value']}  {'= X' if c['equals_X'] else '≠ X'}"
        for c in rep["candidates"]
    ]
    text.append(pr.summary)
    return EXIT_OK, rep, text


def _cmd_verify(args, spec, caps):
    X = _get_x(args, spec)
    t = spec.name(args.name)
    results = verify_instance(spec.poset, t, X, args.step, args.max_rank, args.max_size)
    rep = {
        "checks": [
            {"check": r.name, "ok": r.ok, "checked": r.checked,
             "failures": [str(f) for f in r.failures[:10]]}
            for r in results
        ]
    }
    text = [f"[{'PASS' if r.ok else 'FAIL'}] {r.name} ({r.checked} checked)" for r in results]
    return (EXIT_OK if all(r.ok for r in results) else EXIT_INTERNAL), rep, text


_COMMANDS = {
    "check": _cmd_check,
    "generics": _cmd_generics,
    "survey": _cmd_survey,
    "lambda-star": _cmd_lambda_star,
    "build-generic": _cmd_build_generic,
    "probe": _cmd_probe,
    "verify": _cmd_verify,
}


def run_cli(argv=None) -> tuple[int, str]:
    """Run one command; returns ``(exit code, output text)``."""
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_INPUT if exc.code else EXIT_OK), ""
    try:
        caps = DEFAULT_CAPS.replace(
            max_conditions=args.max_conditions,
            max_potential_elements=args.max_potential_elements,
            max_x_elements=args.max_x_elements,
            max_rank=args.cap_max_rank,
            max_size=args.cap_max_size,
        )
        # X is validated before the spec is read
        if getattr(args, "x", None) is not None:
            _get_x(args, None)
        if args.spec is None:
            raise UsageError("--spec is required")
        spec = load_spec(args.spec, caps)
        code, rep, text = _COMMANDS[args.command](args, spec, caps)
        rep = {"schema": SCHEMA, "command": args.command, "variant": args.step,
               "name": args.name or _default_label(spec), **rep}
    except FixpointViolation as exc:
        return _fail(args, EXIT_INTERNAL, f"internal invariant violation: {exc}")
    except (ForcingLabError, OSError) as exc:
        return _fail(args, EXIT_INPUT, f"error: {exc}")
    if args.json:
        return code, json.dumps(rep, indent=2, ensure_ascii=False)
    return code, "\n".join(text)


def _default_label(spec: ForcingSpec) -> str | None:
    t = spec.name()
    return t.label


def _fail(args, code, message):
    if getattr(args, "json", False):
        return code, json.dumps({"schema": SCHEMA, "command": args.command, "error": message,
                                 "exit_code": code}, ensure_ascii=False)
    return code, message


def main(argv=None) -> int:
    code, out = run_cli(argv)
    if out:
        stream = sys.stdout if code in (EXIT_OK, EXIT_NO) else sys.stderr
        print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
