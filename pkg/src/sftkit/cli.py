"""Command-line interface.

Exit statuses: verdict commands return 0 for a certified yes, 1 for a
certified no and 3 for unknown.  Errors: 64 usage, 65 malformed input,
69 resource cap, 70 internal.  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import constructions, decision, reductions
from .errors import EmptyBoxError, InputError, ResourceLimitError, SftError
from .limits import Limits
from .presentations import PatternPresentation, SftPresentation, WangTileset, lint, wang_to_sft
from .serialization import dumps, load, load_sft, load_sofic, parse_pattern

EXIT_YES, EXIT_NO, EXIT_UNKNOWN = 0, 1, 3
EXIT_USAGE, EXIT_INPUT, EXIT_RESOURCE, EXIT_INTERNAL = 64, 65, 69, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _json(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _verdict_doc(v: decision.Verdict, labels: dict[str, str]) -> dict[str, Any]:
    doc = {
        "verdict": labels[v.answer],
        "radius": v.radius,
        "max_period": v.max_period,
        "witness": v.witness.to_json() if v.witness else None,
    }
    doc.update(v.detail)
    return doc


def _verdict_text(v: decision.Verdict, labels: dict[str, str]) -> str:
    parts = []
    if v.witness is not None:
        parts.append(f"period {v.witness.period}")
    elif v.radius is not None:
        parts.append(f"radius {v.radius}" if not v.is_unknown else f"radius budget {v.radius}")
    if v.is_unknown and v.max_period is not None:
        parts.append(f"max period {v.max_period}")
    for k, val in v.detail.items():
        parts.append(f"{k} {val}")
    label = labels[v.answer]
    return f"{label} ({', '.join(parts)})" if parts else label


def _report(args, v: decision.Verdict, labels: dict[str, str], exits: dict[str, int]) -> int:
    text = _json(_verdict_doc(v, labels)) if args.json else _verdict_text(v, labels)
    _emit(args.out, text)
    return exits[v.answer]


YES_NO = {"yes": "yes", "no": "no", "unknown": "unknown"}
STRAIGHT = {"yes": EXIT_YES, "no": EXIT_NO, "unknown": EXIT_UNKNOWN}


def cmd_wang_compile(args) -> int:
    doc = load(args.tiles)
    if not isinstance(doc, WangTileset):
        raise InputError("expected a Wang tileset file", args.tiles)
    _emit(args.out, dumps(wang_to_sft(doc)))
    return 0


def cmd_product(args) -> int:
    _emit(args.out, dumps(constructions.product(load_sft(args.a), load_sft(args.b), limits=args.limits)))
    return 0


def cmd_union(args) -> int:
    _emit(args.out, dumps(constructions.disjoint_union(load_sft(args.a), load_sft(args.b))))
    return 0


def cmd_fixed_points(args) -> int:
    pres = load_sft(args.p)
    found = decision.fixed_points(pres)
    answer = "yes" if found else "no"
    if args.json:
        _emit(args.out, _json({"verdict": answer, "fixed_points": found}))
    else:
        _emit(args.out, answer)
    return STRAIGHT[answer]


def cmd_check_empty(args) -> int:
    v = decision.check_empty(load_sft(args.p), args.radius, args.limits)
    # a "no" from check_empty means no admissible pattern: certified empty
    return _report(args, v, {"no": "empty", "unknown": "unknown", "yes": "nonempty"},
                   {"no": EXIT_YES, "unknown": EXIT_UNKNOWN, "yes": EXIT_NO})


def cmd_find_periodic(args) -> int:
    v = decision.find_periodic(load_sft(args.p), args.max_period, args.limits)
    return _report(args, v, {"yes": "nonempty", "no": "empty", "unknown": "unknown"}, STRAIGHT)


def cmd_decide_empty(args) -> int:
    v = decision.decide_empty(load_sft(args.p), args.radius, args.max_period, args.limits)
    return _report(args, v, {"yes": "empty", "no": "nonempty", "unknown": "unknown"}, STRAIGHT)


def _load_pattern(path: str) -> PatternPresentation:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", path) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", path) from None
    try:
        return parse_pattern(doc, "$")
    except InputError as exc:
        raise InputError(str(exc), path) from None


def cmd_lang_member(args) -> int:
    pres = load_sft(args.p)
    q = _load_pattern(args.pattern)
    for w in q.words:
        pres.group.check_word(w)
    for v in q.values:
        if v not in pres.alphabet:
            raise InputError(f"pattern value {v} is not in the alphabet", args.pattern)
    v = decision.pattern_in_language_bounded(pres, q, args.radius, args.max_period, args.limits)
    return _report(args, v, YES_NO, STRAIGHT)


def cmd_contains(args) -> int:
    v = decision.contains_bounded(load_sft(args.candidate), load_sft(args.x), args.radius, args.max_period, args.limits)
    return _report(args, v, YES_NO, STRAIGHT)


def cmd_count(args) -> int:
    pres = load_sft(args.p)
    count = decision.pattern_count(pres, args.box, args.limits)
    if args.json:
        _emit(args.out, _json({"box": args.box, "dimension": pres.group.dimension, "count": count}))
    else:
        _emit(args.out, str(count))
    return 0


def cmd_entropy_bound(args) -> int:
    pres = load_sft(args.p)
    try:
        bound = decision.entropy_upper_bound(pres, args.box, args.limits)
    except EmptyBoxError:
        if args.json:
            _emit(args.out, _json({"box": args.box, "count": 0, "bound": None, "empty": True}))
        else:
            _emit(args.out, "empty")
        return EXIT_NO
    count = decision.pattern_count(pres, args.box, args.limits)
    if args.json:
        _emit(args.out, _json({"box": args.box, "count": count, "bound": repr(bound), "empty": False}))
    else:
        _emit(args.out, repr(bound))
    return 0


def cmd_reduce_berger(args) -> int:
    pres = load_sft(args.input)
    if args.witness:
        if args.plus or args.minus:
            raise UsageError("reduce berger: use either --witness or --plus/--minus")
        x = load_sft(args.param_x) if args.param_x else None
        w = reductions.builtin_witness(args.witness, pres.group, x)
    else:
        if not (args.plus and args.minus):
            raise UsageError("reduce berger: give --witness NAME, or both --plus and --minus")
        w = reductions.BergerWitness("custom", load_sft(args.plus), load_sft(args.minus), "user supplied", "")
    _emit(args.out, dumps(reductions.berger_reduction(pres, w, args.limits)))
    return 0


def cmd_reduce_invariant(args) -> int:
    z = reductions.invariant_gap_reduction(load_sft(args.input), load_sft(args.x0), load_sft(args.y0), args.limits)
    _emit(args.out, dumps(z))
    return 0


def cmd_reduce_sofic(args) -> int:
    z = reductions.sofic_rice_reduction(load_sft(args.input), load_sofic(args.plus), args.limits)
    _emit(args.out, dumps(z))
    return 0


def cmd_witness_list(args) -> int:
    from .groups import Grid

    # citations do not depend on the group or on X; a placeholder X serves the parameterized entries
    grid = Grid(2)
    placeholder = reductions.singleton_sft(grid)
    rows = []
    for name, prop in reductions.CATALOG.items():
        parameterized = name in reductions.PARAMETERIZED
        w = reductions.builtin_witness(name, grid, placeholder if parameterized else None)
        rows.append({
            "name": name,
            "property": prop,
            "parameterized": parameterized,
            "amenable_only": w.amenable_only,
            "citation": w.citation,
        })
    if args.json:
        _emit(args.out, _json(rows))
    else:
        lines = []
        for row in rows:
            tag = " [needs --param-x; amenable groups only]" if row["parameterized"] else ""
            lines.append(f"{row['name']}: {row['property']}{tag}")
            lines.append(f"    {row['citation']}")
        _emit(args.out, "\n".join(lines))
    return 0


def cmd_lint(args) -> int:
    doc = load(args.p)
    pres: SftPresentation = wang_to_sft(doc) if isinstance(doc, WangTileset) else getattr(doc, "base", doc)
    findings = lint(pres)
    if args.json:
        _emit(args.out, _json({"findings": findings}))
    else:
        _emit(args.out, "\n".join(findings) if findings else "ok")
    return 1 if findings else 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="sftkit", description="Subshifts of finite type on Z^d and free groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    wang = sub.add_parser("wang", help="Wang tileset tools")
    wsub = wang.add_subparsers(dest="wang_command", required=True, parser_class=_Parser)
    p = wsub.add_parser("compile", parents=[common], help="compile a tileset to an SFT presentation")
    p.add_argument("tiles")
    p.set_defaults(func=cmd_wang_compile)

    for name, func, helptext in (
        ("product", cmd_product, "direct product of two SFTs"),
        ("union", cmd_union, "disjoint union of two SFTs"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=func)

    p = sub.add_parser("fixed-points", parents=[common], help="decide whether the SFT has a fixed point")
    p.add_argument("p")
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("check-empty", parents=[common], help="certify emptiness up to a radius")
    p.add_argument("p")
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_check_empty)

    p = sub.add_parser("find-periodic", parents=[common], help="search periodic configurations")
    p.add_argument("p")
    p.add_argument("--max-period", type=int, required=True)
    p.set_defaults(func=cmd_find_periodic)

    p = sub.add_parser("decide-empty", parents=[common], help="emptiness by radius and periodic search")
    p.add_argument("p")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--max-period", type=int, required=True)
    p.set_defaults(func=cmd_decide_empty)

    p = sub.add_parser("lang-member", parents=[common], help="bounded language membership of a pattern")
    p.add_argument("p")
    p.add_argument("--pattern", required=True)
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--max-period", type=int, default=decision.DEFAULT_MAX_PERIOD)
    p.set_defaults(func=cmd_lang_member)

    p = sub.add_parser("contains", parents=[common], help="bounded test that X lies inside the candidate SFT")
    p.add_argument("candidate")
    p.add_argument("x")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--max-period", type=int, default=decision.DEFAULT_MAX_PERIOD)
    p.set_defaults(func=cmd_contains)

    for name, func, helptext in (
        ("count", cmd_count, "count admissible patterns on a box"),
        ("entropy-bound", cmd_entropy_bound, "entropy upper bound from a box count"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("p")
        p.add_argument("--box", type=int, required=True)
        p.set_defaults(func=func)

    red = sub.add_parser("reduce", help="many-one reductions from emptiness")
    rsub = red.add_subparsers(dest="reduce_command", required=True, parser_class=_Parser)
    p = rsub.add_parser("berger", parents=[common])
    p.add_argument("input")
    p.add_argument("--witness")
    p.add_argument("--param-x")
    p.add_argument("--plus")
    p.add_argument("--minus")
    p.set_defaults(func=cmd_reduce_berger)
    p = rsub.add_parser("invariant", parents=[common])
    p.add_argument("input")
    p.add_argument("--x0", required=True)
    p.add_argument("--y0", required=True)
    p.set_defaults(func=cmd_reduce_invariant)
    p = rsub.add_parser("sofic", parents=[common])
    p.add_argument("input")
    p.add_argument("--plus", required=True)
    p.set_defaults(func=cmd_reduce_sofic)

    wit = sub.add_parser("witness", help="built-in witness catalog")
    wsub = wit.add_subparsers(dest="witness_command", required=True, parser_class=_Parser)
    p = wsub.add_parser("list", parents=[common])
    p.set_defaults(func=cmd_witness_list)

    p = sub.add_parser("lint", parents=[common], help="flag inconsistent or duplicate forbidden patterns")
    p.add_argument("p")
    p.set_defaults(func=cmd_lint)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.out = out
        args.limits = Limits.from_env()
        return args.func(args)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except SftError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - last resort
        err.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
