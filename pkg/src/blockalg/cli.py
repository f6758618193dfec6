"""Command-line interface.

Subcommands: analyze, act, series, order, selftest.  All numeric output is
exact rational text, never floats; --format json emits the same values as
strings inside a stable JSON shape.  Exit codes: 0 completed analysis
(regardless of verdict), 1 selftest failure, 2 malformed input, 3 a
requested cap or window is too small for a certified answer.
"""

from __future__ import annotations

import argparse
import json
import sys

from .criterion import quasifinite_verdict, sigma_series
from .errors import WindowInsufficientError, WindowTooShortError
from .gamma_order import order_from_json_dict, order_verdict
from .laurent import rational_str
from .oracle import SampleConfig, run_all_scans
from .parser import ParseError, parse_action
from .verma import act_word
from .weights import Weight


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_weight(path: str) -> Weight:
    return Weight.from_json_dict(_load_json(path))


def _element_json(element) -> dict:
    terms = []
    for sym in sorted(element.terms, key=lambda s: (1,) if s == ("C",) else (0, s[1], s[2])):
        coeff = element.terms[sym]
        generator = "C" if sym == ("C",) else [sym[1], sym[2]]
        terms.append({"generator": generator, "coefficient": rational_str(coeff)})
    return {"terms": terms, "text": element.render()}


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _parse_j_set(text: str) -> list[int]:
    try:
        return [int(piece) for piece in text.split(",") if piece.strip() != ""]
    except ValueError as exc:
        raise ValueError(f"bad --j-set {text!r}: comma-separated integers") from exc


def cmd_analyze(args) -> int:
    weight = _load_weight(args.weight_file)
    report = quasifinite_verdict(
        weight,
        m_max=args.max_deg,
        j_set=_parse_j_set(args.j_set),
        n_terms=args.terms,
        max_rows=args.window,
    )
    _emit(args, report.render_text(), report.to_json_dict())
    return 0


def cmd_act(args) -> int:
    weight = _load_weight(args.weight_file)
    kind, value = parse_action(args.expr)
    if kind == "word":
        result = act_word(value, weight)
        _emit(
            args,
            result.render(),
            {"kind": "module-vector", "result": result.to_json_dict(), "text": result.render()},
        )
    else:
        _emit(
            args,
            value.render(),
            {"kind": "element", "result": _element_json(value), "text": value.render()},
        )
    return 0


def cmd_series(args) -> int:
    weight = _load_weight(args.weight_file)
    window = sigma_series(weight, args.j, args.terms)
    _emit(
        args,
        window.render(),
        {
            "j": window.j,
            "coefficients": [rational_str(c) for c in window.coefficients],
            "text": window.render(),
        },
    )
    return 0


def cmd_order(args) -> int:
    spec = order_from_json_dict(_load_json(args.order_file))
    if args.weight_zero and args.weight_nonzero:
        raise ValueError("--weight-zero and --weight-nonzero are mutually exclusive")
    weight_is_zero = True if args.weight_zero else (False if args.weight_nonzero else None)
    verdict = order_verdict(spec, weight_is_zero=weight_is_zero)
    cls_ = verdict.classification
    lines = [
        "{}, {}".format(cls_.kind, "archimedean" if cls_.archimedean else "non-archimedean"),
    ]
    if cls_.minimal_positive is not None:
        lines.append(f"minimal positive element: {list(cls_.minimal_positive)}")
    lines.append(f"verdict: {verdict.verdict}")
    lines.append(verdict.detail)
    _emit(args, "\n".join(lines), verdict.to_json_dict())
    return 0


def cmd_selftest(args) -> int:
    cfg = SampleConfig(seed=args.seed, trials=args.trials)
    reports = run_all_scans(cfg)
    all_passed = all(r.passed for r in reports)
    if getattr(args, "format", "text") == "json":
        print(
            json.dumps(
                {"passed": all_passed, "scans": [r.to_json_dict() for r in reports]},
                indent=2,
            )
        )
    else:
        for report in reports:
            print(report.render())
        print("selftest: " + ("PASS" if all_passed else "FAIL"))
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockalg",
        description=(
            "Exact engine for the graded Lie algebra with basis L[a,i], C: "
            "bracket arithmetic, highest-weight module action, reducibility "
            "criterion, and total-order classification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full reducibility/quasifiniteness report")
    p.add_argument("weight_file", help="weight spec (JSON)")
    p.add_argument("--max-deg", type=int, default=8, help="witness degree bound")
    p.add_argument("--j-set", default="-2,-1,0,1,2", help="series indices, comma-separated")
    p.add_argument("--terms", type=int, default=24, help="series window length")
    p.add_argument(
        "--window",
        type=int,
        default=None,
        help="cap on certified condition rows; exit 3 if the certificate needs more",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("act", help="evaluate an expression or apply a word to v")
    p.add_argument("weight_file", help="weight spec (JSON)")
    p.add_argument("expr", help="expression, e.g. '[L[1,0], L[-1,0]]' or 'L[1,0].L[-1,0].v'")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("series", help="window of a generating series")
    p.add_argument("weight_file", help="weight spec (JSON)")
    p.add_argument("--j", type=int, required=True, help="series index")
    p.add_argument("--terms", type=int, default=12, help="last coefficient index")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("order", help="classify a total order and derive the verdict")
    p.add_argument("order_file", help="order spec (JSON)")
    p.add_argument("--weight-zero", action="store_true", help="assert the weight is zero")
    p.add_argument(
        "--weight-nonzero", action="store_true", help="assert the weight is nonzero"
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("selftest", help="run the randomized cross-check scans")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WindowInsufficientError, WindowTooShortError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ParseError as exc:
        print(f"error: syntax error at {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
