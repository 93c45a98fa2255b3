"""Command-line front end.

Exit codes: 0 provable / valid / agreement, 1 refuted / disagreement,
2 usage or parse error, 3 depth bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import kripke
from .corpus import read_corpus
from .derivation import render_latex, render_text
from .oracle import artifacts, compare_one
from .prop import ParseError, PropSequent, parse_sequent
from .prover import DepthExceeded, Proof, Refuted, SearchConfig, prove
from .psf import translate_sequent

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_DEPTH = 0, 1, 2, 3


def _read_input(arg: str) -> str:
    path = Path(arg)
    if "=>" not in arg and "⇒" not in arg and path.is_file():
        return path.read_text(encoding="utf-8").strip()
    return arg


def _config(args) -> SearchConfig:
    return SearchConfig(enable_refl=not args.no_refl, enable_tran=not args.no_tran,
                        enable_mono=not args.no_mono, depth_bound=args.depth,
                        trace=args.trace)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _model_text(r: Refuted, falsified: str) -> str:
    m = r.model
    lines = [f"countermodel for {falsified}",
             f"  worlds: {', '.join(m.worlds)}",
             "  rel: " + ", ".join(f"{u}<={v}" for u, v in sorted(m.rel) if u != v),
             "  val: " + "; ".join(f"{k}: {{{', '.join(sorted(v))}}}" for k, v in m.val.items()),
             "  assignment: " + ", ".join(f"{k} -> {v}" for k, v in r.assignment.items())]
    return "\n".join(lines)


def cmd_prove(args) -> int:
    s = parse_sequent(_read_input(args.input))
    t = translate_sequent(s, args.var)
    result = prove(t, _config(args))
    if args.show_translation and args.format == "text":
        print(f"translation: {t}")
    if isinstance(result, Proof):
        d = result.derivation
        if args.format == "json":
            print(_dump(d.to_dict()))
        elif args.format == "latex":
            print(render_latex(d))
        else:
            print("provable")
            print(render_text(d))
        return EXIT_OK
    if isinstance(result, DepthExceeded):
        print(_dump({"result": "depth-exceeded", "depth_bound": result.depth_bound})
              if args.format == "json" else f"depth bound {result.depth_bound} exceeded")
        return EXIT_DEPTH
    if args.format == "json":
        print(_dump(result.model.to_json(falsified=str(t), assignment=result.assignment)))
    else:
        print("refuted" if result.verified else "refuted (unverified: geometric rules disabled)")
        print(_model_text(result, str(t)))
    return EXIT_REFUTED


def cmd_translate(args) -> int:
    t = translate_sequent(parse_sequent(_read_input(args.input)), args.var)
    print(_dump({"sequent": str(t)}) if args.format == "json" else str(t))
    return EXIT_OK


def cmd_model_check(args) -> int:
    model = kripke.KripkeModel.from_json(Path(args.model).read_text(encoding="utf-8"))
    if not kripke.check_int_model(model):
        print("error: not an intuitionistic Kripke model (reflexive, transitive, monotone)",
              file=sys.stderr)
        return EXIT_USAGE
    t = translate_sequent(parse_sequent(_read_input(args.input)), args.var)
    worlds = [args.world] if args.world else list(model.worlds)
    if args.world and args.world not in model.worlds:
        print(f"error: unknown world {args.world!r}", file=sys.stderr)
        return EXIT_USAGE
    verdicts = {w: kripke.validates(model, t, {args.var: w}) for w in worlds}
    if args.format == "json":
        print(_dump({"sequent": str(t), "validates": verdicts}))
    else:
        for w, ok in verdicts.items():
            print(f"{args.var} -> {w}: {'validates' if ok else 'falsified'}")
    return EXIT_OK if all(verdicts.values()) else EXIT_REFUTED


def _semantic_verdict(s: PropSequent, bound: Optional[int]) -> Optional[str]:
    if bound is None:
        return None
    res = kripke.semantic_decide(s, bound)
    if isinstance(res, kripke.Counterexample):
        return f"counterexample at {res.world} ({len(res.model.worlds)} worlds)"
    return f"no counterexample up to {bound} worlds"


def cmd_compare(args) -> int:
    s = parse_sequent(_read_input(args.input))
    row = compare_one(s, _config(args), args.var)
    semantic = _semantic_verdict(s, args.model_bound)
    if args.format == "json":
        out = artifacts(row)
        if semantic is not None:
            out["semantic"] = semantic
        print(_dump(out))
    else:
        print(f"m-G3ip: {row['mg3ip']}")
        print(f"G3c/PSF*: {row['psf']}")
        if semantic is not None:
            print(f"semantics: {semantic}")
        print("agree" if row["agree"] else "DISAGREE")
    return EXIT_OK if row["agree"] else EXIT_REFUTED


def cmd_corpus(args) -> int:
    entries = read_corpus(args.input)
    cfg = _config(args)
    rows = []
    for lineno, s in entries:
        row = compare_one(s, cfg, args.var)
        out = {"line": lineno, "sequent": row["sequent"], "mg3ip": row["mg3ip"],
               "psf": row["psf"], "agree": row["agree"]}
        semantic = _semantic_verdict(s, args.model_bound)
        if semantic is not None:
            out["semantic"] = semantic
        if not row["agree"]:
            out["artifacts"] = artifacts(row)
        rows.append(out)
    agree = sum(r["agree"] for r in rows)
    if args.format == "json":
        print(_dump({"total": len(rows), "agreements": agree,
                     "disagreements": len(rows) - agree, "results": rows}))
    else:
        for r in rows:
            extra = f"  [{r['semantic']}]" if "semantic" in r else ""
            flag = "ok " if r["agree"] else "BAD"
            print(f"{flag} line {r['line']}: {r['sequent']}  mg3ip={r['mg3ip']} psf={r['psf']}{extra}")
        print(f"{agree}/{len(rows)} agree")
    return EXIT_OK if agree == len(rows) else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--no-refl", action="store_true", help="disable the refl rule")
    common.add_argument("--no-tran", action="store_true", help="disable the tran rule")
    common.add_argument("--no-mono", action="store_true", help="disable the mono rule")
    common.add_argument("--depth", type=_positive, default=None, metavar="N",
                        help="bound on logical rule applications per branch")
    common.add_argument("--model-bound", type=_positive, default=None, metavar="N",
                        help="also search Kripke models with up to N worlds")
    common.add_argument("--var", default="x", help="world variable for the translation")
    common.add_argument("--trace", action="store_true", help="log search steps to stderr")

    parser = argparse.ArgumentParser(
        prog="psfprover",
        description="Decide propositional intuitionistic sequents via G3c/PSF* proof search.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("prove", parents=[common], help="prove or refute a sequent")
    p.add_argument("input", help='sequent such as "p, q => p & q", or a file holding one')
    p.add_argument("--show-translation", action="store_true")
    p.set_defaults(func=cmd_prove)
    p = sub.add_parser("translate", parents=[common], help="print the PSF translation")
    p.add_argument("input")
    p.set_defaults(func=cmd_translate)
    p = sub.add_parser("model-check", parents=[common], help="check a sequent in a model")
    p.add_argument("model", help="model JSON file")
    p.add_argument("input")
    p.add_argument("--world", default=None, help="only check with the variable at this world")
    p.set_defaults(func=cmd_model_check)
    p = sub.add_parser("compare", parents=[common], help="run both provers on one sequent")
    p.add_argument("input")
    p.set_defaults(func=cmd_compare)
    p = sub.add_parser("corpus", parents=[common], help="compare provers on a corpus file")
    p.add_argument("input", help="UTF-8 file, one sequent per line, '#' comments")
    p.set_defaults(func=cmd_corpus)
    return parser


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.trace:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(message)s")
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
