"""Command-line front end.

Every subcommand maps to one library call.  Exit status 0 means the command
ran (the verdict is in the output), 2 means bad input or usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import automata, contextual, decide, factors, sequences
from .automata import Automaton
from .errors import ApwordsError
from .regex import compile_regex


class InputError(Exception):
    pass


def _digest(obj) -> str:
    text = json.dumps(obj, sort_keys=True, ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _load_language(args):
    if args.automaton:
        a = Automaton.from_dict(_read_json(args.automaton))
        return a, {"automaton": a.to_dict()}
    if args.regex is None:
        raise InputError("give --regex with --alphabet, or --automaton FILE")
    if args.alphabet is None:
        raise InputError("--regex needs an explicit --alphabet")
    return compile_regex(args.regex, args.alphabet), {
        "regex": args.regex, "alphabet": "".join(automata.make_alphabet(args.alphabet))}


def _load_sequence(args):
    if args.thue_morse:
        return sequences.thue_morse(), {"sequence": "thue-morse"}
    if args.periodic:
        return sequences.Periodic(args.periodic), {"periodic": args.periodic}
    if args.morphism:
        if args.seed is None:
            raise InputError("--morphism needs --seed")
        m = sequences.Morphism.parse(args.morphism)
        return (sequences.MorphicFixedPoint(m, args.seed),
                {"morphism": m.images, "seed": args.seed})
    raise InputError("give --periodic W, --morphism RULES --seed S, or --thue-morse")


def _decision_text(d) -> list[str]:
    status = d.status.value + (f"({d.bound})" if d.bound is not None else "")
    lines = [f"{d.verdict.value} [{status}]"]
    if d.witness is not None:
        lines.append(f"witness: {_show(d.witness)}")
    if d.counterexample is not None:
        lines.append(f"counterexample: {_show(d.counterexample)}")
    lines += [f"note: {n}" for n in d.notes]
    lines += [f"  {k}\t{v}" for k, v in d.details.items()]
    return lines


def _show(value):
    if isinstance(value, tuple):
        return " ".join(_show(v) for v in value)
    return value if value else "λ"


def _tsv(header, rows) -> list[str]:
    return ["\t".join(header)] + ["\t".join(str(r[h]) for h in header) for r in rows]


# Each handler returns (payload for --json, lines for text mode).

def cmd_is_closed(args, a):
    d = factors.is_closed(a)
    return d.to_dict(), _decision_text(d)


def cmd_is_finite(args, a):
    finite = automata.is_finite(a)
    return {"finite": finite}, ["finite" if finite else "infinite"]


def cmd_factors(args, a):
    sub = factors.build_factor_automaton(a)
    return sub.to_dict(), [sub.to_json()]


def cmd_pump_word(args, a):
    w = decide.extract_pumping_word(a)
    payload = {"word": w.word, "cycle_states": list(w.cycle_states),
               "entry_path_len": w.entry_path_len}
    return payload, [f"pumping word: {w.word}",
                     f"cycle states: {' '.join(map(str, w.cycle_states))}",
                     f"entry path length: {w.entry_path_len}"]


def cmd_is_almost_periodic(args, a):
    d = decide.is_almost_periodic(a)
    return d.to_dict(), _decision_text(d)


def cmd_is_ap_sequence_factors(args, a):
    d = decide.is_factor_language_of_almost_periodic_word(a)
    return d.to_dict(), _decision_text(d)


def cmd_confluence(args, a):
    if args.pair:
        d = decide.pair_has_common_superword(a, *args.pair)
    else:
        d = decide.bounded_confluence(a, args.max_len)
    return d.to_dict(), _decision_text(d)


def cmd_is_biinfinite_factors(args, a):
    d = decide.is_biinfinite_factor_language(a, args.max_len)
    return d.to_dict(), _decision_text(d)


def cmd_seq(args, s):
    if args.action == "prefix":
        p = sequences.prefix(s, args.n)
        return {"n": args.n, "prefix": p}, [p]
    if args.action == "factors":
        rows = []
        for n in range(args.min_n, args.n + 1):
            fs = sequences.factors_of_length(s, n, args.prefix_len)
            rows.append({"n": n, "count": len(fs), "prefix_len": args.prefix_len,
                         "factors": ",".join(fs)})
        return {"rows": rows}, _tsv(["n", "count", "prefix_len", "factors"], rows)
    if args.action == "recurrence":
        if args.factor is not None:
            reports = [sequences.recurrence_for_factor(s, args.factor, args.prefix_len)]
        else:
            reports = sequences.recurrence_table(s, range(args.min_n, args.n + 1),
                                                 args.prefix_len)
        rows = [r.to_dict() for r in reports]
        if args.factor is not None:
            rows[0]["factor"] = args.factor
        return {"rows": rows}, _tsv(["n", "value", "prefix_len", "exactness"], rows)
    d = sequences.eventual_periodicity_probe(s, args.max_period, args.n, args.prefix_len)
    return d.to_dict(), _decision_text(d)


def cmd_ctx(args, g):
    if args.action == "generate":
        r = contextual.generate(g, args.max_len, args.max_words)
        payload = {"family": g.family, "max_len": r.max_len, "truncated": r.truncated,
                   "count": len(r.words), "words": r.words}
        lines = [f"family {g.family}: {len(r.words)} words up to length {r.max_len}"
                 + (" (truncated)" if r.truncated else "")]
        return payload, lines + [w if w else "λ" for w in r.words]
    r = contextual.letter_star_probe(g, args.max_len, args.k, args.max_words)
    payload = dict(r.to_dict(), family=g.family)
    lines = [f"{key}: {value}" for key, value in payload.items()]
    return payload, lines


def _language_options(p):
    src = p.add_argument_group("language input")
    src.add_argument("--regex", help="regular expression, e.g. '(ab)*'")
    src.add_argument("--alphabet", help="alphabet letters, e.g. ab (required with --regex)")
    src.add_argument("--automaton", metavar="FILE", help="automaton JSON file")


def _sequence_options(p):
    p.add_argument("--periodic", metavar="WORD")
    p.add_argument("--morphism", metavar="RULES", help="e.g. 0:01,1:10")
    p.add_argument("--seed")
    p.add_argument("--thue-morse", action="store_true")
    p.add_argument("--prefix-len", type=int, default=sequences.DEFAULT_PREFIX_LEN)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a JSON report")
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include elapsed milliseconds in the JSON report")

    parser = argparse.ArgumentParser(prog="apwords", parents=[common],
                                     description="Almost periodic regular languages.")
    sub = parser.add_subparsers(dest="command", required=True)

    simple = {
        "is-closed": (cmd_is_closed, "is L closed under factors?"),
        "is-finite": (cmd_is_finite, "is L finite?"),
        "factors": (cmd_factors, "emit the automaton of Sub(L)"),
        "pump-word": (cmd_pump_word, "nonempty w with every power a factor of L"),
        "is-almost-periodic": (cmd_is_almost_periodic, "is L closed and redundant?"),
        "is-ap-sequence-factors": (cmd_is_ap_sequence_factors,
                                   "is L the factor set of an almost periodic word?"),
    }
    for name, (handler, help_text) in simple.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        _language_options(p)
        p.set_defaults(handler=handler, kind="language")

    p = sub.add_parser("confluence", parents=[common], help="pair or bounded confluence")
    _language_options(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--pair", nargs=2, metavar=("X", "Y"),
                       help="decide one pair; use '' for the empty word")
    group.add_argument("--max-len", type=int, default=decide.DEFAULT_CONFLUENCE_BOUND)
    p.set_defaults(handler=cmd_confluence, kind="language")

    p = sub.add_parser("is-biinfinite-factors", parents=[common],
                       help="is L the factor set of a two-sided infinite word?")
    _language_options(p)
    p.add_argument("--max-len", type=int, default=decide.DEFAULT_CONFLUENCE_BOUND)
    p.set_defaults(handler=cmd_is_biinfinite_factors, kind="language")

    p = sub.add_parser("seq", parents=[common], help="infinite-word lab")
    p.add_argument("action", choices=["prefix", "factors", "recurrence", "probe"])
    _sequence_options(p)
    p.add_argument("--n", type=int, default=8, help="length (largest length for tables)")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--factor", help="recurrence of a single factor")
    p.add_argument("--max-period", type=int, default=8)
    p.set_defaults(handler=cmd_seq, kind="sequence")

    p = sub.add_parser("ctx", parents=[common], help="contextual grammars")
    p.add_argument("action", choices=["generate", "probe"])
    p.add_argument("--grammar", metavar="FILE", required=True)
    p.add_argument("--max-len", type=int, default=12)
    p.add_argument("--max-words", type=int)
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(handler=cmd_ctx, kind="grammar")
    return parser


def _load(args):
    if args.kind == "language":
        return _load_language(args)
    if args.kind == "sequence":
        return _load_sequence(args)
    data = _read_json(args.grammar)
    g = contextual.ContextualGrammar.from_dict(data)
    return g, {"grammar": g.to_dict()}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    started = time.perf_counter()
    try:
        subject, described = _load(args)
        payload, lines = args.handler(args, subject)
    except (InputError, ApwordsError, ValueError, KeyError, TypeError) as exc:
        print(f"apwords {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "json", False):
        command = " ".join(filter(None, [args.command, getattr(args, "action", None)]))
        report = {"command": command, "input_digest": _digest(described),
                  "result": payload}
        if getattr(args, "timing", False):
            report["elapsed_ms"] = round((time.perf_counter() - started) * 1000, 3)
        print(json.dumps(report, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
