"""Command line front end.

Exit status: 0 success, 1 a checked property failed (law violation,
non-equivalence, failed proof step), 2 usage or input error.
"""

import argparse
import json
import os
import sys

from .algebra import STRUCTURES, get_structure
from .axioms import check_axioms, check_derived_properties
from .builder import from_table, minimize
from .errors import InvalidInputError, LemmaViolation, NormalizationFailure, SeqFSTError, SizeError
from .fst import equivalent_bounded, output
from .literals import format_element, parse_input_word
from .replica import compute_classes, replicate
from .textio import dumps_transducer, load_table, load_transducer

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_seed():
    value = os.environ.get("SEQFST_SEED")
    if value is None:
        return 0
    try:
        return int(value)
    except ValueError:
        raise UsageError("SEQFST_SEED must be an integer, got %r" % value) from None


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _emit_json(payload, out):
    out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _write(path, text, out):
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load_table(args):
    alphabet = list(args.alphabet) if args.alphabet else None
    return load_table(args.table, get_structure(args.structure), alphabet)


def cmd_check_axioms(args, out):
    S = get_structure(args.structure)
    seed = args.seed if args.seed is not None else _default_seed()
    axioms = check_axioms(S, seed=seed, trials=args.trials)
    derived = check_derived_properties(S, seed=seed, trials=args.trials)
    ok = axioms.ok and derived.ok
    if args.format == "json":
        _emit_json({"schema_version": 1, "command": "check-axioms", "ok": ok,
                    "axioms": axioms.to_dict(S), "derived": derived.to_dict(S)}, out)
    else:
        out.write("structure laws\n" + axioms.format_text(S) + "\n")
        out.write("derived properties\n" + derived.format_text(S) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def _machine_summary(command, T, path, args, out):
    if args.format == "json":
        _emit_json({"schema_version": 1, "command": command, "structure": T.structure.kind,
                    "states": T.n_states, "finals": len(T.finals), "transitions": len(T.delta),
                    "iota": format_element(T.structure, T.iota), "output": path}, out)


def cmd_build(args, out):
    tab = _load_table(args)
    T = from_table(tab)
    if args.minimize:
        T = minimize(T)
    if args.output is None and args.format == "json":
        raise UsageError("--format json needs -o/--output for the machine file")
    _write(args.output, dumps_transducer(T), out)
    _machine_summary("build", T, args.output, args, out)
    return EXIT_OK


def cmd_minimize(args, out):
    T = minimize(load_transducer(args.machine))
    if args.output is None and args.format == "json":
        raise UsageError("--format json needs -o/--output for the machine file")
    _write(args.output, dumps_transducer(T), out)
    _machine_summary("minimize", T, args.output, args, out)
    return EXIT_OK


def cmd_apply(args, out):
    T = load_transducer(args.machine)
    word = parse_input_word(args.word)
    value = output(T, word)
    if args.format == "json":
        _emit_json({"schema_version": 1, "command": "apply", "word": word, "defined": value is not None,
                    "output": None if value is None else format_element(T.structure, value)}, out)
    else:
        out.write(("UNDEFINED" if value is None else format_element(T.structure, value)) + "\n")
    return EXIT_OK


def cmd_equiv(args, out):
    T1 = load_transducer(args.left)
    T2 = load_transducer(args.right)
    verdict = equivalent_bounded(T1, T2, args.max_len)
    S = T1.structure
    fmt = lambda x: None if x is None else format_element(S, x)
    if args.format == "json":
        _emit_json({"schema_version": 1, "command": "equiv", "max_len": args.max_len,
                    "equivalent": verdict.equivalent, "counterexample": verdict.counterexample,
                    "left": fmt(verdict.left), "right": fmt(verdict.right), "compared": verdict.compared}, out)
    elif verdict.equivalent:
        out.write("EQUIVALENT (all words up to length %d)\n" % args.max_len)
    else:
        out.write('NOT EQUIVALENT: counterexample "%s": %s vs %s\n' % (
            verdict.counterexample, fmt(verdict.left) or "UNDEFINED", fmt(verdict.right) or "UNDEFINED"))
    return EXIT_OK if verdict.equivalent else EXIT_FAIL


def cmd_index(args, out):
    cs = compute_classes(_load_table(args))
    if args.format == "json":
        _emit_json({"schema_version": 1, "command": "index", "index": cs.n,
                    "essential_classes": len(cs.essential), "error_class": cs.error is not None,
                    "representatives": [c.representative for c in cs.classes]}, out)
    else:
        out.write(cs.summary() + "\n")
    return EXIT_OK


def cmd_replicate(args, out):
    r = replicate(_load_table(args))
    text = r.to_json() if args.format == "json" else r.to_text()
    _write(args.output, text, out)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(r.graph.to_dot())
    return EXIT_OK if r.ok else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="seqfst", description="Subsequential transducers over sequentiable structures.")
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = sorted(STRUCTURES)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    def add_table(p):
        p.add_argument("table", help="sample table file (word TAB element per line)")
        p.add_argument("--structure", choices=kinds, default="words")
        p.add_argument("--alphabet", help="input symbols, e.g. abc (default: symbols used in the table)")

    p = sub.add_parser("check-axioms", help="check the structure laws by sweep and sampling")
    p.add_argument("--structure", choices=kinds, required=True)
    p.add_argument("--trials", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=None, help="random seed (default: $SEQFST_SEED or 0)")
    add_format(p)
    p.set_defaults(func=cmd_check_axioms)

    p = sub.add_parser("build", help="prefix-tree transducer of a sample table")
    add_table(p)
    p.add_argument("-o", "--output")
    p.add_argument("--minimize", action="store_true", help="minimise before writing")
    add_format(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("minimize", help="trim, push outputs, merge equivalent states")
    p.add_argument("machine")
    p.add_argument("-o", "--output")
    add_format(p)
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("apply", help="evaluate a transducer on one word")
    p.add_argument("machine")
    p.add_argument("word", help='input word; use "" (quoted) for the empty word')
    add_format(p)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("equiv", help="compare two transducers on all words up to a length")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--max-len", type=_non_negative, default=8)
    add_format(p)
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("index", help="number of Myhill-Nerode classes of a sample table")
    add_table(p)
    add_format(p)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("replicate", help="run the class-based construction with all its checks")
    add_table(p)
    p.add_argument("-o", "--output", help="report path (default: stdout)")
    p.add_argument("--dot", help="also write the norm graph in DOT format")
    add_format(p)
    p.set_defaults(func=cmd_replicate)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (LemmaViolation, NormalizationFailure) as exc:
        lemma = getattr(exc, "lemma", None)
        if getattr(args, "format", "text") == "json":
            _emit_json({"schema_version": 1, "command": args.command, "error": str(exc), "lemma": lemma}, out)
        err.write("seqfst: failed: %s\n" % exc)
        return EXIT_FAIL
    except (UsageError, InvalidInputError, SizeError, OSError) as exc:
        err.write("seqfst: error: %s\n" % exc)
        return EXIT_USAGE
    except SeqFSTError as exc:
        err.write("seqfst: error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
