"""Command-line frontend for the library.

Each subcommand wraps one library operation, reads partitions, words and
block sizes in the same comma syntax the parsers use, and writes either
plain text or line-delimited JSON records.  Every JSON line carries the
subcommand name, the library version and an echo of the parsed inputs, so
a single line is self-describing; identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .classify import (
    ClassificationResult,
    classify,
    decompose_degree,
    is_toric,
    verify_sweep,
)
from .grassmann import Quadruple, _check_word, maximal_levi, reduce
from .heads import enumerate_heads, enumerate_standard_heads, theta_word
from .lr import (
    expand_skew_schur,
    expand_skew_schur_poly,
    format_expansion,
    is_multfree_function,
    is_multfree_poly,
    lr_coefficient,
)
from .shapes import SkewShape, format_partition, parse_partition

__all__ = ["Command", "UsageError", "format_command", "main", "parse_args", "run"]

# Payload keys each subcommand may emit, beyond the shared
# command/version/input envelope.  Structured output is validated against
# this table by the test suite; extending a subcommand means widening its
# row here first.
PAYLOAD_KEYS = {
    "lr": {"coefficient"},
    "expand": {"nu", "multiplicity"},
    "multfree": {"multiplicity_free"},
    "heads": {"m", "word", "chain", "words"},
    "decompose": {"label", "multiplicity"},
    "reduce": {"word", "n", "blocks"},
    "classify": {"verdict", "route", "condition", "p_w", "reduced"},
    "toric": {"toric"},
    "verify": {"cases", "reduced_classes", "counterexample"},
}


class UsageError(Exception):
    """Bad command line: unknown subcommand, malformed or inconsistent flags."""


@dataclass(frozen=True)
class Command:
    name: str
    options: dict[str, object]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition_flag(text: str):
    try:
        return parse_partition(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _ints_flag(text: str):
    tokens = [tok.strip() for tok in text.split(",")]
    if not all(tok.isdigit() for tok in tokens):
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return tuple(int(tok) for tok in tokens)


def _add_format(sub) -> None:
    sub.add_argument("--format", choices=("text", "json"), default="text")


def _add_quadruple_flags(sub) -> None:
    sub.add_argument("--w", type=_ints_flag, required=True)
    sub.add_argument("--d", type=int)
    sub.add_argument("--n", type=int, required=True)
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--blocks", type=_ints_flag)
    group.add_argument("--max-levi", action="store_true")


def _build_parser() -> _Parser:
    parser = _Parser(prog="spherical-schubert")
    subs = parser.add_subparsers(dest="name", required=True, parser_class=_Parser)

    sub = subs.add_parser("lr")
    sub.add_argument("--lam", type=_partition_flag, required=True)
    sub.add_argument("--mu", type=_partition_flag, default=())
    sub.add_argument("--nu", type=_partition_flag, required=True)
    _add_format(sub)

    for name in ("expand", "multfree"):
        sub = subs.add_parser(name)
        sub.add_argument("--lam", type=_partition_flag, required=True)
        sub.add_argument("--mu", type=_partition_flag, default=())
        sub.add_argument("--n-vars", type=int)
        _add_format(sub)

    sub = subs.add_parser("heads")
    _add_quadruple_flags(sub)
    sub.add_argument("--r", type=int)
    _add_format(sub)

    sub = subs.add_parser("decompose")
    _add_quadruple_flags(sub)
    sub.add_argument("--r", type=int, required=True)
    _add_format(sub)

    for name in ("reduce", "classify"):
        sub = subs.add_parser(name)
        _add_quadruple_flags(sub)
        _add_format(sub)

    sub = subs.add_parser("toric")
    sub.add_argument("--w", type=_ints_flag, required=True)
    sub.add_argument("--n", type=int, required=True)
    _add_format(sub)

    sub = subs.add_parser("verify")
    sub.add_argument("--n-max", type=int, required=True)
    sub.add_argument("--r-max", type=int, default=3)
    _add_format(sub)

    return parser


def parse_args(argv) -> Command:
    """Parse argv into a validated Command.

    Raises UsageError on anything malformed; checks the cheap structural
    constraints here (word strictly increasing, blocks summing to n, d
    matching the word length) and leaves domain checks to the library.
    """
    namespace = _build_parser().parse_args(list(argv))
    options = {
        key: value
        for key, value in vars(namespace).items()
        if key != "name" and value is not None and value is not False
    }
    word = options.get("w")
    if word is not None:
        if not all(a < b for a, b in zip(word, word[1:])) or 0 in word:
            raise UsageError("--w must be strictly increasing and positive")
        if options.pop("d", len(word)) != len(word):
            raise UsageError("--d does not match the length of --w")
    blocks = options.get("blocks")
    if blocks is not None:
        if 0 in blocks:
            raise UsageError("--blocks entries must be positive")
        if "n" in options and sum(blocks) != options["n"]:
            raise UsageError("--blocks must sum to --n")
    return Command(namespace.name, options)


def format_command(c: Command) -> list[str]:
    """Canonical argv for a Command; parse_args inverts it."""
    argv = [c.name]
    for key in sorted(c.options):
        value = c.options[key]
        flag = "--" + key.replace("_", "-")
        if value is True:
            argv.append(flag)
        elif isinstance(value, tuple):
            argv.extend([flag, ",".join(str(x) for x in value) if value else "-"])
        else:
            argv.extend([flag, str(value)])
    return argv


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(x) for x in value]
    if isinstance(value, dict):
        return {key: _jsonable(val) for key, val in value.items()}
    return value


def _tuple_text(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def _label_text(label) -> str:
    return "".join(f"[{format_partition(nu)}]" for nu in label)


def _classify_text(res: ClassificationResult) -> str:
    parts = [res.route]
    if res.condition is not None:
        parts.append(f"condition {res.condition}")
    if res.p_w is not None:
        parts.append(f"p_w={res.p_w}")
    if res.reduced:
        parts.append("reduced")
    return f"{res.verdict.replace('_', ' ')} ({', '.join(parts)})"


def _quadruple_from(options) -> Quadruple:
    w, n = options["w"], options["n"]
    _check_word(w, n)
    blocks = options.get("blocks") or maximal_levi(w, n)
    return Quadruple(w, n, blocks)


def run(c: Command) -> tuple[int, list[str]]:
    """Execute a parsed command, returning (exit code, output lines)."""
    opts = c.options
    code = 0
    if c.name == "lr":
        value = lr_coefficient(opts["lam"], opts["mu"], opts["nu"])
        payloads = [{"coefficient": value}]
        texts = [str(value)]
    elif c.name == "expand":
        shape = SkewShape(opts["lam"], opts["mu"])
        if "n_vars" in opts:
            expansion = expand_skew_schur_poly(shape, opts["n_vars"])
        else:
            expansion = expand_skew_schur(shape)
        payloads = [
            {"nu": list(nu), "multiplicity": expansion[nu]}
            for nu in sorted(expansion)
        ]
        texts = format_expansion(expansion)
    elif c.name == "multfree":
        shape = SkewShape(opts["lam"], opts["mu"])
        if "n_vars" in opts:
            verdict = is_multfree_poly(shape, opts["n_vars"])
        else:
            verdict = is_multfree_function(shape)
        payloads = [{"multiplicity_free": verdict}]
        texts = ["multiplicity free" if verdict else "not multiplicity free"]
    elif c.name == "heads":
        q = _quadruple_from(opts)
        if "r" in opts:
            chains = enumerate_standard_heads(q, opts["r"])
            payloads = [
                {
                    "chain": [list(m) for m in s],
                    "words": [list(theta_word(m, q.blocks)) for m in s],
                }
                for s in chains
            ]
            texts = [
                " ".join(_tuple_text(m) for m in s)
                + " -> "
                + " ".join(_tuple_text(theta_word(m, q.blocks)) for m in s)
                if s
                else "-"
                for s in chains
            ]
        else:
            heads = enumerate_heads(q)
            payloads = [
                {"m": list(m), "word": list(theta_word(m, q.blocks))}
                for m in heads
            ]
            texts = [
                f"{_tuple_text(m)} -> {_tuple_text(theta_word(m, q.blocks))}"
                for m in heads
            ]
    elif c.name == "decompose":
        q = _quadruple_from(opts)
        decomposition = decompose_degree(q, opts["r"])
        items = sorted(decomposition.terms.items())
        payloads = [
            {"label": [list(nu) for nu in label], "multiplicity": mult}
            for label, mult in items
        ]
        texts = [f"{_label_text(label)}: {mult}" for label, mult in items]
    elif c.name == "reduce":
        q = reduce(_quadruple_from(opts))
        payloads = [{"word": list(q.word), "n": q.n, "blocks": list(q.blocks)}]
        texts = [str(q)]
    elif c.name == "classify":
        res = classify(_quadruple_from(opts))
        payloads = [
            {
                "verdict": res.verdict,
                "route": res.route,
                "condition": res.condition,
                "p_w": res.p_w,
                "reduced": res.reduced,
            }
        ]
        texts = [_classify_text(res)]
    elif c.name == "toric":
        _check_word(opts["w"], opts["n"])
        verdict = is_toric(opts["w"], opts["n"])
        payloads = [{"toric": verdict}]
        texts = ["toric" if verdict else "not toric"]
    elif c.name == "verify":
        report = verify_sweep(opts["n_max"], opts.get("r_max", 3))
        payloads = [
            {
                "cases": report.cases,
                "reduced_classes": report.reduced_classes,
                "counterexample": _jsonable(report.counterexample),
            }
        ]
        bad = report.counterexample
        texts = [
            f"cases={report.cases} reduced_classes={report.reduced_classes} "
            f"counterexamples={0 if bad is None else 1}"
        ]
        if bad is not None:
            texts.append(
                "counterexample: "
                + " ".join(f"{key}={bad[key]}" for key in sorted(bad))
            )
            code = 3
    else:
        raise UsageError(f"unknown subcommand {c.name!r}")

    if opts.get("format") == "json":
        echo = {k: _jsonable(v) for k, v in opts.items() if k != "format"}
        lines = [
            json.dumps(
                {
                    "command": c.name,
                    "version": __version__,
                    "input": echo,
                    **payload,
                },
                sort_keys=True,
            )
            for payload in payloads
        ]
        return code, lines
    return code, texts


def main(argv=None) -> int:
    try:
        command = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    try:
        code, lines = run(command)
    except UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except Exception as err:
        print(f"internal error: {err}", file=sys.stderr)
        return 3
    for line in lines:
        print(line)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
