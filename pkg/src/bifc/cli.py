"""Command line surface: enumeration, conversion and verification.

Exit codes: 0 on success, 1 on a verification failure, 2 on usage, parse or
schema errors.  All commands are pure functions of their arguments and
input files; randomness only enters through an explicit seed.

Moment tables are JSON documents ``{"variables": {"a": "L", "b": "R"},
"moments": {"": "1", "a": "1/2", "a b": "3"}}`` with words as
space-separated variable names and values as exact rational literals.
Cumulant tables use the identical schema plus a ``"family"`` field.

In ``--word`` arguments the tokens ``L`` and ``R`` are placeholders and any
other token declares a variable whose trailing ``L`` or ``R`` names its
side, e.g. ``a1L L R a2R a3R``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .bipartition import (
    CLASSES,
    EnumerationLimitError,
    enumerate_bipartitions,
)
from .cumulants import (
    FAMILIES,
    CumulantData,
    MomentData,
    cumulants_to_moments,
    moments_to_cumulants,
)
from .diagrams import render_svg
from .translucent import TranslucentWord
from .verify import SUITES, run_suite
from .words import Alphabet, IncompleteWord, type_of

MAX_LEN_CAP = 14


class UsageError(Exception):
    pass


def _parse_word_tokens(text: str) -> tuple[Alphabet, IncompleteWord]:
    tokens = text.split()
    left, right = set(), set()
    for tok in tokens:
        if tok in ("L", "R"):
            continue
        if tok.endswith("L"):
            left.add(tok)
        elif tok.endswith("R"):
            right.add(tok)
        else:
            raise UsageError(
                f"cannot infer the side of {tok!r}: variable tokens must end in L or R"
            )
    alphabet = Alphabet.make(left, right)
    return alphabet, alphabet.word(tokens)


def _resolve_type(args) -> TranslucentWord:
    if args.type and args.word:
        raise UsageError("give either --type or --word, not both")
    if args.type:
        return TranslucentWord.parse(args.type)
    if args.word:
        _alphabet, w = _parse_word_tokens(args.word)
        return type_of(w)
    raise UsageError("one of --type or --word is required")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    t = _resolve_type(args)
    bps = enumerate_bipartitions(t, args.cls)
    if args.format == "count":
        _emit(f"{len(bps)}\n", args.output)
    elif args.format == "json":
        payload = [bp.to_json() for bp in bps]
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        _emit(render_svg(bps), args.output)
    return 0


_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?\Z")


def _load_rational(raw, where: str) -> Fraction:
    # accepted literals: optionally signed integers and p/q strings
    if isinstance(raw, int) and not isinstance(raw, bool):
        return Fraction(raw)
    if not isinstance(raw, str) or not _RATIONAL_RE.match(raw.strip()):
        raise UsageError(f"{where}: not a rational literal: {raw!r}")
    try:
        return Fraction(raw.strip())
    except ZeroDivisionError:
        raise UsageError(f"{where}: zero denominator: {raw!r}")


def _load_table(path: str, expect_family: bool):
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}")
    if not isinstance(data, dict) or "variables" not in data or "moments" not in data:
        raise UsageError(f"{path}: expected an object with 'variables' and 'moments'")
    sides = data["variables"]
    left = {name for name, side in sides.items() if side == "L"}
    right = {name for name, side in sides.items() if side == "R"}
    if left | right != set(sides):
        raise UsageError(f"{path}: variable sides must be 'L' or 'R'")
    try:
        alphabet = Alphabet.make(left, right)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")
    table = {}
    for key, raw in data["moments"].items():
        try:
            word = alphabet.word(key)
        except ValueError as exc:
            raise UsageError(f"{path}: bad word {key!r}: {exc}")
        table[word] = _load_rational(raw, f"{path}[{key!r}]")
    family = data.get("family")
    if expect_family and family not in FAMILIES:
        raise UsageError(f"{path}: 'family' must be one of {FAMILIES}")
    return alphabet, table, family


def _dump_table(alphabet: Alphabet, table, family: str | None) -> str:
    variables = {
        name: ("L" if name in alphabet.left else "R")
        for name in sorted(alphabet.left) + sorted(alphabet.right)
    }
    words = sorted(table, key=lambda w: (len(w), w.letters))
    doc: dict = {"variables": variables}
    if family:
        doc["family"] = family
    doc["moments"] = {w.text: str(table[w]) for w in words}
    return json.dumps(doc, indent=2) + "\n"


def cmd_convert(args) -> int:
    kinds = ("moments",) + FAMILIES
    if args.source not in kinds or args.target not in kinds:
        raise UsageError(f"--from/--to must be one of {kinds}")
    if args.source == args.target:
        raise UsageError("--from and --to coincide; nothing to convert")
    alphabet, table, family = _load_table(args.input, expect_family=args.source != "moments")
    try:
        if args.source == "moments":
            moments = MomentData(alphabet, table)
        else:
            if family != args.source:
                raise UsageError(
                    f"{args.input}: family {family!r} does not match --from {args.source!r}"
                )
            cums = CumulantData(args.source, alphabet,
                                {w: v for w, v in table.items() if len(w) > 0})
            moments = cumulants_to_moments(cums, args.max_len)
        if args.target == "moments":
            out_family = None
            out_table = dict(moments.values)
        else:
            cums = moments_to_cumulants(moments, args.target, args.max_len)
            out_family = args.target
            out_table = dict(cums.values)
    except KeyError as exc:
        raise UsageError(f"missing table entry: {exc.args[0]}")
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(_dump_table(alphabet, out_table, out_family), args.output)
    return 0


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite else sorted(SUITES)
    failed = False
    for name in names:
        result = run_suite(name, max_len=args.max_len, seed=args.seed)
        print(result)
        failed = failed or not result.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bifc",
        description="combinatorics of two-faced moment-cumulant relations",
    )
    parser.add_argument("--version", action="version", version=f"bifc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="enumerate bipartitions of a type")
    enum.add_argument("--type", help='translucent word, e.g. "LLRR,1011"')
    enum.add_argument("--word", help='incomplete word, e.g. "a1L L R a2R"')
    enum.add_argument("--class", dest="cls", default="all", choices=CLASSES)
    enum.add_argument("--format", default="count", choices=("count", "json", "svg"))
    enum.add_argument("--output")
    enum.set_defaults(func=cmd_enumerate)

    conv = sub.add_parser("convert", help="convert between moments and cumulants")
    conv.add_argument("--input", required=True)
    conv.add_argument("--from", dest="source", required=True)
    conv.add_argument("--to", dest="target", required=True)
    conv.add_argument("--max-len", type=int, default=6)
    conv.add_argument("--output")
    conv.set_defaults(func=cmd_convert)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", choices=sorted(SUITES))
    ver.add_argument("--max-len", type=int)
    ver.add_argument("--seed", type=int)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_len", None) is not None and args.max_len > MAX_LEN_CAP:
        print(f"error: --max-len is capped at {MAX_LEN_CAP}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, EnumerationLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
