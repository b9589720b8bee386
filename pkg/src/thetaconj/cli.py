"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (one line on stderr naming
the error class), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .conjugacy import (
    conjugates,
    deficiency_witness,
    power_growth,
    theta_conjugates,
)
from .errors import ThetaConjError
from .explorer import CHECK_IDS, SweepConfig, explore_constructions, run_checks
from .involution import Alphabet, enumerate_involutions, parse_involution
from .structure import (
    census,
    palindrome_in_theta_conjugates_witness,
    theta_palindrome_in_theta_conjugates_witness,
    two_theta_palindrome_conjugacy_witness,
)
from .words import is_palindrome, primitive_root

EMPTY = "λ"


class UsageError(Exception):
    pass


def show(w: str) -> str:
    return w if w else EMPTY


def dump_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _spec_letters(spec: Optional[str]) -> str:
    if not spec or spec.strip().upper() == "ALL":
        return ""
    return spec.replace(",", "").replace(";", "").replace(" ", "")


def _alphabet(args, *words: str) -> Optional[Alphabet]:
    if args.alphabet:
        return Alphabet(args.alphabet)
    letters = "".join(words) + _spec_letters(getattr(args, "theta", None))
    return Alphabet.from_words(letters) if letters else None


def _theta(args, *words: str):
    if not args.theta:
        raise UsageError(f"{args.command} requires --theta <spec>")
    if args.theta.strip().upper() == "ALL":
        raise UsageError("--theta ALL is only accepted by sweep")
    alphabet = _alphabet(args, *words)
    return parse_involution(args.theta, alphabet)


def _census_dict(elements) -> dict:
    return {"count": len(elements), "elements": list(elements)}


def _emit(args, text: str, obj) -> str:
    if args.json is None:
        return text
    rendered = dump_json(obj)
    if args.json == "-":
        return rendered
    with open(args.json, "w", encoding="utf-8") as fh:
        fh.write(rendered)
    return text


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_conj(args) -> str:
    alphabet = _alphabet(args, args.word)
    cs = conjugates(args.word, alphabet)
    obj = {"source": cs.source, "elements": list(cs.elements)}
    return _emit(args, "\n".join(show(e) for e in cs.elements) + "\n", obj)


def cmd_theta_conj(args) -> str:
    theta = _theta(args, args.word)
    tc = theta_conjugates(args.word, theta)
    obj = {
        "source": tc.source,
        "theta": theta.spec,
        "elements": list(tc.elements),
        "entries": [{"k": k, "value": v} for k, v in tc.entries],
    }
    return _emit(args, "\n".join(show(e) for e in tc.elements) + "\n", obj)


def cmd_decompose(args) -> str:
    theta = _theta(args, args.word)
    tc = theta_conjugates(args.word, theta)
    maximal = len(tc.elements) == len(args.word) + 1
    wit = deficiency_witness(args.word, theta)
    lines = [f"size: {len(tc.elements)} of {len(args.word) + 1}",
             f"maximal: {'yes' if maximal else 'no'}"]
    if wit is None:
        lines.append("witness: none")
    else:
        lines.append(
            f"witness: alpha={show(wit.alpha)} beta={show(wit.beta)} i={wit.i} v={show(wit.v)}"
        )
    obj = {
        "source": args.word,
        "theta": theta.spec,
        "elements": list(tc.elements),
        "maximal": maximal,
        "witness": None if wit is None else {
            "alpha": wit.alpha, "beta": wit.beta, "i": wit.i, "v": wit.v,
        },
    }
    return _emit(args, "\n".join(lines) + "\n", obj)


def cmd_power_growth(args) -> str:
    theta = _theta(args, args.word)
    sizes = power_growth(args.word, theta, args.max_power)
    text = "".join(f"{i}\t{n}\n" for i, n in enumerate(sizes, 1))
    obj = {"source": args.word, "theta": theta.spec, "sizes": sizes}
    return _emit(args, text, obj)


def analyze(w: str, theta) -> dict:
    """Full single-word record, in the field order used for JSON output."""
    tc = theta_conjugates(w, theta)
    cs = conjugates(w, theta.alphabet)
    conj_census = census(cs.elements, theta)
    tcensus = census(tc.elements, theta)
    root = primitive_root(w) if w else None
    wits = {
        "deficiency": deficiency_witness(w, theta),
        "two_theta_palindrome_conjugacy": two_theta_palindrome_conjugacy_witness(w, theta),
        "palindrome_in_theta_conjugates": palindrome_in_theta_conjugates_witness(w, theta),
        "theta_palindrome_in_theta_conjugates": theta_palindrome_in_theta_conjugates_witness(w, theta),
    }
    rendered = {}
    for name, wit in wits.items():
        if wit is None:
            rendered[name] = None
        elif name == "deficiency":
            rendered[name] = {"alpha": wit.alpha, "beta": wit.beta, "i": wit.i, "v": wit.v}
        else:
            rendered[name] = wit.as_dict()
    return {
        "source": w,
        "theta": theta.spec,
        "alphabet": theta.alphabet.letters,
        "length": len(w),
        "primitive": None if root is None else root.exponent == 1,
        "root": None if root is None else root.root,
        "exponent": None if root is None else root.exponent,
        "palindrome": is_palindrome(w),
        "theta_palindrome": theta(w) == w,
        "conj_size": len(cs.elements),
        "theta_conj_size": len(tc.elements),
        "theta_maximal": len(tc.elements) == len(w) + 1,
        "conjugates": list(cs.elements),
        "theta_conjugates": list(tc.elements),
        "entries": [{"k": k, "value": v} for k, v in tc.entries],
        "conj_theta_pal_census": _census_dict(conj_census.theta_palindromes),
        "pal_census": _census_dict(tcensus.palindromes),
        "theta_pal_census": _census_dict(tcensus.theta_palindromes),
        "witnesses": rendered,
    }


def _fmt_value(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, str):
        return show(v)
    if isinstance(v, list):
        return "{" + ", ".join(show(x) if isinstance(x, str) else str(x) for x in v) + "}"
    if isinstance(v, dict):
        if set(v) == {"count", "elements"}:
            return f"{v['count']} {_fmt_value(v['elements'])}"
        return " ".join(f"{k}={_fmt_value(x)}" for k, x in v.items())
    return str(v)


def cmd_analyze(args) -> str:
    theta = _theta(args, args.word)
    record = analyze(args.word, theta)
    lines = []
    for key, value in record.items():
        if key == "entries":
            value = [f"{e['k']}:{show(e['value'])}" for e in value]
            lines.append(f"entries: {' '.join(value)}")
        elif key == "witnesses":
            for name, wit in value.items():
                lines.append(f"witness {name}: {_fmt_value(wit)}")
        else:
            lines.append(f"{key}: {_fmt_value(value)}")
    return _emit(args, "\n".join(lines) + "\n", record)


def cmd_involutions(args) -> str:
    alphabet = _alphabet(args)
    if alphabet is None:
        raise UsageError("involutions requires --alphabet <letters>")
    invs = enumerate_involutions(alphabet)
    obj = {"alphabet": alphabet.letters, "involutions": [t.spec for t in invs]}
    return _emit(args, "".join(t.spec + "\n" for t in invs), obj)


def cmd_sweep(args) -> str:
    theta = args.theta or "ALL"
    if args.alphabet:
        letters = args.alphabet
    else:
        letters = "".join(sorted(set(_spec_letters(theta))))
        if not letters:
            raise UsageError("sweep requires --alphabet when --theta is ALL")
    checks = tuple(c.strip().upper() for c in args.check.split(",") if c.strip())
    config = SweepConfig.build(
        letters, theta,
        max_len=args.max_len, max_power=args.max_power, checks=checks, jobs=args.jobs,
    )
    report = run_checks(config)
    return _emit(args, report.summary() + "\n", report.as_dict())


def cmd_constructions(args) -> str:
    alphabet = _alphabet(args)
    if alphabet is None:
        raise UsageError("constructions requires --alphabet <letters>")
    results = explore_constructions(alphabet, args.max_len, args.max_power)
    lines = []
    for r in results:
        lines.append(f"{r.name}: tried {r.tried}, min count {r.min_count}, "
                     f"below two {len(r.below_two)}")
        for case in r.below_two[:10]:
            lines.append("  " + " ".join(f"{k}={show(v) if isinstance(v, str) else v}"
                                         for k, v in case.items()))
    obj = {"alphabet": alphabet.letters, "constructions": [r.as_dict() for r in results]}
    return _emit(args, "\n".join(lines) + "\n", obj)


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theta", help="involution spec such as 'ab,c' (or ALL for sweep)")
    common.add_argument("--alphabet", help="alphabet letters in order, e.g. abc")
    common.add_argument(
        "--json", nargs="?", const="-", default=None, metavar="PATH",
        help="emit JSON, to stdout or to PATH",
    )

    parser = argparse.ArgumentParser(
        prog="thetaconj",
        description="Theta-conjugates, palindromes and exhaustive theorem checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("word", help="the word; pass '' for the empty word")
        p.set_defaults(func=func)
        return p

    word_cmd("analyze", cmd_analyze, "full record for one word")
    word_cmd("conj", cmd_conj, "conjugacy class C(w)")
    word_cmd("theta-conj", cmd_theta_conj, "theta-conjugate set C_theta(w)")
    word_cmd("decompose", cmd_decompose, "deficiency decomposition of w")
    pg = word_cmd("power-growth", cmd_power_growth, "sizes of C_theta(w^i)")
    pg.add_argument("--max-power", type=int, default=3)

    sw = sub.add_parser("sweep", parents=[common], help="exhaustive theorem checks")
    sw.add_argument("--max-len", type=int, default=6)
    sw.add_argument("--max-power", type=int, default=3)
    sw.add_argument("--check", default=",".join(CHECK_IDS))
    sw.add_argument("--jobs", type=int, default=1)
    sw.set_defaults(func=cmd_sweep)

    co = sub.add_parser("constructions", parents=[common],
                        help="report palindrome counts of the two-palindrome constructions")
    co.add_argument("--max-len", type=int, default=2, help="longest u and x tried")
    co.add_argument("--max-power", type=int, default=2, help="largest i tried")
    co.set_defaults(func=cmd_constructions)

    inv = sub.add_parser("involutions", parents=[common], help="list every involution on an alphabet")
    inv.set_defaults(func=cmd_involutions)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except ThetaConjError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
