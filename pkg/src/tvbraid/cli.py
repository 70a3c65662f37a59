"""Command-line front end.

Exit codes: 0 on success, 1 when a verification check fails, 2 for
unusable input (bad syntax, unknown names), 3 when input parses but a
domain precondition fails (word outside the expected subgroup, map with
no computable kernel test).

Words come either as positional arguments or, with no positional words,
one per line on stdin.  Batch input is all-or-nothing: results print
only after every line has been processed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import abelian_invariants, invariants_text
from .homs import HOM_TABLE, image, in_kernel, make_hom
from .perms import format_element
from .present import FAMILIES, build_presentation, presentation_dict, presentation_text
from .rs import KERNEL_TABLE, make_context, rewrite_tau
from .suite import CHECKS, DEFAULT_SEED, format_report, run_suite
from .words import ParseError, format_word, parse_word, reduce


def _parse_n(text: str) -> list[int]:
    """Accept a single rank like "3" or an inclusive range like "2..4"."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        start, stop = int(lo), int(hi)
        if start > stop or start < 1:
            raise ValueError(f"bad rank range {text!r}")
        return list(range(start, stop + 1))
    value = int(text)
    if value < 1:
        raise ValueError(f"bad rank {text!r}")
    return [value]


def _parse_n_single(text: str) -> list[int]:
    if ".." in text:
        raise ValueError("rank ranges are only accepted by verify")
    return _parse_n(text)


def _gather_words(args) -> list[str]:
    if args.words:
        return list(args.words)
    return [line.strip() for line in sys.stdin if line.strip()]


def _emit(results, as_json: bool):
    if as_json:
        print(json.dumps(results if len(results) > 1 else results[0]))
    else:
        for r in results:
            print(r)


def _cmd_normalize(args):
    n = args.n[0]
    results = [format_word(reduce(parse_word(text, n))) for text in _gather_words(args)]
    _emit(results, args.json)
    return 0


def _cmd_image(args):
    n = args.n[0]
    h = make_hom(args.hom, n)
    results = []
    for text in _gather_words(args):
        value = image(h, parse_word(text, n))
        results.append(format_element(value) if h.concrete else format_word(value))
    _emit(results, args.json)
    return 0


def _cmd_kernel(args):
    n = args.n[0]
    h = make_hom(args.hom, n)
    verdicts = [in_kernel(h, parse_word(text, n)) for text in _gather_words(args)]
    if args.json:
        print(json.dumps(verdicts if len(verdicts) > 1 else verdicts[0]))
    else:
        for v in verdicts:
            print("true" if v else "false")
    return 0


def _cmd_rewrite(args):
    n = args.n[0]
    ctx = make_context(args.into, n)
    results = [
        format_word(rewrite_tau(ctx, parse_word(text, n)).word)
        for text in _gather_words(args)
    ]
    _emit(results, args.json)
    return 0


def _cmd_present(args):
    n = args.n[0]
    pres = build_presentation(args.group, n)
    if args.json:
        print(json.dumps(presentation_dict(pres)))
    else:
        print(presentation_text(pres))
    return 0


def _cmd_abelianize(args):
    n = args.n[0]
    inv = abelian_invariants(build_presentation(args.group, n))
    if args.json:
        print(json.dumps({"free_rank": inv.free_rank, "torsion": list(inv.torsion)}))
    else:
        print(invariants_text(inv))
    return 0


def _cmd_verify(args):
    checks = None if args.all else args.check
    reports = run_suite(checks=checks, n_range=args.n, seed=args.seed)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "check": r.check_id,
                        "n": r.n,
                        "status": r.status,
                        "details": r.details,
                    }
                    for r in reports
                ]
            )
        )
    else:
        print(format_report(reports, include_timings=args.timings))
    return 0 if all(r.status == "pass" for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tvbraid",
        description="words, quotients, and kernel presentations for twisted virtual braid groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_rank(p, allow_range=False):
        help_text = "number of strands"
        if allow_range:
            help_text += ", or an inclusive range like 2..4"
        p.add_argument(
            "-n",
            required=True,
            type=_parse_n if allow_range else _parse_n_single,
            help=help_text,
        )

    def add_words(p):
        p.add_argument("words", nargs="*", help="words; read from stdin when absent")
        p.add_argument("--json", action="store_true", help="print results as JSON")

    p = sub.add_parser("normalize", help="reduce a word to its normal form")
    add_rank(p)
    add_words(p)
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("image", help="evaluate a word in a concrete quotient")
    p.add_argument("--hom", required=True, choices=sorted(HOM_TABLE))
    add_rank(p)
    add_words(p)
    p.set_defaults(fn=_cmd_image)

    p = sub.add_parser("kernel", help="test whether a word lies in a kernel")
    p.add_argument("--hom", required=True, choices=sorted(HOM_TABLE))
    add_rank(p)
    add_words(p)
    p.set_defaults(fn=_cmd_kernel)

    p = sub.add_parser("rewrite", help="rewrite a kernel word over subgroup generators")
    p.add_argument("--into", required=True, choices=sorted(KERNEL_TABLE))
    add_rank(p)
    add_words(p)
    p.set_defaults(fn=_cmd_rewrite)

    p = sub.add_parser("present", help="print a stored presentation")
    p.add_argument("--group", required=True, choices=sorted(FAMILIES))
    add_rank(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_present)

    p = sub.add_parser("abelianize", help="print abelian invariants of a presentation")
    p.add_argument("--group", required=True, choices=sorted(FAMILIES))
    add_rank(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_abelianize)

    p = sub.add_parser("verify", help="run the verification suite")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="run every check")
    group.add_argument(
        "--check", action="append", choices=sorted(CHECKS), help="run one named check"
    )
    add_rank(p, allow_range=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="append wall times")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep both.
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
