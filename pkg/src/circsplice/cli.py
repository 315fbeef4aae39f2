"""Command-line front end.

Exit status: 0 on success or an affirmative answer, 1 on a negative answer
(non-member, non-regular, avoidable, cross-check mismatch), 2 on usage,
parse or semantic errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import CircspliceError
from .formats import dump_system, load_base, load_system
from .morphism import simple_to_complete, split_initial
from .regularity import crosscheck_mr1, decide_regular, splicing_member
from .splicing import closure_bounded
from .unitary import unavoidable
from .words import parse_word

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2

REQUIRED = {
    "enumerate": ("system", "max_len"),
    "member": ("system", "word"),
    "regular": ("system",),
    "convert": ("system",),
    "crosscheck": ("system", "max_len"),
    "unavoidable": ("base",),
    "classify": ("system",),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="circsplice", description="Circular splicing systems and pure unitary languages.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "enumerate": "list L(S) up to a length bound",
        "member": "decide whether a circular word is in L(S)",
        "regular": "decide regularity of L(S)",
        "convert": "turn a one-rule simple system into a complete system",
        "crosscheck": "compare splicing closure with iterated insertion",
        "unavoidable": "decide subword unavoidability of a base",
        "classify": "print the class of a system",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--system", type=Path, help="system description file")
        p.add_argument("--base", type=Path, help="insertion base file")
        p.add_argument("--max-len", type=int, dest="max_len", help="length bound")
        p.add_argument("--word", help="query word (1 is the empty word)")
        p.add_argument("--out", type=Path, help="output file (default stdout)")
    return parser


def run(args) -> tuple[int, str]:
    """Execute a parsed invocation; return (exit status, output text)."""
    command = args.command
    if command == "enumerate":
        fragment = closure_bounded(load_system(args.system), args.max_len)
        return EXIT_OK, "".join(line + "\n" for line in fragment.listing())
    if command == "member":
        system = load_system(args.system)
        found = splicing_member(system, parse_word(args.word))
        return (EXIT_OK if found else EXIT_NO), f"{str(found).lower()}\n"
    if command == "regular":
        verdict = decide_regular(load_system(args.system))
        text = f"{verdict}\n"
        if verdict.morphism is not None:
            text += f"; {verdict.morphism}\n"
        if verdict.leftovers:
            text += "; leftovers = " + " ".join(str(w) for w in sorted(verdict.leftovers)) + "\n"
        return (EXIT_OK if verdict.regular else EXIT_NO), text
    if command == "convert":
        s1, leftovers = split_initial(load_system(args.system))
        converted, phi = simple_to_complete(s1)
        comments = [str(phi)]
        if leftovers:
            comments.append("leftovers = " + " ".join(str(w) for w in sorted(leftovers)))
        return EXIT_OK, dump_system(converted, comments)
    if command == "crosscheck":
        report = crosscheck_mr1(load_system(args.system), args.max_len)
        return (EXIT_OK if report.equal else EXIT_NO), f"{report}\n"
    if command == "unavoidable":
        verdict = unavoidable(load_base(args.base))
        return (EXIT_OK if verdict.unavoidable else EXIT_NO), f"{verdict}\n"
    if command == "classify":
        return EXIT_OK, f"{load_system(args.system).classification}\n"
    raise AssertionError(command)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    missing = [f"--{name.replace('_', '-')}" for name in REQUIRED[args.command] if getattr(args, name) is None]
    if missing:
        parser.error(f"{args.command} requires {', '.join(missing)}")
    try:
        status, text = run(args)
    except (CircspliceError, OSError) as exc:
        print(f"circsplice: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
