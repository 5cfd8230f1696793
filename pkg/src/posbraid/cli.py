"""Command-line front end: ``posbraid <command> WORD [--strands N] [--format ...]``."""

from __future__ import annotations

import argparse
import json
import sys

from .braidcore import BraidWord, WordSyntaxError, is_simple_word, perm_of_word
from .homfly import homfly_positive_closure
from .inner import StrandMismatchError, gram_matrix, inner_product_def, is_identity_matrix
from .mfwindex import (
    BraidRelation, DoubleLetter, InsertSquare, NotThreeStrandError, classify3,
    conjugation_normal_form3, mfw_report, sharpness_certificate,
)
from .poly import Laurent2
from .resolve import build_tree, hecke_decompose_iterative

EXIT_PARSE = 2
EXIT_PRECONDITION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _step_json(step) -> dict:
    if isinstance(step, InsertSquare):
        return {"op": "insert_square", "i": step.i, "position": step.position}
    if isinstance(step, DoubleLetter):
        return {"op": "double_letter", "position": step.position}
    return {"op": "braid_relation", "position": step.position, "kind": step.kind}


def _step_text(step) -> str:
    if isinstance(step, InsertSquare):
        return f"insert s{step.i}^2 at {step.position}"
    if isinstance(step, DoubleLetter):
        return f"double letter at {step.position}"
    assert isinstance(step, BraidRelation)
    return f"{step.kind} at {step.position}"


def _normal_form_text(p: int) -> str:
    if p == 0:
        return "s2"
    return ("s1" if p == 1 else f"s1^{p}") + " s2"


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data))
    else:
        print(text)


def cmd_homfly(args) -> int:
    w = BraidWord.parse(args.word, args.strands)
    p = homfly_positive_closure(w)
    _emit(args, str(p), {"word": w.text(), "n": w.n, "homfly": p.to_json()})
    return 0


def cmd_tree(args) -> int:
    w = BraidWord.parse(args.word, args.strands)
    tree = build_tree(w)
    if args.format == "dot":
        sys.stdout.write(tree.to_dot())
    elif args.format == "json":
        print(json.dumps(tree.to_json()))
    else:
        for path, leaf in tree.leaves():
            rights = path.count("R")
            weight = Laurent2.monomial(1, len(w) - len(leaf), rights)
            print(f"{path or '-'}\t{leaf.text() or '1'}\t{weight}\t{perm_of_word(leaf).label()}")
    return 0


def cmd_mfw(args) -> int:
    w = BraidWord.parse(args.word, args.strands)
    report = mfw_report(w)
    _emit(args, str(report), report.to_json())
    return 0


def cmd_sharp(args) -> int:
    w = BraidWord.parse(args.word, args.strands)
    cert = sharpness_certificate(w)
    if args.format == "json":
        print(json.dumps({
            "sharp": cert is not None,
            "certificate": None if cert is None else [_step_json(s) for s in cert],
        }))
        return 0
    print(f"sharp={str(cert is not None).lower()}")
    for step in cert or ():
        print("  " + _step_text(step))
    return 0


def cmd_inner(args) -> int:
    a = BraidWord.parse(args.a)
    b = BraidWord.parse(args.b)
    n = max(a.n, b.n, args.strands or 0)
    a, b = a.widened(n), b.widened(n)
    value = inner_product_def(a, b)
    _emit(args, str(value), {"a": a.text(), "b": b.text(), "n": n, "inner": value.to_json()})
    return 0


def cmd_gram(args) -> int:
    if args.n < 1:
        print("gram: n must be at least 1", file=sys.stderr)
        return EXIT_PRECONDITION
    perms, matrix = gram_matrix(args.n)
    ok = is_identity_matrix(matrix)
    if args.format == "json":
        print(json.dumps({
            "n": args.n,
            "perms": [list(a) for a in perms],
            "matrix": [[str(x) for x in row] for row in matrix],
            "identity": ok,
        }))
    else:
        print(f"n={args.n} size={len(perms)} identity={str(ok).lower()}")
        if not ok:
            for r, row in enumerate(matrix):
                for c, x in enumerate(row):
                    if x != (1 if r == c else 0):
                        print(f"  <{perms[r].label()}, {perms[c].label()}> = {x}")
    return 0


def cmd_classify3(args) -> int:
    w = BraidWord.parse(args.word, args.strands)
    index, family = classify3(w)
    p = conjugation_normal_form3(w)
    if args.format == "json":
        print(json.dumps({
            "index": index,
            "family": None if family is None else {
                "name": family.name, "first": family.first, "p": family.p,
                "q": family.q, "shift": family.shift,
            },
            "normal_form_p": p,
        }))
    else:
        fam = "none" if family is None else str(family)
        nf = "none" if p is None else _normal_form_text(p)
        print(f"index={index} family={fam} normal_form={nf}")
    return 0


def cmd_simple(args) -> int:
    w = BraidWord.parse(args.word, args.strands)
    a = perm_of_word(w)
    simple = is_simple_word(w)
    _emit(args, f"simple={str(simple).lower()} perm={list(a)} length={a.length()}",
          {"simple": simple, "perm": list(a), "length": a.length(), "word_length": len(w)})
    return 0


def cmd_basis(args) -> int:
    w = BraidWord.parse(args.word, args.strands)
    dec = hecke_decompose_iterative(w)
    if args.format == "json":
        print(json.dumps(dec.to_json()))
    else:
        for a, c in sorted(dec.items()):
            print(f"{a.label()}\t{list(a)}\t{c}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="posbraid", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def word_command(name, func, help, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("word", help='positive word, e.g. 32322323 or "3 2 3"; "" for the empty word')
        p.add_argument("--strands", type=int, help="strand count (default: max letter + 1)")
        p.add_argument("--format", choices=formats, default="text")
        p.set_defaults(func=func)
        return p

    word_command("homfly", cmd_homfly, "HOMFLYPT polynomial of the closure")
    word_command("tree", cmd_tree, "first-descent simple resolution tree", ("text", "json", "dot"))
    word_command("mfw", cmd_mfw, "Morton-Franks-Williams bounds")
    word_command("sharp", cmd_sharp, "is the MFW inequality sharp, with a certificate")
    word_command("classify3", cmd_classify3, "braid index of a positive 3-braid closure")
    word_command("simple", cmd_simple, "is the word a simple (permutation) braid")
    word_command("basis", cmd_basis, "coordinates in the simple-braid basis")

    p = sub.add_parser("inner", help="Kalman inner product of two positive words")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--strands", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_inner)

    p = sub.add_parser("gram", help="Gram matrix of simple braids on n strands")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_gram)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"posbraid: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (NotThreeStrandError, StrandMismatchError) as exc:
        print(f"posbraid: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
