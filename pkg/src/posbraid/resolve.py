"""
Simple resolution trees and the decomposition of positive braids in the
basis of simple braids.

Each internal node splits a word ``P s_i s_i Q`` by the quadratic relation
``s_i^2 = v z s_i + v^2`` into a left child ``P Q`` (edge label ``v^2``) and a
right child ``P s_i Q`` (edge label ``v z``).  Leaves are simple words.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional

from .braidcore import (
    BraidWord, Permutation, _right_descent, _times_s, perm_of_word, reduced_word,
)
from .poly import Laurent2

__all__ = [
    "Split", "ResolutionTree", "HeckeDecomposition",
    "find_square_split", "build_tree", "collect_decomposition",
    "hecke_decompose_iterative",
]

LEFT_LABEL = "v^2"
RIGHT_LABEL = "v*z"


@dataclass(frozen=True)
class Split:
    """``word == prefix + [i] + tail`` and, as braids, ``word == P s_i s_i Q``."""

    P: BraidWord
    i: int
    Q: BraidWord
    prefix: BraidWord  # the original letters before the second s_i

    def __iter__(self):
        return iter((self.P, self.i, self.Q))


def find_square_split(w: BraidWord) -> Optional[Split]:
    """
    Locate an exposed square, or return ``None`` when ``w`` is simple.

    Scans left to right keeping the permutation ``a`` of the prefix read so
    far.  At the first letter ``j`` that is a right descent of ``a`` the prefix
    equals ``T_{a s_j} s_j`` as a braid, so ``w = T_{a s_j} s_j^2 tail``.
    """
    a = Permutation.identity(w.n)
    for pos, j in enumerate(w.letters):
        if _right_descent(a, j):
            return Split(
                P=reduced_word(_times_s(a, j)),
                i=j,
                Q=BraidWord(w.n, w.letters[pos + 1:]),
                prefix=BraidWord(w.n, w.letters[:pos]),
            )
        a = _times_s(a, j)
    return None


@dataclass(frozen=True)
class ResolutionTree:
    word: BraidWord
    split: Optional[Split] = None
    left: Optional[ResolutionTree] = None
    right: Optional[ResolutionTree] = None

    @property
    def is_leaf(self) -> bool:
        return self.split is None

    def leaves(self, path: str = "") -> Iterator[tuple[str, BraidWord]]:
        """Yield ``(path, word)`` for every leaf; ``path`` is a string of ``L``/``R``."""
        if self.split is None:
            yield path, self.word
        else:
            yield from self.left.leaves(path + "L")
            yield from self.right.leaves(path + "R")

    def to_json(self) -> dict:
        if self.split is None:
            return {"word": self.word.text(), "split": None}
        return {
            "word": self.word.text(),
            "i": self.split.i,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "left_label": LEFT_LABEL,
            "right_label": RIGHT_LABEL,
        }

    def to_dot(self) -> str:
        lines = ["digraph resolution {", "  node [shape=box];"]

        def walk(t: ResolutionTree, path: str):
            node = "n_" + (path or "root")
            shape = ", style=filled, fillcolor=lightgrey" if t.split is None else ""
            lines.append(f'  {node} [label="{t.word.text() or "1"}"{shape}];')
            if t.split is not None:
                for child, step, label in ((t.left, "L", "v^2"), (t.right, "R", "v z")):
                    walk(child, path + step)
                    lines.append(f'  {node} -> n_{path + step} [label="{label}"];')

        walk(self, "")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_tree(w: BraidWord) -> ResolutionTree:
    split = find_square_split(w)
    if split is None:
        return ResolutionTree(w)
    P, i, Q = split
    return ResolutionTree(
        w, split,
        left=build_tree(P + Q),
        right=build_tree(P + BraidWord(w.n, (i,)) + Q),
    )


class HeckeDecomposition(dict):
    """``{Permutation: Laurent2}``: a positive braid in the simple-braid basis."""

    def __init__(self, n: int, coeffs=()):
        super().__init__(coeffs)
        self.n = n

    def __eq__(self, other):
        if isinstance(other, HeckeDecomposition) and self.n != other.n:
            return False
        return dict.__eq__(self, other)

    __hash__ = None

    def at_v1(self) -> dict[Permutation, Laurent2]:
        return {a: c.subs_v1() for a, c in self.items()}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "coeffs": [
                {"perm": list(a), "word": reduced_word(a).text(), "coeff": c.to_json(), "text": str(c)}
                for a, c in sorted(self.items())
            ],
        }


def collect_decomposition(t: ResolutionTree) -> HeckeDecomposition:
    """Sum ``z^a v^(a + 2L)`` over leaves, where ``a``/``L`` count right/left edges."""
    acc: dict[Permutation, dict] = defaultdict(lambda: defaultdict(int))
    stack = [(t, 0, 0)]
    while stack:
        node, rights, lefts = stack.pop()
        if node.split is None:
            acc[perm_of_word(node.word)][rights + 2 * lefts, rights] += 1
        else:
            stack.append((node.left, rights, lefts + 1))
            stack.append((node.right, rights + 1, lefts))
    return HeckeDecomposition(t.word.n, {a: Laurent2(c) for a, c in acc.items()})


def hecke_decompose_iterative(w: BraidWord) -> HeckeDecomposition:
    """
    Multiply out ``w`` letter by letter in the simple-braid basis.

    ``T_a s_i`` is ``T_{a s_i}`` when that is longer, otherwise
    ``v z T_a + v^2 T_{a s_i}``.
    """
    state: dict[Permutation, Laurent2] = {Permutation.identity(w.n): Laurent2.one()}
    for i in w.letters:
        nxt: dict[Permutation, Laurent2] = {}
        for a, c in state.items():
            b = _times_s(a, i)
            if not _right_descent(a, i):
                nxt[b] = nxt[b] + c if b in nxt else c
            else:
                up = c.shift(1, 1)
                down = c.shift(2, 0)
                nxt[a] = nxt[a] + up if a in nxt else up
                nxt[b] = nxt[b] + down if b in nxt else down
        state = nxt
    return HeckeDecomposition(w.n, state)
