"""
Morton-Franks-Williams bounds, sharpness certificates and the braid index of
positive 3-braids.

For a positive word ``w`` on ``n`` strands the lower bound ``w - n + 1`` is
always attained, and the upper bound ``w + n - 1`` is attained exactly when
the simple-braid expansion of ``w`` has a nonzero identity coefficient.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Literal, Optional, Union

from .braidcore import (
    BraidWord, apply_relation, cyclic_shift, half_twist_word, perm_of_word,
    relate_reduced_words, relation_sites, reverse_word,
)
from .homfly import homfly_positive_closure
from .poly import v_degree_bounds
from .resolve import find_square_split, hecke_decompose_iterative

__all__ = [
    "MfwReport", "InsertSquare", "DoubleLetter", "BraidRelation", "Certificate",
    "NotThreeStrandError", "mfw_report", "is_mfw_sharp", "sharpness_certificate",
    "replay", "corollary6_family", "Theorem9Family", "classify3",
    "conjugation_normal_form3",
]


class NotThreeStrandError(ValueError):
    pass


@dataclass(frozen=True)
class MfwReport:
    lower: int
    upper: int
    dv_min: int
    dv_max: int
    mfw: int
    sharp: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)

    def __str__(self) -> str:
        return (f"lower={self.lower} upper={self.upper} dv_min={self.dv_min} "
                f"dv_max={self.dv_max} mfw={self.mfw} sharp={str(self.sharp).lower()}")


def mfw_report(w: BraidWord) -> MfwReport:
    lo, hi = v_degree_bounds(homfly_positive_closure(w))
    lower, upper = len(w) - w.n + 1, len(w) + w.n - 1
    if lo != lower or hi > upper or (hi - lo) % 2:
        raise ArithmeticError(f"degrees {lo}..{hi} violate the MFW bounds {lower}..{upper} for {w}")
    return MfwReport(lower, upper, lo, hi, (hi - lo) // 2 + 1, hi == upper)


def is_mfw_sharp(w: BraidWord) -> bool:
    """True iff some leaf of a simple resolution tree of ``w`` is the identity."""
    return perm_of_word(BraidWord(w.n)) in hecke_decompose_iterative(w)


# -- certificates ----------------------------------------------------------------

@dataclass(frozen=True)
class InsertSquare:
    """Insert ``s_i s_i`` before ``position``."""
    i: int
    position: int


@dataclass(frozen=True)
class DoubleLetter:
    """Repeat the letter at ``position``."""
    position: int


@dataclass(frozen=True)
class BraidRelation:
    position: int
    kind: Literal["commute", "braid"]


Step = Union[InsertSquare, DoubleLetter, BraidRelation]
Certificate = list[Step]


def replay(steps: Certificate, n: int) -> BraidWord:
    """Apply ``steps`` to the empty word on ``n`` strands."""
    letters: tuple[int, ...] = ()
    for step in steps:
        if isinstance(step, InsertSquare):
            p = step.position
            if not 0 <= p <= len(letters):
                raise ValueError(f"cannot insert at {p} in a word of length {len(letters)}")
            letters = letters[:p] + (step.i, step.i) + letters[p:]
        elif isinstance(step, DoubleLetter):
            p = step.position
            if not 0 <= p < len(letters):
                raise ValueError(f"no letter at {p}")
            letters = letters[:p + 1] + letters[p:]
        else:
            letters = apply_relation(letters, step.position, step.kind)
    return BraidWord(n, letters)


def sharpness_certificate(w: BraidWord) -> Optional[Certificate]:
    """
    Build ``w`` from the empty word, or return ``None`` when the upper bound is strict.

    Walks down the first-descent resolution tree, always into a child whose
    expansion still contains the identity, then reads the path bottom-up.
    Every node on the way is reproduced letter for letter: the relation moves
    turning ``P s_i`` back into the original prefix are part of the output.
    """
    if not is_mfw_sharp(w):
        return None
    levels: list[list[Step]] = []
    node = w
    while node.letters:
        split = find_square_split(node)
        P, i, Q = split
        left = P + Q
        if is_mfw_sharp(left):
            node, grow = left, InsertSquare(i, len(P))
        else:
            node, grow = P + BraidWord(w.n, (i,)) + Q, DoubleLetter(len(P))
        fix = relate_reduced_words(P + BraidWord(w.n, (i,)), split.prefix)
        levels.append([grow] + [BraidRelation(p, k) for p, k in fix])
    return [step for level in reversed(levels) for step in level]


# -- word families ----------------------------------------------------------------

def _cyclic_runs(letters: tuple[int, ...]) -> list[tuple[int, int]]:
    """Maximal runs ``(letter, length)`` of a word read around a circle."""
    if not letters:
        return []
    if len(set(letters)) == 1:
        return [(letters[0], len(letters))]
    # rotate so the word does not start in the middle of a run
    k = next(p for p in range(len(letters)) if letters[p] != letters[p - 1])
    letters = letters[k:] + letters[:k]
    runs: list[tuple[int, int]] = []
    for x in letters:
        if runs and runs[-1][0] == x:
            runs[-1] = (x, runs[-1][1] + 1)
        else:
            runs.append((x, 1))
    return runs


def _contains(letters: tuple[int, ...], factor: tuple[int, ...]) -> bool:
    m = len(factor)
    return any(letters[p:p + m] == factor for p in range(len(letters) - m + 1))


def _contains_delta_squared(w: BraidWord, depth: int) -> bool:
    target = half_twist_word(w.n).letters * 2
    if len(w) < len(target):
        return False
    seen = {w.letters}
    frontier = deque([(w.letters, 0)])
    while frontier:
        letters, d = frontier.popleft()
        if _contains(letters, target):
            return True
        if d == depth:
            continue
        for p, kind in relation_sites(letters):
            nxt = apply_relation(letters, p, kind)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, d + 1))
    return False


def corollary6_family(w: BraidWord, depth: int = 3) -> Optional[str]:
    """
    Tag words that are sharp for a visible reason.

    ``AllExponentsAtLeastTwo``: every cyclic run of one generator has length at
    least two.  ``EvenPalindrome``: even length and equal to its reverse.
    ``ContainsDeltaSquared``: the full twist appears as a factor after at most
    ``depth`` positive relation moves (a miss is not evidence of anything).
    """
    if all(length >= 2 for _, length in _cyclic_runs(w.letters)):
        return "AllExponentsAtLeastTwo"
    if len(w) % 2 == 0 and reverse_word(w) == w:
        return "EvenPalindrome"
    if w.n >= 2 and _contains_delta_squared(w, depth):
        return "ContainsDeltaSquared"
    return None


@dataclass(frozen=True)
class Theorem9Family:
    """A positive 3-braid word, up to rotation, whose closure has braid index below 3.

    ``Family1``: ``s_a s_b^p`` (``p >= 0``).  ``Family2``: ``s_a s_b s_a^p s_b^q``
    (``p, q > 0``).  ``first`` is ``a``, the generator the matched rotation
    starts with; ``shift`` is that rotation.
    """
    name: Literal["Family1", "Family2"]
    first: int
    p: int
    q: Optional[int] = None
    shift: int = 0

    def __str__(self) -> str:
        if self.name == "Family1":
            return f"Family1(p={self.p})"
        return f"Family2(p={self.p},q={self.q})"

    def normal_form_exponent(self) -> int:
        """``p`` with the braid conjugate to ``s_1^p s_2``."""
        return self.p if self.name == "Family1" else self.p + self.q + 1


def _match_family(letters: tuple[int, ...]) -> Optional[tuple[str, int, int, Optional[int]]]:
    if not letters:
        return None
    a = letters[0]
    b = 3 - a
    rest = letters[1:]
    if all(x == b for x in rest):
        return "Family1", a, len(rest), None
    if len(letters) >= 4 and letters[1] == b:
        body = letters[2:]
        p = 0
        while p < len(body) and body[p] == a:
            p += 1
        q = len(body) - p
        if p > 0 and q > 0 and all(x == b for x in body[p:]):
            return "Family2", a, p, q
    return None


def _require3(w: BraidWord) -> None:
    if w.n != 3:
        raise NotThreeStrandError(f"not a 3-strand word: {w.n} strands")


def match_theorem9(w: BraidWord) -> Optional[Theorem9Family]:
    _require3(w)
    for k in range(max(len(w), 1)):
        m = _match_family(cyclic_shift(w, k).letters)
        if m is not None:
            name, first, p, q = m
            return Theorem9Family(name, first, p, q, k)
    return None


def classify3(w: BraidWord) -> tuple[int, Optional[Theorem9Family]]:
    """Braid index of the closure of a positive 3-braid, with the matching family."""
    _require3(w)
    index = mfw_report(w).mfw
    if not w.letters:
        return index, None
    return index, match_theorem9(w)


def conjugation_normal_form3(w: BraidWord) -> Optional[int]:
    """``p`` such that ``w`` is conjugate to ``s_1^p s_2``, for the listed families."""
    family = match_theorem9(w)
    return None if family is None else family.normal_form_exponent()
