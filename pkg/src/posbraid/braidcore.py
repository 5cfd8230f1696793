"""
Positive braid words, permutations and simple (positive permutation) braids.

Conventions
-----------
* Generators are 1-based: letter ``i`` is ``sigma_i``, crossing strands in
  positions ``i`` and ``i+1``.
* A permutation is stored in one-line form with 1-based images: ``a[p-1]`` is
  the end position of the strand that starts at position ``p``.
* Words compose left to right, so ``perm_of_word(u + v)`` is ``perm(u)``
  followed by ``perm(v)``.  Appending letter ``i`` is right multiplication by
  ``s_i``, which swaps the *values* ``i`` and ``i+1`` in the one-line form.

>>> perm_of_word(BraidWord(3, (1, 2, 1)))
Permutation((3, 2, 1))
>>> reduced_word(Permutation((3, 2, 1))).letters
(1, 2, 1)
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

__all__ = [
    "BraidWord", "Permutation", "WordSyntaxError", "FixesLastStrandError",
    "perm_of_word", "coxeter_length", "is_simple_word", "reduced_word",
    "right_descent", "reverse_word", "cyclic_shift", "embed",
    "destabilize_simple", "half_twist_word", "all_permutations",
    "RelationKind", "relation_sites", "apply_relation", "relate_reduced_words",
]


class WordSyntaxError(ValueError):
    """A braid word could not be parsed; ``token`` is the offending piece."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


class FixesLastStrandError(ValueError):
    """Raised by :func:`destabilize_simple` for permutations fixing ``n``."""


class Permutation(tuple):
    """A permutation of ``{1..n}`` in one-line form."""

    __slots__ = ()

    def __new__(cls, images=()):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        return tuple.__new__(cls, images)

    @classmethod
    def _unchecked(cls, images) -> Permutation:
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._unchecked(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls._unchecked(range(n, 0, -1))

    @classmethod
    def s(cls, i: int, n: int) -> Permutation:
        """The adjacent transposition ``s_i`` in ``S_n``."""
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not in S_{n}")
        return cls.identity(n).times_s(i)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"

    def is_identity(self) -> bool:
        return all(x == p for p, x in enumerate(self, 1))

    def fixes_last(self) -> bool:
        return self[-1] == len(self) if self else True

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for p, x in enumerate(self, 1):
            inv[x - 1] = p
        return Permutation._unchecked(inv)

    def then(self, other: Permutation) -> Permutation:
        """``self`` followed by ``other`` (the permutation of a concatenated word)."""
        return Permutation._unchecked(other[x - 1] for x in self)

    def times_s(self, i: int) -> Permutation:
        return _times_s(self, i)

    def length(self) -> int:
        return _length(self)

    def right_descent(self, i: int) -> bool:
        return _right_descent(self, i)

    def restrict(self) -> Permutation:
        """Drop the fixed last strand: ``S_n -> S_{n-1}``."""
        if not self.fixes_last():
            raise ValueError(f"{self!r} does not fix {len(self)}")
        return Permutation._unchecked(self[:-1])

    def label(self) -> str:
        """Human-readable name via the reduced word, e.g. ``s3 s2 s3`` or ``id``."""
        letters = reduced_word(self).letters
        return " ".join(f"s{i}" for i in letters) if letters else "id"


@lru_cache(maxsize=None)
def _times_s(a: Permutation, i: int) -> Permutation:
    return Permutation._unchecked(i + 1 if x == i else i if x == i + 1 else x for x in a)


@lru_cache(maxsize=None)
def _length(a: Permutation) -> int:
    return sum(1 for p, q in itertools.combinations(a, 2) if p > q)


@lru_cache(maxsize=None)
def _right_descent(a: Permutation, i: int) -> bool:
    # a.s_i is shorter iff the strand ending at i+1 starts left of the one ending at i
    return a.index(i) > a.index(i + 1)


@dataclass(frozen=True)
class BraidWord:
    """A positive braid word on ``n`` strands."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 1:
            raise ValueError(f"strand count must be at least 1, got {self.n}")
        for x in self.letters:
            if not 1 <= x <= self.n - 1:
                raise ValueError(f"generator {x} out of range for {self.n} strands")

    @classmethod
    def of(cls, letters, n: int | None = None) -> BraidWord:
        """Build a word, inferring ``n = max letter + 1`` when not given."""
        letters = tuple(letters)
        if n is None:
            n = max(letters, default=0) + 1
        return cls(n, letters)

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> BraidWord:
        """
        Parse ``"32322323"`` or ``"3 2 3 2 2 3 2 3"``.

        The strand count is ``max letter + 1``; ``strands`` may raise it but not
        lower it.
        """
        text = text.strip()
        if not text:
            tokens = []
        elif re.search(r"\s|,", text):
            tokens = [t for t in re.split(r"[\s,]+", text) if t]
        else:
            tokens = list(text)
        letters = []
        for t in tokens:
            if not t.isdigit() or int(t) < 1:
                raise WordSyntaxError(f"invalid generator token {t!r}", t)
            letters.append(int(t))
        needed = max(letters, default=0) + 1
        if strands is None:
            strands = needed
        elif strands < needed:
            raise WordSyntaxError(
                f"--strands {strands} is too small for generator {needed - 1}", str(needed - 1))
        return cls(strands, tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, k):
        return self.letters[k]

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.n != other.n:
            raise ValueError(f"cannot concatenate words on {self.n} and {other.n} strands")
        return BraidWord(self.n, self.letters + other.letters)

    @property
    def writhe(self) -> int:
        return len(self.letters)

    def with_letters(self, letters) -> BraidWord:
        return BraidWord(self.n, tuple(letters))

    def widened(self, n: int) -> BraidWord:
        return BraidWord(n, self.letters)

    def text(self) -> str:
        """Compact digit string when possible, else space separated."""
        if all(x <= 9 for x in self.letters):
            return "".join(map(str, self.letters))
        return " ".join(map(str, self.letters))

    def __str__(self) -> str:
        return self.text()


def perm_of_word(w: BraidWord) -> Permutation:
    a = Permutation.identity(w.n)
    for i in w.letters:
        a = _times_s(a, i)
    return a


def coxeter_length(a: Permutation) -> int:
    return _length(a)


def is_simple_word(w: BraidWord) -> bool:
    return len(w) == _length(perm_of_word(w))


def right_descent(a: Permutation, i: int) -> bool:
    if not 1 <= i < len(a):
        raise ValueError(f"generator {i} out of range for S_{len(a)}")
    return _right_descent(a, i)


@lru_cache(maxsize=None)
def _reduced_letters(a: Permutation) -> tuple[int, ...]:
    # strip the smallest right descent each time; read the stripped letters backwards
    out = []
    while a.length():
        i = next(i for i in range(1, len(a)) if _right_descent(a, i))
        out.append(i)
        a = _times_s(a, i)
    return tuple(reversed(out))


def reduced_word(a: Permutation) -> BraidWord:
    return BraidWord(len(a), _reduced_letters(a))


def reverse_word(w: BraidWord) -> BraidWord:
    return BraidWord(w.n, w.letters[::-1])


def cyclic_shift(w: BraidWord, k: int) -> BraidWord:
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.n, w.letters[k:] + w.letters[:k])


def embed(a: Permutation) -> Permutation:
    """``S_{n-1} -> S_n``, adding a fixed strand on top."""
    return Permutation._unchecked(tuple(a) + (len(a) + 1,))


def destabilize_simple(a: Permutation) -> tuple[Permutation, int, BraidWord]:
    """
    Write ``a = a' s_{n-1} s_{n-2} ... s_k`` with ``a'`` fixing ``n``.

    The strand starting at position ``n`` ends at position ``k``.  Returns
    ``(a' restricted to S_{n-1}, k, tail)`` where ``tail`` is the word
    ``n-2, ..., k`` on ``n-1`` strands, so the closure of the simple braid of
    ``a`` is the closure of ``reduced_word(a') + tail``.
    """
    n = len(a)
    if a.fixes_last():
        raise FixesLastStrandError(f"{a!r} fixes the last strand")
    k = a[n - 1]
    prime = a
    for j in range(k, n):
        prime = _times_s(prime, j)
    if not prime.fixes_last() or prime.length() != a.length() - (n - k):
        raise AssertionError(f"destabilization of {a!r} failed")
    return prime.restrict(), k, BraidWord(n - 1, tuple(range(n - 2, k - 1, -1)))


def half_twist_word(n: int) -> BraidWord:
    """``sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return BraidWord(n, tuple(j for top in range(1, n) for j in range(top, 0, -1)))


def all_permutations(n: int) -> list[Permutation]:
    """``S_n`` in lexicographic order of the one-line form."""
    return [Permutation._unchecked(p) for p in itertools.permutations(range(1, n + 1))]


# -- positive braid relations ----------------------------------------------------

RelationKind = Literal["commute", "braid"]


def relation_sites(letters: tuple[int, ...]) -> list[tuple[int, RelationKind]]:
    """All places where a positive braid relation applies."""
    sites: list[tuple[int, RelationKind]] = []
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if abs(a - b) >= 2:
            sites.append((p, "commute"))
        elif abs(a - b) == 1 and p + 2 < len(letters) and letters[p + 2] == a:
            sites.append((p, "braid"))
    return sites


def apply_relation(letters: tuple[int, ...], position: int, kind: RelationKind) -> tuple[int, ...]:
    """
    Apply ``ij -> ji`` (``|i-j| >= 2``) or ``iji -> jij`` (``|i-j| = 1``) at ``position``.

    Both moves are involutions.
    """
    p = position
    if kind == "commute":
        if p < 0 or p + 1 >= len(letters) or abs(letters[p] - letters[p + 1]) < 2:
            raise ValueError(f"no commutation at {p} in {letters}")
        return letters[:p] + (letters[p + 1], letters[p]) + letters[p + 2:]
    if kind == "braid":
        if (p < 0 or p + 2 >= len(letters) or abs(letters[p] - letters[p + 1]) != 1
                or letters[p] != letters[p + 2]):
            raise ValueError(f"no braid relation at {p} in {letters}")
        a, b = letters[p], letters[p + 1]
        return letters[:p] + (b, a, b) + letters[p + 3:]
    raise ValueError(f"unknown relation kind {kind!r}")


def _move_to_end(u: tuple[int, ...], i: int, n: int) -> list[tuple[int, RelationKind]]:
    """Relation moves turning reduced word ``u`` into one ending in ``i``.

    ``i`` must be a right descent of the permutation of ``u``.
    """
    if not u:
        raise ValueError("empty word has no descents")
    j = u[-1]
    if j == i:
        return []
    head = u[:-1]
    if abs(i - j) >= 2:
        # head ends in i after rewriting; then commute the final pair
        steps = _move_to_end(head, i, n)
        return steps + [(len(u) - 2, "commute")]
    # |i - j| == 1: rewrite to ... j i j, then braid move to ... i j i
    steps = _move_to_end(head, i, n)
    head = _replay_moves(head, steps)
    steps += _move_to_end(head[:-1], j, n)
    return steps + [(len(u) - 3, "braid")]


def _replay_moves(letters: tuple[int, ...], moves) -> tuple[int, ...]:
    for p, kind in moves:
        letters = apply_relation(letters, p, kind)
    return letters


def _to_canonical(u: tuple[int, ...], n: int) -> list[tuple[int, RelationKind]]:
    steps: list[tuple[int, RelationKind]] = []
    while u:
        a = perm_of_word(BraidWord(n, u))
        i = next(i for i in range(1, n) if _right_descent(a, i))
        moves = _move_to_end(u, i, n)
        steps += moves
        u = _replay_moves(u, moves)[:-1]
    return steps


def relate_reduced_words(u: BraidWord, t: BraidWord) -> list[tuple[int, RelationKind]]:
    """
    Positive braid relation moves rewriting reduced word ``u`` into ``t``.

    Both words must be reduced words of the same permutation.
    """
    if u.n != t.n or perm_of_word(u) != perm_of_word(t):
        raise ValueError("words represent different permutations")
    if not (is_simple_word(u) and is_simple_word(t)):
        raise ValueError("both words must be reduced")
    # moves are involutions, so the path t -> canonical reversed goes canonical -> t
    return _to_canonical(u.letters, u.n) + _to_canonical(t.letters, t.n)[::-1]
