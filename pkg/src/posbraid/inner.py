"""
Kálmán's inner product on the Hecke algebra ``H_n(z)``.

``<a, b>`` is the coefficient of ``v^(w+n-1)`` in ``(-z)^(n-1) P(closure(a b*))``
with ``b*`` the reverse of ``b`` and ``w`` the writhe of ``a b*``.  Two
independent routes are provided: reading the coefficient off a computed
HOMFLYPT polynomial, and a recursion on the length of the second argument
that never touches a polynomial in ``v``.
"""

from __future__ import annotations

from functools import lru_cache

from .braidcore import (
    BraidWord, Permutation, _right_descent, _times_s, all_permutations,
    reduced_word, reverse_word,
)
from .homfly import homfly_positive_closure
from .poly import Laurent2, coeff_of_v

__all__ = [
    "StrandMismatchError", "inner_product_def", "inner_product_simple",
    "gram_matrix", "is_identity_matrix",
]


class StrandMismatchError(ValueError):
    pass


def inner_product_def(a: BraidWord, b: BraidWord) -> Laurent2:
    if a.n != b.n:
        raise StrandMismatchError(f"words on {a.n} and {b.n} strands")
    n = a.n
    w = len(a) + len(b)
    p = homfly_positive_closure(a + reverse_word(b))
    sign = -1 if (n - 1) % 2 else 1
    return coeff_of_v(p.shift(0, n - 1, sign), w + n - 1)


@lru_cache(maxsize=None)
def _inner_simple(alpha: Permutation, beta: Permutation) -> Laurent2:
    if beta.is_identity():
        return Laurent2.one() if alpha.is_identity() else Laurent2.zero()
    i = next(i for i in range(1, len(beta)) if _right_descent(beta, i))
    kappa = _times_s(beta, i)
    alpha_i = _times_s(alpha, i)
    if not _right_descent(alpha, i):
        # T_alpha s_i is simple: slide the crossing across
        return _inner_simple(alpha_i, kappa)
    # T_alpha = T_alpha1 s_i, and s_i^2 = vz s_i + v^2 drops two v-degrees or one with a z
    return _inner_simple(alpha, kappa).shift(0, 1) + _inner_simple(alpha_i, kappa)


def inner_product_simple(alpha: Permutation, beta: Permutation) -> Laurent2:
    if len(alpha) != len(beta):
        raise StrandMismatchError(f"permutations in S_{len(alpha)} and S_{len(beta)}")
    return _inner_simple(alpha, beta)


def gram_matrix(n: int) -> tuple[list[Permutation], list[list[Laurent2]]]:
    """All pairings of simple braids, perms in lexicographic one-line order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    perms = all_permutations(n)
    words = [reduced_word(a) for a in perms]
    return perms, [[inner_product_def(u, t) for t in words] for u in words]


def is_identity_matrix(matrix: list[list[Laurent2]]) -> bool:
    one = Laurent2.one()
    return all(
        entry == (one if r == c else 0)
        for r, row in enumerate(matrix) for c, entry in enumerate(row)
    )
