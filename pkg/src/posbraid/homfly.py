"""
HOMFLYPT polynomial of closures of positive braids.

Skein convention ``v^-1 P(L+) - v P(L-) = z P(L0)``, unknot normalized to 1.
A positive word is expanded in the simple-braid basis, and the closure of a
simple braid ``T_a`` is evaluated by peeling off the last strand:

* ``a = id``: ``n`` split circles, ``delta^(n-1)``;
* ``a`` fixes ``n``: one extra split circle, ``delta * P(T_a' on n-1 strands)``;
* otherwise the last strand passes once through ``s_{n-1}`` and a Markov
  destabilization leaves a positive word on ``n-1`` strands.
"""

from __future__ import annotations

import threading

from .braidcore import BraidWord, Permutation, destabilize_simple, reduced_word
from .poly import Laurent2, delta_power
from .resolve import hecke_decompose_iterative

__all__ = ["homfly_simple_closure", "homfly_positive_closure", "clear_caches"]

_lock = threading.Lock()
_simple_cache: dict[tuple[int, Permutation], Laurent2] = {}
_word_cache: dict[tuple[int, tuple[int, ...]], Laurent2] = {}


def clear_caches() -> None:
    with _lock:
        _simple_cache.clear()
        _word_cache.clear()


def homfly_simple_closure(a: Permutation, n: int | None = None) -> Laurent2:
    if n is None:
        n = len(a)
    if len(a) != n:
        raise ValueError(f"{a!r} is not in S_{n}")
    key = (n, a)
    cached = _simple_cache.get(key)
    if cached is not None:
        return cached

    if a.is_identity():
        result = delta_power(n - 1)
    elif a.fixes_last():
        result = delta_power(1) * homfly_simple_closure(a.restrict(), n - 1)
    else:
        prime, _, tail = destabilize_simple(a)
        result = _destabilized_closure(reduced_word(prime) + tail)

    with _lock:
        _simple_cache[key] = result
    return result


def homfly_positive_closure(w: BraidWord) -> Laurent2:
    result = Laurent2.zero()
    for a, c in hecke_decompose_iterative(w).items():
        result = result + c * homfly_simple_closure(a, w.n)
    return result


def _destabilized_closure(w: BraidWord) -> Laurent2:
    key = (w.n, w.letters)
    cached = _word_cache.get(key)
    if cached is None:
        cached = homfly_positive_closure(w)
        with _lock:
            _word_cache[key] = cached
    return cached
