"""
Sparse integer Laurent polynomials in two commuting variables ``v`` and ``z``.

A polynomial is stored as a dict ``{(dv, dz): coeff}`` with no zero
coefficients, so equality of the dicts is equality of polynomials.  Python
integers are unbounded, so coefficient arithmetic never wraps.

>>> delta = delta_power(1)
>>> str(delta)
'-v*z^-1 + v^-1*z^-1'
>>> str(delta * Laurent2.monomial(dz=1))
'-v + v^-1'
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from functools import lru_cache

__all__ = [
    "Laurent2", "ZeroPolynomialError",
    "add", "mul", "delta_power", "v_degree_bounds", "coeff_of_v",
]

Exponents = tuple[int, int]


class ZeroPolynomialError(ValueError):
    """Raised when a degree is requested from the zero polynomial."""


class Laurent2:
    """Immutable sparse Laurent polynomial in ``v`` and ``z`` over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponents, int] = {}
        for (dv, dz), c in items:
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
            key = (int(dv), int(dz))
            clean[key] = clean.get(key, 0) + c
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[Exponents, int]) -> Laurent2:
        # caller guarantees `terms` has no zero coefficients and is not shared
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, c: int = 1, dv: int = 0, dz: int = 0) -> Laurent2:
        return cls._wrap({(dv, dz): c} if c else {})

    @classmethod
    def zero(cls) -> Laurent2:
        return cls._wrap({})

    @classmethod
    def one(cls) -> Laurent2:
        return cls._wrap({(0, 0): 1})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Exponents, int]:
        """A copy of the term dict."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Laurent2.monomial(other)
        if not isinstance(other, Laurent2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Laurent2 | int) -> Laurent2:
        if isinstance(other, int):
            other = Laurent2.monomial(other)
        if not isinstance(other, Laurent2):
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return Laurent2._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> Laurent2:
        return Laurent2._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Laurent2 | int) -> Laurent2:
        if isinstance(other, int):
            other = Laurent2.monomial(other)
        return self + (-other)

    def __rsub__(self, other: int) -> Laurent2:
        return Laurent2.monomial(other) - self

    def __mul__(self, other: Laurent2 | int) -> Laurent2:
        if isinstance(other, int):
            if not other:
                return Laurent2.zero()
            return Laurent2._wrap({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, Laurent2):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) == 1:
            ((dv, dz), c), = a.items()
            return other.shift(dv, dz, c)
        if len(b) == 1:
            ((dv, dz), c), = b.items()
            return self.shift(dv, dz, c)
        out: dict[Exponents, int] = {}
        get = out.get
        for (av, az), ac in a.items():
            for (bv, bz), bc in b.items():
                k = (av + bv, az + bz)
                out[k] = get(k, 0) + ac * bc
        return Laurent2._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Laurent2:
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result, base = Laurent2.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, dv: int = 0, dz: int = 0, c: int = 1) -> Laurent2:
        """Multiply by the monomial ``c * v^dv * z^dz``."""
        if not c:
            return Laurent2.zero()
        if c == 1:
            return Laurent2._wrap({(av + dv, az + dz): ac for (av, az), ac in self._terms.items()})
        return Laurent2._wrap({(av + dv, az + dz): ac * c for (av, az), ac in self._terms.items()})

    def subs_v1(self) -> Laurent2:
        """Set ``v = 1``; the result only has ``dv == 0`` terms."""
        return Laurent2(((0, dz), c) for (_, dz), c in self._terms.items())

    def evaluate(self, v, z):
        """Evaluate at values supporting ``**`` with negative exponents (Fraction, sympy, ...)."""
        return sum((c * v**dv * z**dz for (dv, dz), c in self._terms.items()), 0)

    # -- rendering ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """``(dv, dz, c)`` triples in canonical order: ``dv`` then ``dz``, descending."""
        return [(dv, dz, self._terms[dv, dz])
                for dv, dz in sorted(self._terms, reverse=True)]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for dv, dz, c in self.sorted_terms():
            factors = [_power("v", dv), _power("z", dz)]
            factors = [f for f in factors if f]
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Laurent2({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"v": dv, "z": dz, "c": c} for dv, dz, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> Laurent2:
        return cls(((t["v"], t["z"]), t["c"]) for t in data["terms"])

    @classmethod
    def parse(cls, text: str) -> Laurent2:
        """Parse the canonical text rendering (also accepts any ordering of terms)."""
        s = re.sub(r"\s+", "", text)
        if s in ("", "0"):
            return cls.zero()
        if s[0] not in "+-":
            s = "+" + s
        terms: list[tuple[Exponents, int]] = []
        for m in re.finditer(r"([+-])([^+-]+)", s.replace("^-", "^~")):
            sign = -1 if m.group(1) == "-" else 1
            c, dv, dz = 1, 0, 0
            for factor in m.group(2).replace("~", "-").split("*"):
                if factor.isdigit():
                    c *= int(factor)
                    continue
                fm = re.fullmatch(r"([vz])(?:\^(-?\d+))?", factor)
                if fm is None:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                e = int(fm.group(2)) if fm.group(2) else 1
                if fm.group(1) == "v":
                    dv += e
                else:
                    dz += e
            terms.append(((dv, dz), sign * c))
        return cls(terms)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


# -- functional surface -------------------------------------------------------

def add(p: Laurent2, q: Laurent2) -> Laurent2:
    return p + q


def mul(p: Laurent2, q: Laurent2) -> Laurent2:
    return p * q


@lru_cache(maxsize=None)
def delta_power(k: int) -> Laurent2:
    """``delta**k`` where ``delta = (v^-1 - v) / z`` is the value of a split circle."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Laurent2.one()
    delta = Laurent2({(-1, -1): 1, (1, -1): -1})
    return delta_power(k - 1) * delta


def v_degree_bounds(p: Laurent2) -> tuple[int, int]:
    """Lowest and highest ``v`` exponents of a nonzero polynomial."""
    if p.is_zero():
        raise ZeroPolynomialError("zero polynomial has no v-degree")
    dvs = [dv for dv, _ in p._terms]
    return min(dvs), max(dvs)


def coeff_of_v(p: Laurent2, dv: int) -> Laurent2:
    """The coefficient of ``v^dv`` as a polynomial in ``z`` alone."""
    return Laurent2._wrap({(0, dz): c for (ev, dz), c in p._terms.items() if ev == dv})
