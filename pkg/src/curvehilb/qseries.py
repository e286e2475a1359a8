"""Exact integer Laurent polynomials in q with an explicit truncation order.

A :class:`LaurentPoly` knows every coefficient of ``q**k`` for ``k < order``;
``order == EXACT`` (``math.inf``) marks an honest polynomial.  Everything above
the order is unknown, and arithmetic tracks how far knowledge extends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

EXACT = math.inf


class TruncationError(ValueError):
    """Raised when asking for a coefficient past the known window."""


def _valuation(p: LaurentPoly) -> float:
    # everything below the order is zero for a zero series
    return p.offset if p.coeffs else p.order


@dataclass(frozen=True)
class LaurentPoly:
    offset: int = 0
    coeffs: tuple[int, ...] = ()
    order: float = EXACT

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        offset = int(self.offset)
        order = self.order
        if order != EXACT:
            order = int(order)
            keep = max(0, min(len(coeffs), order - offset))
            del coeffs[keep:]
        lo = 0
        while lo < len(coeffs) and coeffs[lo] == 0:
            lo += 1
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        coeffs = coeffs[lo:hi]
        offset = offset + lo if coeffs else 0
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", order)

    # construction ---------------------------------------------------------

    @classmethod
    def from_dict(cls, terms: Mapping[int, int], order: float = EXACT) -> LaurentPoly:
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls(0, (), order)
        lo, hi = min(terms), max(terms)
        return cls(lo, tuple(terms.get(k, 0) for k in range(lo, hi + 1)), order)

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls(exponent, (coefficient,))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def zero(cls, order: float = EXACT) -> LaurentPoly:
        return cls(0, (), order)

    # inspection -----------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.order == EXACT

    @property
    def valuation(self) -> float:
        return _valuation(self)

    @property
    def degree(self) -> int | None:
        return self.offset + len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int) -> int:
        if k >= self.order:
            raise TruncationError(f"coefficient of q^{k} unknown at truncation order {self.order}")
        i = k - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self) -> dict[int, int]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    def coefficients(self, start: int, stop: int) -> list[int]:
        """Coefficients for exponents ``start <= k < stop`` (all must be known)."""
        return [self.coeff(k) for k in range(start, stop)]

    def __call__(self, q):
        if not self.is_exact:
            raise TruncationError("cannot evaluate a truncated series")
        return sum(c * q ** (self.offset + i) for i, c in enumerate(self.coeffs))

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if not other.coeffs:
            return LaurentPoly(self.offset, self.coeffs, min(self.order, other.order))
        if not self.coeffs:
            return LaurentPoly(other.offset, other.coeffs, min(self.order, other.order))
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.offset - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset - lo + i] += c
        return LaurentPoly(lo, tuple(out), min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.offset, tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        order = min(self.order + _valuation(other), other.order + _valuation(self))
        if not self.coeffs or not other.coeffs:
            return LaurentPoly(0, (), order)
        a, b = self.coeffs, other.coeffs
        offset = self.offset + other.offset
        size = len(a) + len(b) - 1
        if order != EXACT:
            size = max(0, min(size, int(order) - offset))
        out = [0] * size
        for i, x in enumerate(a):
            if not x:
                continue
            for j in range(min(len(b), size - i)):
                out[i + j] += x * b[j]
        return LaurentPoly(offset, tuple(out), order)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result, base = LaurentPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k`` (moves the known window too)."""
        return LaurentPoly(self.offset + k, self.coeffs, self.order + k)

    def truncate(self, order: float) -> LaurentPoly:
        return LaurentPoly(self.offset, self.coeffs, min(self.order, order))

    def agrees_with(self, other: LaurentPoly) -> bool:
        """Equality on the common known window."""
        return first_mismatch(self, other) is None

    # serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "offset": self.offset,
            "coeffs": [str(c) for c in self.coeffs],
            "order": None if self.is_exact else int(self.order),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> LaurentPoly:
        order = obj.get("order")
        return cls(int(obj["offset"]), tuple(int(c) for c in obj["coeffs"]),
                   EXACT if order is None else int(order))

    def __str__(self) -> str:
        parts = []
        for k, c in sorted(self.terms().items()):
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        if not self.is_exact:
            body += f" + O(q^{int(self.order)})"
        return body


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_sum(items: Iterable[LaurentPoly], order: float = EXACT) -> LaurentPoly:
    total = LaurentPoly.zero(order)
    for p in items:
        total = total + p
    return total


def coeff(p: LaurentPoly, k: int) -> int:
    return p.coeff(k)


def geom_expand(a: int, order: int) -> LaurentPoly:
    """``1/(1 - q**a)`` expanded through ``q**order`` inclusive."""
    if a < 1:
        raise ValueError(f"1 - q^{a} is not invertible as a power series")
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = [0] * (order + 1)
    for k in range(0, order + 1, a):
        coeffs[k] = 1
    return LaurentPoly(0, tuple(coeffs), order + 1)


def first_mismatch(a: LaurentPoly, b: LaurentPoly) -> int | None:
    """Smallest exponent below both orders where ``a`` and ``b`` differ."""
    diff = (a - b).terms()
    return min(diff) if diff else None


def stabilization_check(p: LaurentPoly, start: int) -> bool:
    """True iff the coefficients of ``p`` are constant on ``[start, p.order)``."""
    if start >= p.order:
        raise TruncationError("stabilization window is empty")
    if p.is_exact:
        # an exact polynomial is eventually zero
        return all(c == 0 for k, c in p.terms().items() if k >= start)
    values = set(p.coefficients(start, int(p.order)))
    return len(values) <= 1


class BivariatePoly:
    """Polynomial in x whose coefficients are :class:`LaurentPoly` in q."""

    __slots__ = ("x_coeffs",)

    def __init__(self, x_coeffs: Sequence[LaurentPoly]):
        xs = list(x_coeffs)
        if xs:
            order = min(p.order for p in xs)
            xs = [p.truncate(order) for p in xs]
        while xs and not xs[-1].coeffs:
            if len(xs) == 1:
                break
            xs.pop()
        if len(xs) == 1 and not xs[0].coeffs and xs[0].is_exact:
            xs = []
        self.x_coeffs: tuple[LaurentPoly, ...] = tuple(xs)

    @property
    def order(self) -> float:
        return min((p.order for p in self.x_coeffs), default=EXACT)

    @property
    def degree(self) -> int:
        return len(self.x_coeffs) - 1

    def x_coeff(self, k: int) -> LaurentPoly:
        if 0 <= k < len(self.x_coeffs):
            return self.x_coeffs[k]
        return LaurentPoly.zero(self.order)

    def __mul__(self, other: BivariatePoly) -> BivariatePoly:
        if not self.x_coeffs or not other.x_coeffs:
            return BivariatePoly([LaurentPoly.zero(min(self.order, other.order))])
        out = [LaurentPoly.zero() for _ in range(len(self.x_coeffs) + len(other.x_coeffs) - 1)]
        for i, a in enumerate(self.x_coeffs):
            for j, b in enumerate(other.x_coeffs):
                out[i + j] = out[i + j] + a * b
        return BivariatePoly(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.x_coeffs == other.x_coeffs

    def __call__(self, q, x):
        return sum(p(q) * x**i for i, p in enumerate(self.x_coeffs))

    def __repr__(self) -> str:
        return "BivariatePoly(" + ", ".join(f"x^{i}: {p}" for i, p in enumerate(self.x_coeffs)) + ")"


def bv_mul(a: BivariatePoly, b: BivariatePoly) -> BivariatePoly:
    return a * b
