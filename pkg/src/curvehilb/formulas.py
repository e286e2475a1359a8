"""Closed-form generating functions.

``Z_tm`` is the product over i = 1..t of (1 + x q^i + ... + (x q^i)^m), the
bivariate generating function of P(t,m) by length (x) and size (q).

``Z_rsn_closed`` is

    1/(1 - q^s) * sum_{m=0}^{n-1} sum_{k=s-n}^{s-m-1} q^{m r} Z^{(k)}_{r-1,n}(q)

which counts P(r,s,n) with weight q^{|mu| - s}.  The m = 0 slice counts the
members whose spread is at most r - 1, the m >= 1 slices those with spread
exactly r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .partitions import RsnParams
from .qseries import EXACT, BivariatePoly, LaurentPoly, geom_expand, lp_sum


@dataclass(frozen=True)
class LciParams:
    """(r, t, n) for the space curve xv = w^n, x^(r-t) = v^t."""

    r: int
    t: int
    n: int

    @property
    def s(self) -> int:
        return self.t * self.n

    @property
    def shift(self) -> int:
        """n t (t-1) / 2, the exponent offset between the two sides."""
        return self.n * self.t * (self.t - 1) // 2

    @property
    def rsn(self) -> RsnParams:
        return RsnParams(self.r, self.s, self.n)

    def hypothesis_violations(self) -> list[str]:
        out = []
        if min(self.r, self.t, self.n) < 2:
            out.append(f"need r, t, n >= 2, got ({self.r},{self.t},{self.n})")
        if not self.r > self.t:
            out.append(f"need r > t, got r={self.r}, t={self.t}")
        if math.gcd(self.r, self.n * self.t) != 1:
            out.append(f"need gcd(r, n t) = 1, got gcd({self.r},{self.n * self.t})")
        return out

    @property
    def satisfies_hypotheses(self) -> bool:
        return not self.hypothesis_violations()

    def as_dict(self) -> dict:
        return {"r": self.r, "t": self.t, "n": self.n}


def _q_order(order: int | None) -> float:
    return EXACT if order is None else order + 1


def Z_tm(t: int, m: int, order: int | None = None) -> BivariatePoly:
    """Product formula for P(t,m); q known through ``q**order`` (None = exact)."""
    qo = _q_order(order)
    result = BivariatePoly([LaurentPoly.constant(1).truncate(qo)])
    for i in range(1, t + 1):
        factor = BivariatePoly([LaurentPoly.monomial(i * j).truncate(qo) for j in range(m + 1)])
        result = result * factor
    return result


@lru_cache(maxsize=None)
def _Z_tm_cached(t: int, m: int, order: int | None) -> BivariatePoly:
    return Z_tm(t, m, order)


def Z_tm_coeff(t: int, m: int, k: int, order: int | None = None) -> LaurentPoly:
    """Coefficient of ``x**k`` in :func:`Z_tm`."""
    if k < 0:
        return LaurentPoly.zero(_q_order(order))
    return _Z_tm_cached(t, m, order).x_coeff(k)


def _check_range(p: RsnParams):
    if p.s <= p.n:
        raise ValueError(f"closed form needs s > n, got s={p.s}, n={p.n}")


def _slice(p: RsnParams, m: int, order: int) -> LaurentPoly:
    # inner index clamped at 0; inert when s > n
    inner = lp_sum((Z_tm_coeff(p.r - 1, p.n, k, order)
                    for k in range(max(p.s - p.n, 0), p.s - m)), _q_order(order))
    return (inner * geom_expand(p.s, order)).shift(m * p.r).truncate(order + 1)


def Z_le_part(p: RsnParams, order: int) -> LaurentPoly:
    """Members with spread <= r - 1 (the m = 0 slice)."""
    _check_range(p)
    return _slice(p, 0, order)


def Z_r_part(p: RsnParams, order: int) -> LaurentPoly:
    """Members with spread exactly r (slices m = 1 .. n-1)."""
    _check_range(p)
    return lp_sum((_slice(p, m, order) for m in range(1, p.n)), order + 1)


def Z_rsn_closed(p: RsnParams, order: int) -> LaurentPoly:
    """Z_{r,s,n}(q) known through ``q**order``."""
    _check_range(p)
    return lp_sum((_slice(p, m, order) for m in range(p.n)), order + 1)


def hilb_series_lci(p: LciParams, order: int) -> LaurentPoly:
    """Predicted punctual Hilbert series of the space curve, lengths 0..order."""
    z = Z_rsn_closed(p.rsn, order + p.shift)
    return z.shift(-p.shift)
