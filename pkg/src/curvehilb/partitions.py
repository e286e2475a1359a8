"""Constrained partitions P(r,s,n) and P(t,m), their enumerators and series.

P(r,s,n): exactly s parts, each value used at most n times, largest minus
smallest part at most r, and when that spread equals r the multiplicity of the
largest part plus that of the smallest is at most n.

P(t,m): parts at most t, each value used at most m times (the empty partition
included).
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .qseries import LaurentPoly


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @classmethod
    def from_unsorted(cls, parts: Iterable[int]) -> Partition:
        return cls(tuple(sorted((p for p in parts if p), reverse=True)))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> int:
        return self.parts[-1] if self.parts else 0

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class RsnParams:
    r: int
    s: int
    n: int

    def __post_init__(self):
        if min(self.r, self.s, self.n) < 1:
            raise ValueError(f"r, s, n must be positive, got {self}")

    @property
    def satisfies_hypotheses(self) -> bool:
        """r > s > n >= 2 with r, s coprime."""
        return self.r > self.s > self.n >= 2 and math.gcd(self.r, self.s) == 1

    def hypothesis_violations(self) -> list[str]:
        out = []
        if not self.r > self.s > self.n >= 2:
            out.append(f"need r > s > n >= 2, got (r,s,n)=({self.r},{self.s},{self.n})")
        if math.gcd(self.r, self.s) != 1:
            out.append(f"need gcd(r,s) = 1, got gcd({self.r},{self.s}) = {math.gcd(self.r, self.s)}")
        return out

    def as_dict(self) -> dict:
        return {"r": self.r, "s": self.s, "n": self.n}


def is_member_rsn(mu: Partition, p: RsnParams) -> bool:
    if mu.length != p.s:
        return False
    mult = mu.multiplicities()
    if max(mult.values()) > p.n:
        return False
    spread = mu.largest - mu.smallest
    if spread > p.r:
        return False
    if spread == p.r and mult[mu.largest] + mult[mu.smallest] > p.n:
        return False
    return True


def is_member_tm(nu: Partition, t: int, m: int) -> bool:
    if not nu.parts:
        return True
    return nu.largest <= t and max(nu.multiplicities().values()) <= m


def _rsn_raw(p: RsnParams, budget: int) -> Iterator[tuple[int, ...]]:
    """Members of P(r,s,n) with |mu| - s <= budget, yielded smallest row first."""
    s, n, r = p.s, p.n, p.r
    cap = budget + s
    rows: list[int] = []

    def grow(total: int, run: int) -> Iterator[tuple[int, ...]]:
        left = s - len(rows)
        if left == 0:
            mu = tuple(reversed(rows))
            spread = mu[0] - mu[-1]
            if spread == r and mu.count(mu[0]) + mu.count(mu[-1]) > n:
                return
            yield mu
            return
        last = rows[-1]
        lo = last if run < n else last + 1
        hi = rows[0] + r
        for v in range(lo, hi + 1):
            # remaining rows are all >= v
            if total + v * left > cap:
                break
            rows.append(v)
            yield from grow(total + v, run + 1 if v == last else 1)
            rows.pop()

    for smallest in range(1, cap // s + 1):
        rows.append(smallest)
        yield from grow(smallest, 1)
        rows.pop()


def enumerate_rsn(p: RsnParams, budget: int) -> list[Partition]:
    """All members with ``|mu| - s <= budget``, lexicographic on parts."""
    if budget < 0:
        return []
    return [Partition(mu) for mu in sorted(_rsn_raw(p, budget))]


def series_from_enumeration(p: RsnParams, order: int,
                            keep: Callable[[Partition], bool] | None = None) -> LaurentPoly:
    """Sum of ``q**(|mu| - s)`` over members, known through ``q**order``.

    ``keep`` optionally filters the members that contribute.
    """
    counts: Counter = Counter()
    for mu in _rsn_raw(p, order):
        if keep is None or keep(Partition(mu)):
            counts[sum(mu) - p.s] += 1
    return LaurentPoly.from_dict(counts, order + 1)


def minimal_size(p: RsnParams) -> int:
    # a member with smallest part 1 exists whenever any member exists, and it
    # has all parts <= r + 1, so |mu| - s <= s*r bounds the search
    for budget in range(0, p.s * p.r + 1):
        sizes = [sum(mu) for mu in _rsn_raw(p, budget)]
        if sizes:
            return min(sizes)
    raise ValueError(f"P{(p.r, p.s, p.n)} is empty")


def enumerate_tm(t: int, m: int) -> list[Partition]:
    """All of P(t,m) in canonical order (by size, then lexicographic)."""
    out: list[Partition] = []

    def build(value: int, acc: list[int]):
        if value == 0:
            out.append(Partition(tuple(acc)))
            return
        for k in range(m + 1):
            build(value - 1, acc + [value] * k)

    build(t, [])
    out.sort(key=lambda nu: (nu.size, nu.parts))
    return out


class Tag(enum.Enum):
    LE_R_MINUS_1 = "LE_R_MINUS_1"
    EQ_R = "EQ_R"


@dataclass(frozen=True)
class Decomposition:
    """mu = (height x width rectangle) + (m rows of length r) + rho, stacked."""

    tag: Tag
    height: int
    width: int
    m: int
    rho: Partition = field(default_factory=Partition)
    full_row: int = 0

    def reassemble(self) -> Partition:
        extra = [self.full_row] * self.m + list(self.rho.parts)
        extra += [0] * (self.height - len(extra))
        return Partition(tuple(self.width + e for e in extra))


def classify_decomposition(mu: Partition, p: RsnParams) -> Decomposition:
    if not is_member_rsn(mu, p):
        raise ValueError(f"{mu} is not in P{(p.r, p.s, p.n)}")
    width = mu.smallest
    shifted = [v - width for v in mu.parts]
    if mu.largest - mu.smallest == p.r:
        m = shifted.count(p.r)
        rho = Partition(tuple(v for v in shifted[m:] if v))
        return Decomposition(Tag.EQ_R, p.s, width, m, rho, full_row=p.r)
    rho = Partition(tuple(v for v in shifted if v))
    return Decomposition(Tag.LE_R_MINUS_1, p.s, width, 0, rho, full_row=p.r)
