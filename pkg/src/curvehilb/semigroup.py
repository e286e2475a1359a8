"""Numerical semigroups and brute-force enumeration of monomial ideals.

A torus-fixed ideal of the monomial curve with value semigroup S is spanned by
t^g for g in a cofinite S-module Gamma.  It is stored through its finite
complement Delta = S minus Gamma, which is closed under subtracting generators
(staying inside S).  Counting these complements by size gives the Euler
characteristics of the punctual Hilbert schemes; counting nested pairs with a
quotient killed by x and w^n gives those of the Flag Hilbert schemes.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterator, Sequence

from .formulas import LciParams
from .partitions import RsnParams
from .qseries import LaurentPoly

MAX_TABLE = 2_000_000


class ResourceError(RuntimeError):
    """The search would need more room than the table (or the hard cap) allows."""


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    generators: tuple[int, ...]
    membership: tuple[bool, ...]
    conductor: int
    genus: int

    @property
    def bound(self) -> int:
        return len(self.membership)

    @property
    def gaps(self) -> list[int]:
        return [g for g in range(self.conductor) if not self.membership[g]]

    @property
    def multiplicity(self) -> int:
        return min(self.generators)

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return self.membership[x]

    def elements(self, stop: int) -> list[int]:
        return [x for x in range(min(stop, self.bound)) if self.membership[x]]

    def search_bound(self, colength: int) -> int:
        """Every complement of size ``colength`` lies below this value."""
        return self.conductor + colength * self.multiplicity + 1

    def with_bound(self, bound: int) -> NumericalSemigroup:
        return semigroup_new(self.generators, bound - self.conductor)

    def sized_for(self, colength: int) -> NumericalSemigroup:
        """This semigroup with a table large enough for complements of ``colength``."""
        need = self.search_bound(colength)
        return self if need <= self.bound else self.with_bound(need)

    def summary(self) -> dict:
        return {"generators": list(self.generators), "conductor": self.conductor,
                "genus": self.genus, "gaps": self.gaps}

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return (self.conductor == other.conductor and self.gaps == other.gaps)

    def __hash__(self) -> int:
        return hash((self.conductor, tuple(self.gaps)))

    def __repr__(self) -> str:
        return f"<{','.join(map(str, self.generators))}>"


def semigroup_new(generators: Sequence[int], bound_hint: int = 0) -> NumericalSemigroup:
    gens = tuple(int(g) for g in generators)
    if not gens or any(g < 1 for g in gens):
        raise ValueError(f"generators must be positive integers, got {list(generators)}")
    if reduce(math.gcd, gens) != 1:
        raise ValueError(f"gcd{gens} != 1: the value semigroup would have infinitely many gaps")
    # a run of min(gens) consecutive members marks the conductor
    a = min(gens)
    member = [True]
    run, x, conductor = 1, 0, 0
    while run < a:
        x += 1
        ok = any(x >= g and member[x - g] for g in gens)
        member.append(ok)
        if ok:
            run += 1
        else:
            run, conductor = 0, x + 1
    size = conductor + max(int(bound_hint), 0) + 1
    if size > MAX_TABLE:
        raise ResourceError(f"membership table of size {size} exceeds cap {MAX_TABLE}")
    member = member[:conductor] + [True] * (size - conductor)
    genus = conductor - sum(member[:conductor])
    return NumericalSemigroup(gens, tuple(member), conductor, genus)


def plane_curve_semigroup(r: int, s: int, bound_hint: int = 0) -> NumericalSemigroup:
    """Value semigroup of x^r = w^s: x -> t^s, w -> t^r."""
    return semigroup_new((r, s), bound_hint)


def space_curve_semigroup(p: LciParams, bound_hint: int = 0) -> NumericalSemigroup:
    """Value semigroup of xv = w^n, x^(r-t) = v^t: x -> t^(tn), v -> t^((r-t)n), w -> t^r."""
    return semigroup_new((p.t * p.n, (p.r - p.t) * p.n, p.r), bound_hint)


# staircases -----------------------------------------------------------------


def is_module_complement(S: NumericalSemigroup, delta) -> bool:
    delta = set(delta)
    if delta and 0 not in delta:
        return False
    for d in delta:
        if d not in S:
            return False
        for g in S.generators:
            if (d - g) in S and (d - g) not in delta:
                return False
    return True


def _require_room(S: NumericalSemigroup, colength: int):
    need = S.search_bound(colength)
    if need > S.bound:
        raise ResourceError(
            f"table for {S!r} stops at {S.bound}, complements of size {colength} need {need}")


def iter_staircases(S: NumericalSemigroup, max_colength: int) -> Iterator[tuple[int, ...]]:
    """Every complement Delta with |Delta| <= max_colength, as a sorted tuple.

    Elements are added in increasing order and only when all their
    predecessors (d - g in S) are present, so each Delta arises exactly once.
    Candidates range over the whole membership table.
    """
    _require_room(S, max_colength)
    elements = S.elements(S.bound)
    gens = S.generators
    delta: list[int] = []
    present: set[int] = set()

    def addable(e: int) -> bool:
        for g in gens:
            d = e - g
            if d >= 0 and S.membership[d] and d not in present:
                return False
        return True

    def walk(start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(delta)
        if len(delta) == max_colength:
            return
        top = delta[-1] if delta else -1
        for i in range(start, len(elements)):
            e = elements[i]
            # every predecessor of e is < e, and a useful e is at most top + max gen away
            if delta and e > top + max(gens):
                break
            if not delta and e != 0:
                break
            if addable(e):
                delta.append(e)
                present.add(e)
                yield from walk(i + 1)
                delta.pop()
                present.discard(e)

    yield from walk(0)


def count_staircases_by_colength(S: NumericalSemigroup, max_colength: int) -> list[int]:
    counts = [0] * (max_colength + 1)
    for delta in iter_staircases(S, max_colength):
        counts[len(delta)] += 1
    return counts


def count_staircases(S: NumericalSemigroup, colength: int) -> int:
    if colength < 0:
        raise ValueError("colength must be nonnegative")
    return count_staircases_by_colength(S, colength)[colength]


def hilb_series_oracle(S: NumericalSemigroup, order: int) -> LaurentPoly:
    """Sum over l <= order of #(complements of size l) q^l."""
    counts = count_staircases_by_colength(S, order)
    return LaurentPoly(0, tuple(counts), order + 1)


# flags ----------------------------------------------------------------------


@dataclass(frozen=True)
class FlagPair:
    """Gamma_1 inside Gamma_2, stored through their complements (delta2 inside delta1)."""

    delta1: tuple[int, ...]
    delta2: tuple[int, ...]

    @property
    def quotient(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.delta1) - set(self.delta2)))

    @property
    def k(self) -> int:
        return len(self.delta2)


def plane_curve_weights(p: RsnParams) -> dict[str, int]:
    """t-valuations of the coordinates of x^r = w^s."""
    return {"x": p.s, "w": p.r}


def iter_flag_pairs(p: RsnParams, max_k: int,
                    S: NumericalSemigroup | None = None) -> Iterator[FlagPair]:
    """Flags with colength(Gamma_2) <= max_k and Gamma_2 / Gamma_1 of length s
    killed by x and by w^n."""
    weights = plane_curve_weights(p)
    x_shift, wn_shift = weights["x"], p.n * weights["w"]
    length = p.s
    if S is None:
        S = plane_curve_semigroup(p.r, p.s).sized_for(max_k + length)
    for delta1 in iter_staircases(S, max_k + length):
        if len(delta1) < length:
            continue
        inside = set(delta1)
        killed = [g for g in delta1 if g + x_shift not in inside and g + wn_shift not in inside]
        for box in combinations(killed, length):
            rest = inside.difference(box)
            if is_module_complement(S, rest):
                yield FlagPair(delta1, tuple(sorted(rest)))


def count_flag_pairs(p: RsnParams, k: int, S: NumericalSemigroup | None = None) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(1 for f in iter_flag_pairs(p, k, S) if f.k == k)


def flag_series_oracle(p: RsnParams, order: int, S: NumericalSemigroup | None = None) -> LaurentPoly:
    if math.gcd(p.r, p.s) != 1:
        raise ValueError(f"gcd({p.r},{p.s}) != 1")
    counts = Counter(f.k for f in iter_flag_pairs(p, order, S))
    return LaurentPoly.from_dict(counts, order + 1)
