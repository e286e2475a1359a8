"""Cross-checking engine.

A :class:`CheckSpec` names a parameter record, a truncation order and two
routes; running it computes both series independently and compares them
coefficient by coefficient on the common known window.
"""

from __future__ import annotations

import enum
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Mapping, Sequence

from . import formulas, partitions, semigroup
from .formulas import LciParams
from .partitions import Partition, RsnParams
from .qseries import LaurentPoly, first_mismatch
from .semigroup import NumericalSemigroup, ResourceError


class HypothesisError(ValueError):
    """Parameters fall outside the hypotheses of the identity being checked."""


class Status(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    RESOURCE = "RESOURCE"


# routes ---------------------------------------------------------------------


def _spread_at_most(bound: int) -> Callable[[Partition], bool]:
    return lambda mu: mu.largest - mu.smallest <= bound


def _spread_equal(value: int) -> Callable[[Partition], bool]:
    return lambda mu: mu.largest - mu.smallest == value


def _enum_le(p: RsnParams, order: int) -> LaurentPoly:
    return partitions.series_from_enumeration(p, order, _spread_at_most(p.r - 1))


def _enum_r(p: RsnParams, order: int) -> LaurentPoly:
    return partitions.series_from_enumeration(p, order, _spread_equal(p.r))


def _enum_split_sum(p: RsnParams, order: int) -> LaurentPoly:
    return _enum_le(p, order) + _enum_r(p, order)


def _minimal_size_enum(p: RsnParams, order: int) -> LaurentPoly:
    return LaurentPoly.constant(partitions.minimal_size(p))


def _minimal_size_formula(p: RsnParams, order: int) -> LaurentPoly:
    k = p.s // p.n
    return LaurentPoly.constant(p.n * k * (k + 1) // 2)


def semigroup_of(params) -> NumericalSemigroup:
    if isinstance(params, LciParams):
        return semigroup.space_curve_semigroup(params)
    if isinstance(params, NumericalSemigroup):
        return params
    return semigroup.semigroup_new(params)


def _semigroup_oracle(params, order: int) -> LaurentPoly:
    S = semigroup_of(params).sized_for(order)
    return semigroup.hilb_series_oracle(S, order)


def _stabilization_window(gens, order: int) -> LaurentPoly:
    S = semigroup_of(gens)
    start = 2 * S.genus
    full = _semigroup_oracle(S, order)
    return LaurentPoly.from_dict({k: c for k, c in full.terms().items() if k >= start}, full.order)


def _stable_tail(gens, order: int) -> LaurentPoly:
    S = semigroup_of(gens)
    start = 2 * S.genus
    value = _semigroup_oracle(S, start).coeff(start)
    return LaurentPoly(start, (value,) * (order + 1 - start), order + 1)


def _lci_swapped(p: LciParams, order: int) -> LaurentPoly:
    return formulas.hilb_series_lci(LciParams(p.r, p.r - p.t, p.n), order)


@dataclass(frozen=True)
class Route:
    kind: str  # "rsn" | "minsize" | "lci" | "gens"
    compute: Callable


ROUTES: dict[str, Route] = {
    "closed_form": Route("rsn", formulas.Z_rsn_closed),
    "partition_enum": Route("rsn", partitions.series_from_enumeration),
    "flag_oracle": Route("rsn", semigroup.flag_series_oracle),
    "closed_le": Route("rsn", formulas.Z_le_part),
    "closed_r": Route("rsn", formulas.Z_r_part),
    "partition_enum_le": Route("rsn", _enum_le),
    "partition_enum_r": Route("rsn", _enum_r),
    "partition_enum_split": Route("rsn", _enum_split_sum),
    "minimal_size_enum": Route("minsize", _minimal_size_enum),
    "minimal_size_formula": Route("minsize", _minimal_size_formula),
    "lci_formula": Route("lci", formulas.hilb_series_lci),
    "lci_formula_swapped": Route("lci", _lci_swapped),
    "semigroup_oracle": Route("lci|gens", _semigroup_oracle),
    "stabilization_window": Route("stab", _stabilization_window),
    "stable_tail": Route("stab", _stable_tail),
}


def _kinds(route: str, routes: Mapping[str, Route]) -> set[str]:
    try:
        return set(routes[route].kind.split("|"))
    except KeyError:
        raise ValueError(f"unknown route {route!r}; known: {sorted(routes)}") from None


# specs ----------------------------------------------------------------------


@dataclass(frozen=True)
class CheckSpec:
    name: str
    params: Mapping
    order: int
    routes: tuple[str, str]
    force: bool = False

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))
        object.__setattr__(self, "routes", tuple(self.routes))

    @property
    def kind(self) -> str:
        shared = _kinds(self.routes[0], ROUTES) & _kinds(self.routes[1], ROUTES)
        if not shared:
            raise ValueError(f"routes {self.routes} compare different kinds of object")
        return sorted(shared)[0]

    def typed_params(self):
        kind, p = self.kind, self.params
        try:
            if kind in ("rsn", "minsize"):
                return RsnParams(int(p["r"]), int(p["s"]), int(p["n"]))
            if kind == "lci":
                return LciParams(int(p["r"]), int(p["t"]), int(p["n"]))
            return tuple(int(g) for g in p["gens"])
        except KeyError as exc:
            raise ValueError(f"check {self.name!r}: missing parameter {exc}") from None

    def hypothesis_violations(self) -> list[str]:
        kind, p = self.kind, self.typed_params()
        if kind == "rsn":
            return p.hypothesis_violations()
        if kind == "minsize":
            out = []
            if p.n < 2 or p.s % p.n or not 1 <= p.s // p.n < p.r:
                out.append(f"need s = n k with n >= 2 and 1 <= k < r, got {p.as_dict()}")
            if not p.s < p.r or math.gcd(p.r, p.s) != 1:
                out.append(f"need s < r and gcd(r,s) = 1, got {p.as_dict()}")
            return out
        if kind == "lci":
            out = p.hypothesis_violations()
            if "lci_formula_swapped" in self.routes and p.r - p.t < 2:
                out.append(f"swapped parameters need r - t >= 2, got r={p.r}, t={p.t}")
            return out
        S = semigroup.semigroup_new(p)
        if kind == "stab" and not self.order > 2 * S.genus:
            return [f"order {self.order} must exceed 2*genus = {2 * S.genus}"]
        return []

    def validate(self) -> bool:
        """Raise on malformed specs; return True when the supported hypotheses hold.

        With ``force`` set, hypothesis violations are tolerated and the check
        is labelled unsupported.
        """
        if len(self.routes) != 2 or self.routes[0] == self.routes[1]:
            raise ValueError(f"check {self.name!r} needs two distinct routes, got {self.routes}")
        if not isinstance(self.order, int) or self.order < 0:
            raise ValueError(f"check {self.name!r}: order must be a nonnegative integer")
        problems = self.hypothesis_violations()
        if problems and not self.force:
            raise HypothesisError(f"check {self.name!r}: " + "; ".join(problems))
        return not problems

    def capped(self, max_order: int) -> CheckSpec:
        """Shrink the comparison window to at most ``max_order`` exponents."""
        if self.kind == "stab":
            start = 2 * semigroup.semigroup_new(self.typed_params()).genus
            return replace(self, order=max(start + 1, min(self.order, start + max_order)))
        return replace(self, order=min(self.order, max_order))

    def to_json(self) -> dict:
        out = {"name": self.name, "params": dict(self.params), "order": self.order,
               "routes": list(self.routes)}
        if self.force:
            out["force"] = True
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> CheckSpec:
        if not isinstance(obj, Mapping):
            raise ValueError(f"check spec must be an object, got {obj!r}")
        try:
            return cls(str(obj["name"]), dict(obj["params"]), obj["order"],
                       tuple(obj["routes"]), bool(obj.get("force", False)))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed check spec {obj!r}: {exc}") from None


@dataclass
class VerificationReport:
    spec: CheckSpec
    status: Status
    lhs: LaurentPoly | None = None
    rhs: LaurentPoly | None = None
    first_mismatch: int | None = None
    elapsed: float = 0.0
    supported: bool = True
    message: str = ""

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def mismatch_coefficients(self) -> tuple[int, int] | None:
        if self.first_mismatch is None:
            return None
        return self.lhs.coeff(self.first_mismatch), self.rhs.coeff(self.first_mismatch)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "name": self.spec.name,
            "params": dict(self.spec.params),
            "order": self.spec.order,
            "status": self.status.value,
            "lhs": self.lhs.to_json() if self.lhs is not None else None,
            "rhs": self.rhs.to_json() if self.rhs is not None else None,
            "first_mismatch": self.first_mismatch,
            "elapsed_ms": round(self.elapsed * 1000, 3) if timing else None,
            "routes": list(self.spec.routes),
        }
        if self.first_mismatch is not None:
            out["mismatch_coefficients"] = [str(c) for c in self.mismatch_coefficients]
        if not self.supported:
            out["unsupported"] = True
        if self.message:
            out["message"] = self.message
        return out

    def line(self) -> str:
        tag = self.status.value + ("" if self.supported else " (UNSUPPORTED)")
        extra = ""
        if self.first_mismatch is not None:
            a, b = self.mismatch_coefficients
            extra = f"  first mismatch at q^{self.first_mismatch}: {a} != {b}"
        elif self.message:
            extra = "  " + self.message
        params = ",".join(f"{k}={v}" for k, v in self.spec.params.items())
        return (f"{tag:<8} {self.spec.name:<36} {params:<20} order={self.spec.order:<3}"
                f" {self.spec.routes[0]} vs {self.spec.routes[1]}{extra}")


def compare(a: LaurentPoly, b: LaurentPoly) -> int | None:
    return first_mismatch(a, b)


def run_check(spec: CheckSpec, routes: Mapping[str, Route] | None = None) -> VerificationReport:
    routes = ROUTES if routes is None else routes
    supported = spec.validate()
    params = spec.typed_params()
    start = time.perf_counter()
    try:
        lhs = routes[spec.routes[0]].compute(params, spec.order)
        rhs = routes[spec.routes[1]].compute(params, spec.order)
    except ResourceError as exc:
        return VerificationReport(spec, Status.RESOURCE, elapsed=time.perf_counter() - start,
                                  supported=supported, message=str(exc))
    elapsed = time.perf_counter() - start
    window = min(lhs.order, rhs.order)
    if window < spec.order + 1:
        return VerificationReport(spec, Status.RESOURCE, lhs, rhs, elapsed=elapsed,
                                  supported=supported,
                                  message=f"known window stops at q^{window} before q^{spec.order + 1}")
    miss = compare(lhs, rhs)
    status = Status.PASS if miss is None else Status.FAIL
    return VerificationReport(spec, status, lhs, rhs, miss, elapsed, supported)


def run_suite(specs: Sequence[CheckSpec], workers: int = 1,
              routes: Mapping[str, Route] | None = None) -> list[VerificationReport]:
    """Run every check (no short-circuit); reports come back in spec order."""
    for spec in specs:
        spec.validate()
    if workers > 1 and routes is None and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run_check, specs))
    return [run_check(spec, routes) for spec in specs]


def all_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(r.passed for r in reports)


def render_table(reports: Sequence[VerificationReport]) -> str:
    lines = [r.line() for r in reports]
    n_pass = sum(r.passed for r in reports)
    lines.append(f"{n_pass}/{len(reports)} checks passed")
    return "\n".join(lines)


# named drivers --------------------------------------------------------------


def _run(specs: list[CheckSpec]) -> list[VerificationReport]:
    return run_suite(specs)


def plus_curve_specs(p: RsnParams, order: int, flag_order: int | None = None,
                     force: bool = False) -> list[CheckSpec]:
    fo = order if flag_order is None else min(order, flag_order)
    tag = f"plus_curve[{p.r},{p.s},{p.n}]"
    params = p.as_dict()
    return [
        CheckSpec(f"{tag}:closed=enum", params, order, ("closed_form", "partition_enum"), force),
        CheckSpec(f"{tag}:closed=flag", params, fo, ("closed_form", "flag_oracle"), force),
        CheckSpec(f"{tag}:enum=flag", params, fo, ("partition_enum", "flag_oracle"), force),
    ]


def verify_plus_curve(p: RsnParams, order: int, force: bool = False) -> list[VerificationReport]:
    return _run(plus_curve_specs(p, order, force=force))


def decomposition_specs(p: RsnParams, order: int, force: bool = False) -> list[CheckSpec]:
    tag = f"decomposition[{p.r},{p.s},{p.n}]"
    params = p.as_dict()
    return [
        CheckSpec(f"{tag}:le", params, order, ("closed_le", "partition_enum_le"), force),
        CheckSpec(f"{tag}:eq_r", params, order, ("closed_r", "partition_enum_r"), force),
    ]


def verify_decomposition(p: RsnParams, order: int, force: bool = False) -> list[VerificationReport]:
    return _run(decomposition_specs(p, order, force))


def lci_spec(p: LciParams, order: int, force: bool = False) -> CheckSpec:
    return CheckSpec(f"lci[{p.r},{p.t},{p.n}]", p.as_dict(), order,
                     ("lci_formula", "semigroup_oracle"), force)


def verify_lci(p: LciParams, order: int, force: bool = False) -> VerificationReport:
    return run_check(lci_spec(p, order, force))


def minimal_size_spec(p: RsnParams, force: bool = False) -> CheckSpec:
    return CheckSpec(f"minimal_size[{p.r},{p.s},{p.n}]", p.as_dict(), 0,
                     ("minimal_size_enum", "minimal_size_formula"), force)


def verify_minimal_size(p: RsnParams, force: bool = False) -> VerificationReport:
    return run_check(minimal_size_spec(p, force))


def stabilization_spec(gens: Sequence[int], order: int, force: bool = False) -> CheckSpec:
    label = ",".join(map(str, gens))
    return CheckSpec(f"stabilization<{label}>", {"gens": list(gens)}, order,
                     ("stabilization_window", "stable_tail"), force)


def verify_stabilization(gens: Sequence[int], order: int, force: bool = False) -> VerificationReport:
    return run_check(stabilization_spec(gens, order, force))


def symmetry_spec(p: LciParams, order: int) -> CheckSpec:
    return CheckSpec(f"lci_swap[{p.r},{p.t},{p.n}]", p.as_dict(), order,
                     ("lci_formula", "lci_formula_swapped"))


# default suite --------------------------------------------------------------

LCI_GRID = [(5, 2, 2), (5, 3, 2), (7, 2, 3), (7, 3, 2), (9, 2, 2)]
STABILIZATION_GENS = [(2, 3), (4, 5), (4, 5, 6)]


def plus_curve_grid(max_r: int = 9) -> list[RsnParams]:
    return [RsnParams(r, s, n)
            for r in range(2, max_r + 1) for s in range(2, r) for n in range(2, s)
            if math.gcd(r, s) == 1]


def minimal_size_grid(max_r: int = 9) -> list[RsnParams]:
    return [RsnParams(r, n * k, n)
            for r in range(2, max_r + 1) for n in range(2, r) for k in range(1, r)
            if n * k < r and math.gcd(r, n * k) == 1]


def default_suite() -> list[CheckSpec]:
    """Every series identity in the acceptance list, at desk-scale orders."""
    specs: list[CheckSpec] = []
    for p in plus_curve_grid():
        specs += plus_curve_specs(p, 12)
    for p in (RsnParams(5, 4, 2), RsnParams(7, 5, 2)):
        specs += decomposition_specs(p, 10)
        specs.append(CheckSpec(f"decomposition[{p.r},{p.s},{p.n}]:split", p.as_dict(), 10,
                               ("partition_enum_split", "partition_enum")))
    for t in LCI_GRID:
        specs.append(lci_spec(LciParams(*t), 8))
    for p in minimal_size_grid():
        specs.append(minimal_size_spec(p))
    gens_list = list(STABILIZATION_GENS)
    gens_list += [semigroup.space_curve_semigroup(LciParams(*t)).generators for t in LCI_GRID]
    for gens in gens_list:
        genus = semigroup.semigroup_new(gens).genus
        specs.append(stabilization_spec(gens, 2 * genus + 4))
    specs.append(symmetry_spec(LciParams(5, 2, 2), 8))
    return specs
