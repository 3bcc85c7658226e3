"""Scan moduli with the mod-8 check and close the passing set under a -> a*k**2."""

from __future__ import annotations

import enum
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, List, Mapping, Optional, Tuple, Union

from .arith import check_natural, isqrt
from .residues import ResidueSet, unique_representatives
from .theorem import mod8_witness_check, resolve_workers

log = logging.getLogger(__name__)


class Status(str, enum.Enum):
    METHOD_PASS = "method_pass"
    METHOD_FAIL = "method_fail"
    ASSUMED = "assumed"
    CLOSURE_DERIVED = "closure_derived"


# merge priority when a modulus is reached several ways
_RANK = {Status.METHOD_PASS: 3, Status.CLOSURE_DERIVED: 2, Status.ASSUMED: 1}


@dataclass(frozen=True)
class ScanEntry:
    a: int
    status: Status
    r_set: ResidueSet
    blocking_class: Optional[int] = None
    base: Optional[int] = None
    k: Optional[int] = None

    def describe(self) -> str:
        if self.status is Status.METHOD_FAIL:
            return f"method_fail (blocking class {self.blocking_class})"
        if self.status is Status.CLOSURE_DERIVED:
            return f"closure_derived ({self.base} * {self.k}^2)"
        return self.status.value

    def to_dict(self) -> dict:
        d = {"a": self.a, "status": self.status.value, "r_set": list(self.r_set.elements)}
        if self.status is Status.METHOD_FAIL:
            d["blocking_class"] = self.blocking_class
        if self.status is Status.CLOSURE_DERIVED:
            d["base"], d["k"] = self.base, self.k
        return d


@dataclass(frozen=True)
class ScanReport:
    bound: int
    entries: Tuple[ScanEntry, ...]

    @property
    def moduli(self) -> List[int]:
        return [e.a for e in self.entries]

    def with_status(self, *statuses: Status) -> List[int]:
        return [e.a for e in self.entries if e.status in statuses]

    def __getitem__(self, a: int) -> ScanEntry:
        for e in self.entries:
            if e.a == a:
                return e
        raise KeyError(a)

    def to_dict(self) -> dict:
        return {"bound": self.bound, "entries": [e.to_dict() for e in self.entries]}


def _classify(a: int) -> ScanEntry:
    rs = unique_representatives(a)
    verdict = mod8_witness_check(a, rs)
    if verdict.passed:
        return ScanEntry(a, Status.METHOD_PASS, rs)
    # an empty R-set blocks every class, the least being 0
    blocking = 0 if verdict.blocking_class is None else verdict.blocking_class
    return ScanEntry(a, Status.METHOD_FAIL, rs, blocking_class=blocking)


def scan_moduli(a_min: int, a_max: int, workers: Optional[int] = None) -> ScanReport:
    check_natural(a_min, "a_min")
    check_natural(a_max, "a_max")
    if not 1 <= a_min <= a_max:
        raise ValueError(f"need 1 <= a_min <= a_max, got {a_min}..{a_max}")
    workers = resolve_workers(workers)
    moduli = range(a_min, a_max + 1)
    if workers == 1 or len(moduli) < 64:
        entries = [_classify(a) for a in moduli]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_classify, moduli, chunksize=16))
    return ScanReport(a_max, tuple(entries))


Seeds = Union[Mapping[int, Status], Iterable[Tuple[int, Status]]]


def closure_list(seeds: Seeds, bound: int) -> ScanReport:
    """Every ``a * k**2 <= bound`` over the seeds, with provenance.

    Derived moduli record the smallest base, then the smallest k >= 2.
    """
    check_natural(bound, "bound")
    items = list(seeds.items()) if isinstance(seeds, Mapping) else list(seeds)
    seed_status = {}
    for a, status in items:
        status = Status(status)
        if status not in (Status.METHOD_PASS, Status.ASSUMED):
            raise ValueError(f"seed {a} has status {status.value}; only method_pass or assumed may seed")
        if not 1 <= a <= bound:
            raise ValueError(f"seed {a} outside [1, {bound}]")
        if _RANK[status] > _RANK.get(seed_status.get(a), 0):
            seed_status[a] = status

    best = {a: (_RANK[s], s, None, None) for a, s in seed_status.items()}
    for base in sorted(seed_status):
        for k in range(2, isqrt(bound // base) + 1):
            a = base * k * k
            cand = (_RANK[Status.CLOSURE_DERIVED], Status.CLOSURE_DERIVED, base, k)
            # strictly greater keeps the first (smallest base, smallest k) pair
            if a not in best or cand[0] > best[a][0]:
                best[a] = cand

    entries = tuple(
        ScanEntry(a, status, unique_representatives(a), base=base, k=k)
        for a, (_, status, base, k) in sorted(best.items())
    )
    return ScanReport(bound, entries)


def seeds_from_scan(report: ScanReport, assumed: Iterable[int] = ()) -> List[Tuple[int, Status]]:
    seeds = [(a, Status.METHOD_PASS) for a in report.with_status(Status.METHOD_PASS)]
    seeds.extend((a, Status.ASSUMED) for a in assumed)
    return seeds


def compare_with_reference(report: ScanReport, reference: Iterable[int]) -> dict:
    """Method passes in the scanned range beyond, or missing from, a reference list."""
    lo, hi = report.entries[0].a, report.entries[-1].a
    ref = {a for a in reference if lo <= a <= hi}
    passes = set(report.with_status(Status.METHOD_PASS))
    diff = {"beyond_reference": sorted(passes - ref), "missing_from_scan": sorted(ref - passes)}
    if diff["beyond_reference"]:
        log.warning("mod-8 check passes beyond the reference list: %s", diff["beyond_reference"])
    if diff["missing_from_scan"]:
        log.warning("reference moduli not passing the mod-8 check: %s", diff["missing_from_scan"])
    return diff
