"""Constructive side of the floor-of-squares representation theorem.

A modulus ``a`` is certified when every class k mod 8 admits some r in R_a
with ``a*k + r`` avoiding residues {0, 4, 7} mod 8. For such ``a`` every N is
obtained by splitting ``a*N + r`` into three squares and dividing by ``a``.
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .arith import (
    SquareTriple,
    check_natural,
    checked_mul_add,
    is_forbidden_form,
    isqrt,
    three_square_decompose,
)
from .residues import Kind, ResidueSet, unique_representatives

#: residues mod 8 taken by every 4**s * (8t + 7)
BLOCKED_MOD8 = frozenset({0, 4, 7})


class ConstructionError(RuntimeError):
    """A representation broke one of its identities. Always a bug, never a verdict."""


class Outcome(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    EMPTY_R = "empty_r"


@dataclass(frozen=True)
class WitnessTable:
    modulus: int
    entries: Dict[int, int]

    def to_dict(self) -> dict:
        return {"modulus": self.modulus,
                "entries": [{"k_class": k, "r": self.entries[k]} for k in sorted(self.entries)]}


@dataclass(frozen=True)
class HypothesisVerdict:
    modulus: int
    outcome: Outcome
    witness: Optional[WitnessTable] = None
    blocking_class: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASS

    def to_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "outcome": self.outcome.value,
            "witness": self.witness.to_dict() if self.witness else None,
            "blocking_class": self.blocking_class,
        }


@dataclass(frozen=True)
class Representation:
    """``target = sum(floor(X**2 / modulus))`` over the triple, certified by ``r``.

    ``scale`` is 1 for representations built from R_a directly. A value k > 1
    marks one obtained by scaling a base representation at ``modulus // k**2``;
    its ``r`` is then ``k**2`` times a member of that base R-set.
    """

    modulus: int
    target: int
    r: int
    triple: SquareTriple
    scale: int = 1

    @property
    def floor_terms(self) -> List[int]:
        return [x * x // self.modulus for x in self.triple]

    @property
    def remainders(self) -> List[int]:
        return [x * x % self.modulus for x in self.triple]

    def validate(self) -> "Representation":
        a, n, r, k = self.modulus, self.target, self.r, self.scale
        if a * n + r != self.triple.square_sum():
            raise ConstructionError(f"a*N + r != A^2+B^2+C^2 for {self}")
        if sum(self.remainders) != r:
            raise ConstructionError(f"remainders do not sum to r for {self}")
        if sum(self.floor_terms) != n:
            raise ConstructionError(f"floor terms do not sum to N for {self}")
        base, rem = divmod(a, k * k)
        r0, rrem = divmod(r, k * k)
        if rem or rrem or r0 not in unique_representatives(base):
            raise ConstructionError(f"r = {r} is not backed by an R-set element for {self}")
        return self

    def to_dict(self) -> dict:
        a = self.modulus
        return {
            "modulus": a,
            "target": self.target,
            "r": self.r,
            "scale": self.scale,
            "triple": list(self.triple),
            "floor_terms": self.floor_terms,
            # fractional parts {X^2/a} as exact (numerator, denominator) pairs
            "fractional_parts": [[m, a] for m in self.remainders],
        }


def _r_set_for(a: int, r_set: Optional[ResidueSet]) -> ResidueSet:
    expected = unique_representatives(a)
    if r_set is None:
        return expected
    if r_set.kind is not Kind.R or r_set != expected:
        raise ValueError(f"r_set is not R_{a}")
    return r_set


def mod8_witness_check(a: int, r_set: Optional[ResidueSet] = None) -> HypothesisVerdict:
    """Check the theorem hypothesis for all k at once, working modulo 8.

    ``(a*k + r) % 8`` depends only on ``k % 8``, so eight classes cover every k.
    Each class gets the smallest admissible r.
    """
    rs = _r_set_for(a, r_set)
    if not rs.elements:
        return HypothesisVerdict(a, Outcome.EMPTY_R)
    entries = {}
    for k in range(8):
        r = next((r for r in rs if (a * k + r) % 8 not in BLOCKED_MOD8), None)
        if r is None:
            return HypothesisVerdict(a, Outcome.FAIL, blocking_class=k)
        entries[k] = r
    return HypothesisVerdict(a, Outcome.PASS, witness=WitnessTable(a, entries))


def select_r(a: int, n: int, r_set: Optional[ResidueSet] = None) -> Optional[int]:
    """Smallest r in R_a with ``a*n + r`` a sum of three squares."""
    rs = _r_set_for(a, r_set)
    check_natural(n, "n")
    for r in rs:
        if not is_forbidden_form(checked_mul_add(a, n, r)):
            return r
    return None


def construct_representation(a: int, n: int) -> Optional[Representation]:
    """Build N from three floor-squares, or None if no r in R_a is admissible."""
    r = select_r(a, n)
    if r is None:
        return None
    total = a * n + r
    triple = three_square_decompose(total)
    if triple is None:
        raise ConstructionError(f"{total} is not of forbidden form but has no three-square split")
    return Representation(a, n, r, triple).validate()


def default_search_bound(a: int, n: int) -> int:
    return isqrt(checked_mul_add(a, n + 1)) + 1


def brute_force_represent(a: int, n: int, search_bound: Optional[int] = None) -> Optional[SquareTriple]:
    """Exhaustive search for x >= y >= z with floor-square sum ``n``.

    x runs downward from ``search_bound``, then y and z upward, so the largest
    possible leading term is paired with the smallest companions.
    """
    check_natural(a, "modulus")
    if a == 0:
        raise ValueError("modulus must be at least 1")
    check_natural(n, "n")
    if search_bound is None:
        search_bound = default_search_bound(a, n)
    for x in range(search_bound, -1, -1):
        fx = x * x // a
        if fx > n:
            continue
        for y in range(x + 1):
            fy = fx + y * y // a
            if fy > n:
                break
            for z in range(y + 1):
                s = fy + z * z // a
                if s == n:
                    return SquareTriple(x, y, z)
                if s > n:
                    break
    return None


def scale_by_square(rep: Representation, k: int) -> Representation:
    """Lift a representation at ``a`` to one at ``a*k**2`` by scaling the triple."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"scale factor must be a positive integer, got {k!r}")
    rep.validate()
    modulus = checked_mul_add(rep.modulus, k * k)
    triple = SquareTriple(*(checked_mul_add(x, k) for x in rep.triple))
    r = sum(x * x % modulus for x in triple)
    return Representation(modulus, rep.target, r, triple, rep.scale * k).validate()


@dataclass
class VerificationReport:
    modulus: int
    n_max: int
    verified: int = 0
    failures: List[int] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.n_max + 1

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"modulus": self.modulus, "n_max": self.n_max, "total": self.total,
                "verified": self.verified, "failures": sorted(self.failures)}


def _verify_chunk(a: int, lo: int, hi: int):
    verified, failures = 0, []
    for n in range(lo, hi):
        rep = construct_representation(a, n)
        if rep is None:
            failures.append(n)
            continue
        # independent recheck of the floor identity
        if sum(x * x // a for x in rep.triple) != n:
            raise ConstructionError(f"floor identity failed at a={a}, n={n}")
        verified += 1
    return verified, failures


def resolve_workers(workers: Optional[int] = None) -> int:
    if workers is None:
        workers = int(os.environ.get("FLOORSQ_THREADS", "1") or 1)
    return max(1, workers)


def verify_range(a: int, n_max: int, workers: Optional[int] = None) -> VerificationReport:
    """Construct every N in [0, n_max], collecting each N that has no admissible r."""
    check_natural(n_max, "n_max")
    unique_representatives(a)  # validates a
    workers = resolve_workers(workers)
    report = VerificationReport(a, n_max)
    if workers == 1 or n_max < 1000:
        chunks = [_verify_chunk(a, 0, n_max + 1)]
    else:
        step = -(-(n_max + 1) // workers)
        bounds = [(lo, min(lo + step, n_max + 1)) for lo in range(0, n_max + 1, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_verify_chunk, *zip(*((a, lo, hi) for lo, hi in bounds))))
    for verified, failures in chunks:
        report.verified += verified
        report.failures.extend(failures)
    report.failures.sort()
    return report
