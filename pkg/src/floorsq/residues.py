"""Quadratic residues Q_a, triple sums A_a and unique representatives R_a."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from .arith import check_natural


class Kind(str, enum.Enum):
    Q = "Q"
    A = "A"
    R = "R"


@dataclass(frozen=True)
class ResidueSet:
    modulus: int
    kind: Kind
    elements: Tuple[int, ...]

    def __post_init__(self):
        els = self.elements
        if any(x >= y for x, y in zip(els, els[1:])):
            raise ValueError("elements must be strictly ascending")

    def __contains__(self, value) -> bool:
        return value in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def label(self) -> str:
        return f"{self.kind.value}_{self.modulus}"

    def to_text(self) -> str:
        return f"{self.label} = {{{', '.join(map(str, self.elements))}}}"

    def to_dict(self) -> dict:
        return {"modulus": self.modulus, "kind": self.kind.value,
                "elements": list(self.elements)}


def _check_modulus(a: int) -> int:
    check_natural(a, "modulus")
    if a == 0:
        raise ValueError("modulus must be at least 1")
    return a


@lru_cache(maxsize=1024)
def quadratic_residues(a: int) -> ResidueSet:
    """Nonzero squares modulo ``a``, found by squaring every x in [0, a)."""
    _check_modulus(a)
    found = {x * x % a for x in range(a)}
    found.discard(0)
    return ResidueSet(a, Kind.Q, tuple(sorted(found)))


@lru_cache(maxsize=1024)
def triple_sums(a: int) -> ResidueSet:
    """All x + y + z with x, y, z drawn (with repetition) from Q_a and 0."""
    base = (0,) + quadratic_residues(a).elements
    pairs = {x + y for x in base for y in base}
    sums = {p + z for p in pairs for z in base}
    return ResidueSet(a, Kind.A, tuple(sorted(sums)))


@lru_cache(maxsize=1024)
def unique_representatives(a: int) -> ResidueSet:
    """Members of A_a that are alone in their residue class mod ``a`` within A_a."""
    sums = triple_sums(a).elements
    buckets = Counter(s % a for s in sums)
    return ResidueSet(a, Kind.R, tuple(s for s in sums if buckets[s % a] == 1))


def residue_set(a: int, kind) -> ResidueSet:
    kind = Kind(kind.upper() if isinstance(kind, str) else kind)
    return {Kind.Q: quadratic_residues, Kind.A: triple_sums,
            Kind.R: unique_representatives}[kind](a)
