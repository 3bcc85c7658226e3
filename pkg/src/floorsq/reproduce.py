"""Recompute the published tables and diff them against the embedded reference."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from . import golden
from .residues import unique_representatives
from .scanner import ScanReport, Status, closure_list, scan_moduli, seeds_from_scan
from .theorem import HypothesisVerdict, mod8_witness_check


@dataclass
class Reproduction:
    r_table: dict
    witnesses: List[HypothesisVerdict]
    closure: ScanReport
    mismatches: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "r_table": [{"a": a, "r_set": list(v)} for a, v in sorted(self.r_table.items())],
            "witness_tables": [v.to_dict() for v in self.witnesses],
            "closure": [e.to_dict() for e in self.closure.entries],
            "mismatches": list(self.mismatches),
        }


def reproduce(reference: Optional[dict] = None) -> Reproduction:
    ref = golden.reference() if reference is None else reference
    moduli = sorted(ref["r_table"])
    mismatches = []

    r_table = {a: unique_representatives(a).elements for a in moduli}
    for a in moduli:
        want = tuple(ref["r_table"][a])
        if r_table[a] != want:
            mismatches.append(f"r_table row a={a}: computed {list(r_table[a])}, reference {list(want)}")

    witnesses = [mod8_witness_check(a) for a in moduli]
    for v in witnesses:
        if not v.passed:
            mismatches.append(f"witness a={v.modulus}: {v.outcome.value}")
        elif v.modulus == 7 and v.witness.entries != ref["witness_7"]:
            mismatches.append(f"witness a=7: computed {v.witness.entries}, reference {ref['witness_7']}")

    bound = golden.CLOSURE_BOUND
    scan = scan_moduli(1, bound)
    closure = closure_list(seeds_from_scan(scan, golden.ASSUMED), bound)
    got = tuple(closure.moduli)
    if got != tuple(ref["closure"]):
        extra = sorted(set(got) - set(ref["closure"]))
        missing = sorted(set(ref["closure"]) - set(got))
        mismatches.append(f"closure list: extra {extra}, missing {missing}")
    for a in golden.ASSUMED:
        if a in got and closure[a].status is not Status.ASSUMED:
            mismatches.append(f"closure a={a}: expected assumed, got {closure[a].status.value}")

    return Reproduction(r_table, witnesses, closure, mismatches)
