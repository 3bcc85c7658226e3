"""Floor-of-squares representations: N = floor(A^2/a) + floor(B^2/a) + floor(C^2/a)."""

from .arith import (
    SquareTriple,
    is_forbidden_form,
    is_perfect_square,
    isqrt,
    three_square_decompose,
)
from .residues import Kind, ResidueSet, quadratic_residues, triple_sums, unique_representatives
from .scanner import ScanReport, Status, closure_list, scan_moduli
from .theorem import (
    ConstructionError,
    HypothesisVerdict,
    Representation,
    WitnessTable,
    brute_force_represent,
    construct_representation,
    mod8_witness_check,
    scale_by_square,
    select_r,
    verify_range,
)

__version__ = "0.1.0"
