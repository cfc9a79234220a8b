"""Exact computations on modular knots: linking and intersection numbers,
q-deformed linking functions, Fricke and Alexander polynomials, and
quasi-morphism bases of the modular group."""

from .words import CyclicWord, canonicalize, coprime, enumerate_classes, occ, transpose
from .modgroup import MatZ, cosign_len, parse_matrix, reduce_to_cycle, word_to_matrix
from .surd import QuadSurd, axes_cross, cord, cross, fixed_points
from .laurent import Laurent
from .qdeform import cos_pair_q, disc_q, fricke_trace, q_matrix
from .linking import (
    Crossing,
    cos_a,
    enumerate_crossings,
    intersection_number,
    link_equiv_witness,
    lk,
    lk_oracle,
    lk_shift,
    lk_slp,
)
from .charvar import SymbolicLinkFn, cos_q, link_q, link_q_symbolic, plot_grid, roots, wolpert_sum
from .braid3 import alexander, braid_of, burau, fricke_alexander_check
from .qmbasis import FunctionalVec, basis_matrices, decompose, defect, mas, recombine

__version__ = "0.1.0"
