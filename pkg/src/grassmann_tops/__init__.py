"""Tops of graphs of projective codes.

Build the clique of all projective k-codes inside a projective code
U = [n, k+1]_q, classify how it sits among the lines of the Grassmannian,
decide whether it is a maximal clique, and cross-check every answer by
brute-force enumeration.
"""

from .codes import Code, is_nondegenerate, is_projective
from .gf import Field, make_field
from .matq import MatF, Subspace, row_space
from .oracle import brute_force_clique, maximality_check
from .qanalog import q_binomial, q_bracket
from .topclique import (
    CliqueAnalysis,
    LineClass,
    LineKind,
    Reason,
    Verdict,
    analyze,
    classify_lines,
    clique_core,
    code_C,
    compute_W,
    compute_Y,
    decide_star_and_top,
    decide_top,
    top_clique,
)

__version__ = "0.1.0"
