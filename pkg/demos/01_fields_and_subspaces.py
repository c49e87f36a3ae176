"""
Finite fields and subspaces
===========================

Arithmetic in F_q, row reduction, and the canonical form used to compare
subspaces.
"""

import numpy as np

from grassmann_tops import make_field, q_binomial
from grassmann_tops.matq import MatF, enumerate_k_subspaces, intersect, row_space, Subspace

# F_4 is built from the modulus x^2 + x + 1, so x * x = x + 1 (encoded 2 * 2 = 3)
F4 = make_field(4)
print("F_4 multiplication table")
print(F4.mul_table)

# two generator matrices with the same row space compare equal as subspaces
F3 = make_field(3)
M = MatF(F3, [[1, 2, 0, 1], [0, 1, 1, 2]])
T = MatF(F3, [[2, 1], [1, 1]])
print("same row space after a change of basis:", row_space(T @ M) == row_space(M))
print("canonical basis:")
print(row_space(M).basis)

# two hyperplanes of F_2^4 meet in a plane
F2 = make_field(2)
h1 = row_space(MatF(F2, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]))
h2 = row_space(MatF(F2, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
print("dim of intersection:", intersect(h1, h2).dim)

# count the 2-subspaces of F_2^4 and compare with the Gaussian binomial
planes = list(enumerate_k_subspaces(Subspace.full(F2, 4), 2))
print("2-subspaces of F_2^4:", len(planes), "formula:", q_binomial(4, 2, 2))
