"""
Gaussian binomials and lines
============================

[n choose k]_q counts k-subspaces.  A line between an (k-1)-space S and a
(k+1)-space U always has q + 1 members, and a k-code lies on
[k]_q [n-k]_q lines.
"""

import numpy as np

from grassmann_tops import make_field, q_binomial, q_bracket
from grassmann_tops.codes import Code
from grassmann_tops.matq import span
from grassmann_tops.oracle import count_lines_through_code, line_members

for q in (2, 3, 4):
    print(f"q = {q}:", [q_binomial(6, k, q) for k in range(7)])

F3 = make_field(3)
e = np.eye(5, dtype=int)
S = span(F3, e[:1], 5)
U = span(F3, e[:3], 5)
print("members of the line [S,U] over F_3:", len(line_members(S, U)))

F2 = make_field(2)
c = Code(span(F2, e[:2], 5))
print("lines through a 2-code of F_2^5:", count_lines_through_code(c), "=", q_bracket(2, 2) * q_bracket(3, 2))
