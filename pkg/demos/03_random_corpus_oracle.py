"""
Random codes against the brute-force oracle
===========================================

Draw random projective codes and compare the fast construction with
exhaustive enumeration.  Every disagreement would be printed; none should be.
"""

from collections import Counter

import numpy as np

from grassmann_tops import Code, brute_force_clique, decide_top, make_field, maximality_check, top_clique
from grassmann_tops.codes import random_projective_generator
from grassmann_tops.topclique import classify_lines

rng = np.random.default_rng(2026)
kinds = Counter()
disagreements = 0

for q, k1, n in [(2, 3, 5), (2, 3, 6), (2, 4, 7), (2, 4, 9), (3, 3, 6), (3, 4, 8)]:
    F = make_field(q)
    for _ in range(15):
        m = random_projective_generator(F, k1, n, rng)
        clique = top_clique(m)
        if clique != brute_force_clique(Code.from_generator(m)):
            disagreements += 1
            print("clique mismatch for", m)
        kinds[(q, k1, n, str(classify_lines(m).kind.value))] += 1
        if clique:
            maximal, _ = maximality_check(clique)
            if maximal != decide_top(m).is_top:
                disagreements += 1
                print("verdict mismatch for", m)

for key, count in sorted(kinds.items()):
    print(key, count)
print("disagreements:", disagreements)
