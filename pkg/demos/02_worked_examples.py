"""
The four worked examples
========================

Three [10,5]_2 codes and one [6,4]_2 code, each run through the full
classification: W, Y, the clique of projective hyperplanes, its core, the
line class and the top/star verdict.
"""

from grassmann_tops import analyze, catalog, make_field
from grassmann_tops.matq import MatF
from grassmann_tops.oracle import maximality_check

for example in catalog.EXAMPLES:
    m = MatF(make_field(example.q), example.rows)
    a = analyze(m)
    print(f"--- {example.name}: [{a.n},{a.k + 1}]_{example.q}")
    print("|W| =", len(a.w_set), " Y =", a.y_set)
    print("clique size:", len(a.clique), " dim<Y> =", a.span_y_dim)
    print("line class:", a.line_class)
    print("verdict:", a.verdict.reason.value)

    # the oracle searches for a projective code adjacent to every member
    if a.clique:
        maximal, witness = maximality_check(a.clique)
        print("oracle says maximal:", maximal)
        if witness is not None:
            print("a code extending the clique:")
            print(witness.generator.data)
    print()
