"""Independent brute-force helpers for the test-suite.

Subspaces here are frozensets of integer tuples; nothing is shared with the
RREF machinery of the package, so they can serve as ground truth for it.
Prime q only.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

from grassmann_tops import make_field
from grassmann_tops.codes import random_projective_generator
from grassmann_tops.qanalog import q_bracket


def lin_comb(coeffs, vectors, q):
    n = len(vectors[0])
    return tuple(sum(c * v[i] for c, v in zip(coeffs, vectors)) % q for i in range(n))


def span_set(vectors, q, n):
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return frozenset({(0,) * n})
    return frozenset(
        lin_comb(cs, vectors, q) for cs in itertools.product(range(q), repeat=len(vectors))
    )


def all_subspace_sets(q, n, k):
    """Every k-subspace of F_q^n as a frozenset, grown one vector at a time."""
    layer = {frozenset({(0,) * n})}
    space = list(itertools.product(range(q), repeat=n))
    for _ in range(k):
        nxt = set()
        for s in layer:
            for v in space:
                if v not in s:
                    nxt.add(
                        frozenset(
                            tuple((x[i] + c * v[i]) % q for i in range(n)) for x in s for c in range(q)
                        )
                    )
        layer = nxt
    return layer


def as_set(subspace):
    return frozenset(subspace.vectors())


def proportional(a, b, q):
    if not any(a) or not any(b):
        return True
    return any(tuple(lam * x % q for x in a) == tuple(b) for lam in range(1, q))


def projective_by_pairs(rows, q):
    cols = list(zip(*rows))
    if any(not any(c) for c in cols):
        return False
    return not any(proportional(a, b, q) for a, b in itertools.combinations(cols, 2))


def mat(text):
    return [[int(c) for c in row.split()] for row in text.strip().splitlines()]


CORPUS_SEED = 20261016
DRAWS_PER_SHAPE = 4


def corpus_shapes():
    for q in (2, 3):
        for k1 in (3, 4):
            for n in range(k1 + 1, min(12, q_bracket(k1, q)) + 1):
                yield q, k1, n


@functools.lru_cache(maxsize=None)
def corpus():
    """Random projective generators: every (q, k+1, n) shape with q in {2,3},
    k+1 in {3,4}, k+1 < n <= min(12, [k+1]_q), drawn DRAWS_PER_SHAPE times."""
    rng = np.random.default_rng(CORPUS_SEED)
    out = []
    for q, k1, n in corpus_shapes():
        field = make_field(q)
        for _ in range(DRAWS_PER_SHAPE):
            out.append(random_projective_generator(field, k1, n, rng))
    return tuple(out)
