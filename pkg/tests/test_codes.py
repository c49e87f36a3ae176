import itertools

import numpy as np
import pytest

from grassmann_tops import catalog, make_field
from grassmann_tops.codes import (
    Code,
    columns_proportional,
    is_nondegenerate,
    is_projective,
    projective_mask,
    random_projective_generator,
)
from grassmann_tops.errors import RankDeficient
from grassmann_tops.matq import MatF, random_invertible
from grassmann_tops.qanalog import q_bracket

from oracles import projective_by_pairs

F2 = make_field(2)
F3 = make_field(3)
F5 = make_field(5)


def test_from_generator():
    c = Code.from_generator(MatF(F2, catalog.EXAMPLE_A.rows))
    assert (c.n, c.k) == (10, 5)
    I = Code.from_generator(MatF(F3, np.eye(4, dtype=int)))
    assert I.n == I.k == 4
    with pytest.raises(RankDeficient):
        Code.from_generator(MatF(F2, [[1, 0, 1], [1, 0, 1]]))


@pytest.mark.parametrize("example", catalog.EXAMPLES, ids=lambda e: e.name)
def test_worked_examples_are_projective(example):
    c = Code.from_generator(MatF(make_field(example.q), example.rows))
    assert is_projective(c) and is_nondegenerate(c)


def test_nonprojective_cases():
    zero_col = Code.from_generator(MatF(F2, [[1, 0, 0], [0, 1, 0]]))
    assert not is_nondegenerate(zero_col) and not is_projective(zero_col)
    equal_cols = Code.from_generator(MatF(F2, [[1, 1, 0], [0, 0, 1]]))
    assert is_nondegenerate(equal_cols) and not is_projective(equal_cols)
    scaled_cols = Code.from_generator(MatF(F5, [[1, 2, 0], [2, 4, 1]]))
    assert not is_projective(scaled_cols)


def test_columns_proportional():
    assert columns_proportional(F2, (1, 0, 1), (1, 0, 1))
    assert not columns_proportional(F2, (1, 0), (0, 1))
    assert columns_proportional(F5, (1, 2), (2, 4))
    assert columns_proportional(F5, (0, 0), (3, 1))
    with pytest.raises(ValueError):
        columns_proportional(F5, (1, 2), (1, 2, 3))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_projective_mask_matches_pairwise_definition(q):
    F = make_field(q)
    rng = np.random.default_rng(q)
    gens = rng.integers(0, q, size=(300, 2, 4))
    mask = projective_mask(F, gens)
    for g, got in zip(gens, mask):
        cols = [tuple(g[:, j]) for j in range(4)]
        expected = all(any(c) for c in cols) and not any(
            columns_proportional(F, a, b) for a, b in itertools.combinations(cols, 2)
        )
        assert got == expected
        if F.m == 1:
            assert got == projective_by_pairs(g.tolist(), q)


def test_predicates_basis_invariant():
    rng = np.random.default_rng(11)
    for _ in range(30):
        q = int(rng.choice([2, 3]))
        F = make_field(q)
        m = MatF(F, rng.integers(0, q, size=(3, 6)))
        try:
            c = Code.from_generator(m)
        except RankDeficient:
            continue
        T = random_invertible(F, 3, rng)
        c2 = Code.from_generator(T @ m)
        assert c2 == c
        assert is_projective(c2) == projective_by_pairs((T @ m).tolist(), q) == is_projective(c)
        assert is_nondegenerate(c2) == is_nondegenerate(c)


@pytest.mark.parametrize("q,k,n", [(2, 3, 7), (3, 3, 13), (3, 4, 12), (4, 3, 9)])
def test_random_projective_generator(q, k, n):
    F = make_field(q)
    rng = np.random.default_rng(0)
    m = random_projective_generator(F, k, n, rng)
    c = Code.from_generator(m)
    assert c.k == k and c.n == n and is_projective(c)
    assert n <= q_bracket(k, q)
    with pytest.raises(ValueError):
        random_projective_generator(F, k, q_bracket(k, q) + 1, rng)
