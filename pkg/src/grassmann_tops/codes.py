"""Linear codes as subspaces of F_q^n, with non-degeneracy and projectivity tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RankDeficient
from .gf import Field
from .matq import MatF, Subspace, normalize_rows, projective_points, random_invertible, rank, row_space


@dataclass(frozen=True)
class Code:
    """An ``[n, k]_q`` linear code; equality is equality of subspaces."""

    space: Subspace

    @classmethod
    def from_generator(cls, m: MatF) -> "Code":
        r = rank(m)
        if r < m.rows:
            raise RankDeficient(f"generator has {m.rows} rows but rank {r}")
        return cls(row_space(m))

    @property
    def field(self) -> Field:
        return self.space.field

    @property
    def n(self) -> int:
        return self.space.ambient_dim

    @property
    def k(self) -> int:
        return self.space.dim

    @property
    def generator(self) -> MatF:
        return self.space.generator

    def key(self) -> tuple:
        return self.space.key()

    def __repr__(self) -> str:
        return f"Code([{self.n},{self.k}]_{self.field.q}, {self.space.generator.tolist()})"


def columns_proportional(field: Field, c1, c2) -> bool:
    """True iff one column is a scalar multiple of the other.

    A zero column counts as proportional to every column.
    """
    a = np.asarray(c1, dtype=field.dtype).reshape(1, -1)
    b = np.asarray(c2, dtype=field.dtype).reshape(1, -1)
    if a.shape != b.shape:
        raise ValueError("columns must have equal length")
    if not a.any() or not b.any():
        return True
    return bool(np.all(normalize_rows(field, a) == normalize_rows(field, b)))


def projective_mask(field: Field, gens: np.ndarray) -> np.ndarray:
    """Vectorized projectivity test for a batch of generator matrices.

    ``gens`` has shape ``(B, k, n)``; entry ``b`` of the result is True iff the
    columns of ``gens[b]`` are nonzero and pairwise non-proportional.
    """
    gens = np.asarray(gens, dtype=field.dtype)
    B, k, n = gens.shape
    if B == 0:
        return np.zeros(0, dtype=bool)
    cols = normalize_rows(field, gens.transpose(0, 2, 1).reshape(B * n, k))
    if field.q**k < 2**62:
        weights = np.array([field.q ** (k - 1 - i) for i in range(k)], dtype=np.int64)
        ids = (cols.astype(np.int64) * weights).sum(axis=1).reshape(B, n)
        ids.sort(axis=1)
        ok = ids[:, 0] != 0
        if n > 1:
            ok &= np.all(np.diff(ids, axis=1) != 0, axis=1)
        return ok
    out = np.empty(B, dtype=bool)
    for b in range(B):
        seen = {tuple(c) for c in cols[b * n : (b + 1) * n].tolist()}
        out[b] = len(seen) == n and (0,) * k not in seen
    return out


def is_projective_matrix(m: MatF) -> bool:
    return bool(projective_mask(m.field, m.data[None])[0])


def is_projective(c: Code) -> bool:
    return is_projective_matrix(c.generator)


def is_nondegenerate(c: Code) -> bool:
    return bool(np.all(np.any(c.space.basis != 0, axis=0)))


def random_projective_generator(
    field: Field, dim: int, n: int, rng: np.random.Generator, *, scramble: bool = True
) -> MatF:
    """A random full-rank ``dim x n`` generator of a projective code.

    Columns are ``n`` distinct points of PG(dim-1, q), each scaled by a random
    nonzero scalar; with ``scramble`` the rows are mixed by a random invertible
    matrix so the result is not in any normal form.
    """
    pts = projective_points(field, dim)
    if n > len(pts):
        raise ValueError(f"a projective [n,{dim}]_{field.q} code needs n <= {len(pts)}")
    if n < dim:
        raise ValueError(f"a rank-{dim} generator needs at least {dim} columns")
    while True:
        idx = rng.choice(len(pts), size=n, replace=False)
        scale = rng.integers(1, field.q, size=n)
        cols = field.mul(scale[:, None], pts[idx])
        G = MatF(field, cols.T)
        if rank(G) == dim:
            break
    if scramble:
        G = random_invertible(field, dim, rng) @ G
    return G
