"""Dense matrices and canonical subspaces over F_q.

A :class:`Subspace` stores the reduced row-echelon basis of the space it
spans, so two subspaces are equal as sets exactly when their stored bases are
identical.  Everything here is exact; no floating point is involved.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np

from .errors import AmbientMismatch, TooLarge
from .gf import Field
from .qanalog import q_binomial

VECTOR_LIMIT = 2**24
SUBSPACE_LIMIT = 10**7


class MatF:
    """A dense matrix over a finite field; ``data`` is a 2-d integer array."""

    __slots__ = ("field", "data")

    def __init__(self, field: Field, data, *, cols: int | None = None):
        arr = np.array(data, dtype=field.dtype)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, cols or 0)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        if not field.is_element(arr):
            raise ValueError(f"matrix entries must lie in [0, {field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.data[:, j])

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def __matmul__(self, other: "MatF") -> "MatF":
        if self.field != other.field:
            raise AmbientMismatch("matrices over different fields")
        return MatF(self.field, matmul(self.field, self.data, other.data), cols=other.cols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatF)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.all(self.data == other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, tuple(map(tuple, self.tolist()))))

    def __repr__(self) -> str:
        return f"MatF(q={self.field.q}, {self.tolist()})"


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of two integer arrays over ``field``; reduces after every term."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=field.dtype)
    for l in range(a.shape[1]):
        acc = field.add(acc, field.mul(a[:, l, None], b[None, l, :]))
    return acc


def _rref(field: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    R = np.array(a, dtype=field.dtype, copy=True)
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = int(R[r, c])
        if lead != 1:
            R[r] = field.mul(field.inv(lead), R[r])
        col = R[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if len(hit):
            R[hit] = field.sub(R[hit], field.mul(col[hit, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rref(m: MatF) -> tuple[MatF, int, list[int]]:
    """Unique reduced row-echelon form of ``m`` (zero rows kept at the bottom)."""
    R, pivots = _rref(m.field, m.data)
    return MatF(m.field, R, cols=m.cols), len(pivots), pivots


def rank(m: MatF) -> int:
    return len(_rref(m.field, m.data)[1])


class Subspace:
    """A linear subspace of F_q^n held in canonical (RREF) form.

    Use :func:`row_space` and friends to build instances; the constructor
    trusts that ``basis`` is already reduced with no zero rows.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots", "_key")

    def __init__(self, field: Field, ambient_dim: int, basis: np.ndarray, pivots: Sequence[int]):
        basis = np.asarray(basis, dtype=field.dtype).reshape(len(pivots), ambient_dim)
        basis.setflags(write=False)
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)
        self._key = (field.q, ambient_dim, tuple(tuple(int(x) for x in row) for row in basis))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, np.zeros((0, n), dtype=field.dtype), ())

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, np.eye(n, dtype=field.dtype), range(n))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def generator(self) -> MatF:
        return MatF(self.field, self.basis, cols=self.ambient_dim)

    def key(self) -> tuple:
        """Hashable canonical form, usable for deterministic sorting."""
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Subspace(q={self.field.q}, n={self.ambient_dim}, dim={self.dim}, basis={list(self._key[2])})"

    def __contains__(self, vector) -> bool:
        v = np.asarray(vector, dtype=self.field.dtype).reshape(1, self.ambient_dim)
        return bool(membership_mask(self, v)[0])

    def vectors(self) -> Iterator[tuple[int, ...]]:
        """All ``q**dim`` elements, ordered lexicographically by coordinates in the basis."""
        for coeffs in itertools.product(range(self.field.q), repeat=self.dim):
            c = np.asarray(coeffs, dtype=self.field.dtype).reshape(1, self.dim)
            yield tuple(int(x) for x in matmul(self.field, c, self.basis)[0])


def _from_rows(field: Field, n: int, rows: np.ndarray) -> Subspace:
    R, pivots = _rref(field, np.asarray(rows, dtype=field.dtype).reshape(-1, n))
    return Subspace(field, n, R[: len(pivots)], pivots)


def row_space(m: MatF) -> Subspace:
    return _from_rows(m.field, m.cols, m.data)


def span(field: Field, vectors, n: int) -> Subspace:
    """Subspace of F_q^n spanned by an iterable of vectors."""
    rows = np.asarray(list(vectors), dtype=field.dtype).reshape(-1, n)
    return _from_rows(field, n, rows)


def _kernel_rows(field: Field, a: np.ndarray, ncols: int) -> np.ndarray:
    R, pivots = _rref(field, a.reshape(-1, ncols))
    free = [c for c in range(ncols) if c not in set(pivots)]
    K = np.zeros((len(free), ncols), dtype=field.dtype)
    for i, f in enumerate(free):
        K[i, f] = 1
        for r, pc in enumerate(pivots):
            K[i, pc] = field.neg(R[r, f])
    return K


def kernel(m: MatF) -> Subspace:
    """Right null space ``{x : m x = 0}`` inside F_q^{cols}."""
    return _from_rows(m.field, m.cols, _kernel_rows(m.field, m.data, m.cols))


def _check_same(a: Subspace, b: Subspace) -> None:
    if a.field != b.field or a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch(
            f"F_{a.field.q}^{a.ambient_dim} vs F_{b.field.q}^{b.ambient_dim}"
        )


def orthogonal_complement(s: Subspace) -> Subspace:
    """``{a : a.y = 0 for every y in s}`` for the standard dot product."""
    return _from_rows(s.field, s.ambient_dim, _kernel_rows(s.field, s.basis, s.ambient_dim))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_same(a, b)
    return _from_rows(a.field, a.ambient_dim, np.vstack([a.basis, b.basis]))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Set intersection, computed as the complement of the sum of complements."""
    _check_same(a, b)
    return orthogonal_complement(subspace_sum(orthogonal_complement(a), orthogonal_complement(b)))


def contains(a: Subspace, b: Subspace) -> bool:
    """True iff ``b`` is a subspace of ``a``."""
    _check_same(a, b)
    if b.dim > a.dim:
        return False
    return bool(np.all(membership_mask(a, b.basis)))


def membership_mask(s: Subspace, vectors: np.ndarray) -> np.ndarray:
    """Boolean mask over the rows of ``vectors``: which rows lie in ``s``.

    A vector lies in ``s`` exactly when it is orthogonal to ``s``'s complement.
    """
    vectors = np.asarray(vectors, dtype=s.field.dtype).reshape(-1, s.ambient_dim)
    checks = orthogonal_complement(s).basis
    if checks.shape[0] == 0:
        return np.ones(vectors.shape[0], dtype=bool)
    syndromes = matmul(s.field, checks, vectors.T)
    return ~np.any(syndromes != 0, axis=0)


# -- enumeration -------------------------------------------------------------


def _guard_vectors(field: Field, m: int) -> None:
    if field.q**m > VECTOR_LIMIT:
        raise TooLarge(f"{field.q}^{m} vectors exceed the limit of {VECTOR_LIMIT}")


def enumerate_vectors(field: Field, m: int) -> Iterator[tuple[int, ...]]:
    """All ``q**m`` vectors of F_q^m in lexicographic order."""
    _guard_vectors(field, m)
    return itertools.product(range(field.q), repeat=m)


def all_vectors(field: Field, m: int) -> np.ndarray:
    """Array form of :func:`enumerate_vectors` (same order), shape ``(q**m, m)``."""
    _guard_vectors(field, m)
    if m == 0:
        return np.zeros((1, 0), dtype=field.dtype)
    grid = np.indices((field.q,) * m).reshape(m, -1).T
    return grid.astype(field.dtype)


def normalize_rows(field: Field, vectors: np.ndarray) -> np.ndarray:
    """Scale each nonzero row so that its first nonzero entry is 1; zero rows stay zero."""
    v = np.asarray(vectors, dtype=field.dtype)
    if v.size == 0:
        return v.copy()
    nz = v != 0
    lead_idx = np.argmax(nz, axis=1)
    lead = v[np.arange(v.shape[0]), lead_idx]
    has = nz.any(axis=1)
    scale = np.ones(v.shape[0], dtype=field.dtype)
    if has.any():
        scale[has] = field.inv(lead[has])
    return field.mul(scale[:, None], v)


def projective_points(field: Field, m: int) -> np.ndarray:
    """One normalized representative of every 1-dimensional subspace of F_q^m,
    in lexicographic order; there are ``[m]_q`` of them."""
    vecs = all_vectors(field, m)
    if m == 0:
        return vecs[:0]
    nz = vecs != 0
    lead = vecs[np.arange(len(vecs)), np.argmax(nz, axis=1)]
    return vecs[nz.any(axis=1) & (lead == 1)]


def _guard_count(count: int) -> None:
    if count > SUBSPACE_LIMIT:
        raise TooLarge(f"{count} subspaces exceed the limit of {SUBSPACE_LIMIT}")


def _rref_patterns(field: Field, d: int, k: int) -> Iterator[np.ndarray]:
    """Every k x d matrix in reduced row-echelon form with rank k."""
    q = field.q
    for piv in itertools.combinations(range(d), k):
        pivset = set(piv)
        free = [(i, j) for i in range(k) for j in range(piv[i] + 1, d) if j not in pivset]
        base = np.zeros((k, d), dtype=field.dtype)
        for i, p in enumerate(piv):
            base[i, p] = 1
        for values in itertools.product(range(q), repeat=len(free)):
            R = base.copy()
            for (i, j), x in zip(free, values):
                R[i, j] = x
            yield R


def enumerate_k_subspaces(within: Subspace, k: int) -> Iterator[Subspace]:
    """Every k-dimensional subspace of ``within``, each exactly once, canonical form."""
    d = within.dim
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= {d}, got {k}")
    _guard_count(q_binomial(d, k, within.field.q))
    field, n = within.field, within.ambient_dim
    if k == 0:
        yield Subspace.zero(field, n)
        return
    for R in _rref_patterns(field, d, k):
        yield _from_rows(field, n, matmul(field, R, within.basis))


def _complement_coords(of: Subspace) -> list[int]:
    piv = set(of.pivots)
    return [c for c in range(of.ambient_dim) if c not in piv]


def enumerate_k_superspaces(of: Subspace, k: int, n: int | None = None) -> Iterator[Subspace]:
    """Every k-dimensional subspace of F_q^n containing ``of``, each exactly once.

    The unit vectors on the non-pivot coordinates of ``of`` span a complement
    E of ``of``; superspaces correspond to subspaces of E of dimension
    ``k - dim(of)``.
    """
    n = of.ambient_dim if n is None else n
    if n != of.ambient_dim:
        raise AmbientMismatch(f"subspace lives in F_q^{of.ambient_dim}, not F_q^{n}")
    d = of.dim
    if not d <= k <= n:
        raise ValueError(f"need {d} <= k <= {n}, got {k}")
    field = of.field
    _guard_count(q_binomial(n - d, k - d, field.q))
    comp = _complement_coords(of)
    quotient = Subspace.full(field, n - d)
    for E in enumerate_k_subspaces(quotient, k - d):
        rows = np.zeros((E.dim, n), dtype=field.dtype)
        rows[:, comp] = E.basis
        yield _from_rows(field, n, np.vstack([of.basis, rows]))


def extension_vectors(of: Subspace) -> np.ndarray:
    """Vectors v, one per superspace of dimension ``dim(of) + 1``, such that
    those superspaces are exactly ``of + <v>``.  Shape ``([n - dim]_q, n)``."""
    field, n = of.field, of.ambient_dim
    comp = _complement_coords(of)
    _guard_count(q_binomial(len(comp), 1, field.q) if comp else 0)
    pts = projective_points(field, len(comp))
    out = np.zeros((len(pts), n), dtype=field.dtype)
    out[:, comp] = pts
    return out


def random_invertible(field: Field, size: int, rng: np.random.Generator) -> MatF:
    while True:
        T = MatF(field, rng.integers(0, field.q, size=(size, size)))
        if rank(T) == size:
            return T
