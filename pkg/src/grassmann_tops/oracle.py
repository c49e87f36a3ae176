"""Brute-force cross-checks for the clique classification.

Nothing here calls into the construction of W and Y except
:func:`verify_duality`, whose very purpose is to compare the span of Y with an
independently computed intersection.  Cliques are rebuilt by enumerating
subspaces, maximality is settled by exhaustive search, and line counts come
from enumeration rather than formulas.

Completeness of the maximality search: let ``X`` be a k-space adjacent to
every member of the clique and pick a member ``C0``.  Then ``T = X ∩ C0`` is a
(k-1)-subspace of ``C0`` and ``X = T + <v>`` for some ``v``.  Scanning every
hyperplane ``T`` of ``C0`` and every k-superspace of ``T`` therefore reaches
every possible extension, with ``[k]_q [n-k+1]_q`` candidates in total.
"""

from __future__ import annotations

import numpy as np

from .codes import Code, is_projective, projective_mask
from .errors import AmbientMismatch, EmptyClique, EmptyY
from .matq import (
    MatF,
    Subspace,
    contains,
    enumerate_k_subspaces,
    enumerate_k_superspaces,
    extension_vectors,
    intersect,
    membership_mask,
    orthogonal_complement,
    row_space,
    span,
    subspace_sum,
)
from . import topclique


def brute_force_clique(u: Code) -> frozenset[Code]:
    """All projective hyperplanes of ``u``, found by enumerating every hyperplane."""
    return frozenset(
        c for c in map(Code, enumerate_k_subspaces(u.space, u.k - 1)) if is_projective(c)
    )


def adjacency(a: Code, b: Code) -> bool:
    """Grassmann-graph adjacency: two k-codes meeting in dimension k-1."""
    if a.n != b.n or a.k != b.k or a.field != b.field:
        raise AmbientMismatch(f"[{a.n},{a.k}] vs [{b.n},{b.k}]")
    return intersect(a.space, b.space).dim == a.k - 1


def _common_neighbour_mask(T: Subspace, V: np.ndarray, members: list[Code]) -> np.ndarray:
    """Which ``X = T + <v>`` (v a row of V) are adjacent to every member.

    With ``P = T + M``: if ``dim P = k+1`` then ``dim(X + M) = k+1`` iff
    ``v in P``; if ``dim P = k`` (so ``P = M``) it holds iff ``v not in M``.
    """
    keep = np.ones(len(V), dtype=bool)
    k = T.dim + 1
    for member in members:
        P = subspace_sum(T, member.space)
        if P.dim > k + 1:
            return np.zeros(len(V), dtype=bool)
        inside = membership_mask(P, V)
        keep &= inside if P.dim == k + 1 else ~inside
    return keep


def maximality_check(
    clique, n: int | None = None, *, naive: bool = False
) -> tuple[bool, Code | None]:
    """Is ``clique`` a maximal clique of the projective-code graph?

    Returns ``(maximal, witness)``; the witness is a projective k-code outside
    the clique adjacent to every member.  Which witness is returned is an
    implementation detail.  ``naive=True`` scans every k-subspace of F_q^n
    instead of the reduced candidate set (feasible only for tiny n and q).
    """
    members = sorted(clique, key=Code.key)
    if not members:
        raise EmptyClique("maximality is only decided for nonempty cliques")
    c0 = members[0]
    field, k = c0.field, c0.k
    n = c0.n if n is None else n
    if any(c.n != n or c.k != k for c in members):
        raise AmbientMismatch("clique members must all be [n, k] codes")
    if naive:
        for X in map(Code, enumerate_k_subspaces(Subspace.full(field, n), k)):
            if X not in clique and is_projective(X) and all(adjacency(X, c) for c in members):
                return False, X
        return True, None
    for T in enumerate_k_subspaces(c0.space, k - 1):
        V = extension_vectors(T)
        gens = np.concatenate(
            [np.broadcast_to(T.basis, (len(V),) + T.basis.shape), V[:, None, :]], axis=1
        )
        hits = np.flatnonzero(projective_mask(field, gens) & _common_neighbour_mask(T, V, members))
        if len(hits):
            witness = Code(row_space(MatF(field, gens[hits[0]])))
            _validate_witness(witness, clique, members)
            return False, witness
    return True, None


def _validate_witness(x: Code, clique, members: list[Code]) -> None:
    if x in clique or not is_projective(x) or not all(adjacency(x, c) for c in members):
        raise RuntimeError(f"internal error: {x} is not a valid extension of the clique")


def duality_dims(m: MatF) -> tuple[int, int]:
    """``(dim Y^perp, dim of the intersection of the brute-force clique)``."""
    Y = topclique.compute_Y(m)
    if not Y:
        raise EmptyY("the duality only applies when Y is nonempty")
    y_perp = orthogonal_complement(span(m.field, Y, m.rows))
    members = list(brute_force_clique(Code.from_generator(m)))
    common = members[0].space
    for c in members[1:]:
        common = intersect(common, c.space)
    return y_perp.dim, common.dim


def verify_duality(m: MatF) -> bool:
    a, b = duality_dims(m)
    return a == b


def count_lines_through_code(c: Code) -> int:
    """Number of lines ``[S, U']_k`` of the Grassmannian containing ``c``, by enumeration."""
    k, n = c.k, c.n
    subs = list(enumerate_k_subspaces(c.space, k - 1))
    sups = list(enumerate_k_superspaces(c.space, k + 1, n))
    count = 0
    for S in subs:
        for Up in sups:
            if contains(c.space, S) and contains(Up, c.space):
                count += 1
    return count


def line_members(S: Subspace, U: Subspace) -> list[Subspace]:
    """All subspaces X with ``S < X < U`` and ``dim X = dim S + 1``, by filtering."""
    return [X for X in enumerate_k_subspaces(U, S.dim + 1) if contains(X, S)]
