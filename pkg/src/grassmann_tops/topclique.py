"""Cliques of the projective-code graph contained in a fixed (k+1)-space.

Given a generator ``M`` (rows ``v_1..v_{k+1}``, columns ``l_1..l_n``) of a
projective code ``U = [n, k+1]_q``, the k-dimensional subcodes of ``U`` are
the codes ``C(w) = {a M : a . w = 0}`` for nonzero ``w`` in F_q^{k+1}.
``C(w)`` is non-degenerate iff ``w`` is not proportional to a column of ``M``
(the set W), and projective iff in addition ``w`` is not of the form
``alpha l_i + beta l_j`` with nonzero scalars (the set Y).  The projective
k-codes inside ``U`` therefore form the clique ``{C(y) : y in Y}``, and the
dimension of the span of Y decides how that clique sits among the lines of
the Grassmannian and whether it is a maximal clique.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .codes import Code, is_projective, is_projective_matrix, projective_mask
from .errors import NotProjective, ParameterRange, RankDeficient, ZeroVector
from .matq import (
    MatF,
    Subspace,
    all_vectors,
    extension_vectors,
    kernel,
    membership_mask,
    normalize_rows,
    orthogonal_complement,
    rank,
    row_space,
    span,
)
from .qanalog import q_binomial, q_bracket

__all__ = [
    "CliqueAnalysis",
    "LineClass",
    "LineKind",
    "Reason",
    "Verdict",
    "analyze",
    "classify_lines",
    "clique_core",
    "code_C",
    "compute_W",
    "compute_Y",
    "decide_star_and_top",
    "decide_top",
    "q_binomial",
    "q_bracket",
    "top_clique",
]

Vector = tuple[int, ...]


class LineKind(str, enum.Enum):
    ALL = "AllLines"
    MANY = "ManyLines"
    ONE = "OneLine"
    NONE = "NoLine"


@dataclass(frozen=True)
class LineClass:
    kind: LineKind
    count: int | None = None
    core: Subspace | None = None  # the (k-1)-space S of the unique line [S, U]_k

    def __str__(self) -> str:
        if self.kind is LineKind.MANY:
            return f"ManyLines({self.count})"
        if self.kind is LineKind.ONE:
            return f"OneLine(dim S = {self.core.dim})"
        return self.kind.value


class Reason(str, enum.Enum):
    EMPTY_OR_SINGLETON = "NotMaximal_EmptyOrSingleton"
    PROPER_SUBSET_OF_STAR = "NotMaximal_ProperSubsetOfStar"
    TOP_NO_LINE = "Top_NoLine"
    TOP_STAR_EQUALS_TOP = "Top_StarEqualsTop"


@dataclass(frozen=True)
class Verdict:
    is_top: bool
    is_star_too: bool
    reason: Reason
    # number of projective k-codes containing S, when the star test ran
    star_size: int | None = None


@dataclass(frozen=True)
class CliqueAnalysis:
    u: Code
    w_set: list[Vector]
    y_set: list[Vector]
    clique: frozenset[Code]
    span_y_dim: int
    core: Subspace | None
    line_class: LineClass
    verdict: Verdict

    @property
    def k(self) -> int:
        return self.u.k - 1

    @property
    def n(self) -> int:
        return self.u.n

    def sorted_clique(self) -> list[Code]:
        return sorted(self.clique, key=Code.key)


def _validate(m: MatF) -> None:
    r = rank(m)
    if r < m.rows:
        raise RankDeficient(f"generator has {m.rows} rows but rank {r}")
    if not is_projective_matrix(m):
        raise NotProjective("generator has a zero column or two proportional columns")


def _check_range(m: MatF) -> None:
    k, n = m.rows - 1, m.cols
    if not 1 < k < n - 1:
        raise ParameterRange(f"need 1 < k < n-1, got k={k}, n={n}")


def _as_tuples(arr: np.ndarray) -> list[Vector]:
    return [tuple(int(x) for x in row) for row in arr]


def compute_W(m: MatF) -> list[Vector]:
    """Nonzero vectors of F_q^{k+1} not proportional to any column of ``m``, in lexicographic order."""
    _validate(m)
    field = m.field
    column_points = set(_as_tuples(normalize_rows(field, m.data.T)))
    vecs = all_vectors(field, m.rows)
    norm = _as_tuples(normalize_rows(field, vecs))
    return [
        v for v, p in zip(_as_tuples(vecs), norm) if any(v) and p not in column_points
    ]


def _two_column_combinations(m: MatF) -> set[Vector]:
    field = m.field
    scalars = np.asarray(field.nonzero(), dtype=field.dtype)
    out: set[Vector] = set()
    for i, j in itertools.permutations(range(m.cols), 2):
        li, lj = m.data[:, i], m.data[:, j]
        combos = field.add(
            field.mul(scalars[:, None, None], li[None, None, :]),
            field.mul(scalars[None, :, None], lj[None, None, :]),
        )
        out.update(_as_tuples(combos.reshape(-1, m.rows)))
    return out


def _outside_pair_spans(m: MatF) -> list[Vector]:
    field, k1 = m.field, m.rows
    covered: set[Vector] = {(0,) * k1}
    cols = [m.data[:, j] for j in range(m.cols)]
    for c in cols:
        covered.update(span(field, [c], k1).vectors())
    for a, b in itertools.combinations(cols, 2):
        covered.update(span(field, [a, b], k1).vectors())
    return [v for v in _as_tuples(all_vectors(field, k1)) if v not in covered]


def compute_Y(m: MatF) -> list[Vector]:
    """The vectors of W that are not ``alpha l_i + beta l_j`` (alpha, beta nonzero, i != j).

    Computed twice, once literally from that description and once as the
    complement of the union of all spans of one or two columns; the two
    results must agree.
    """
    W = compute_W(m)
    combos = _two_column_combinations(m)
    Y = [w for w in W if w not in combos]
    if Y != _outside_pair_spans(m):
        raise RuntimeError("internal error: the two constructions of Y disagree")
    return Y


def code_C(m: MatF, w) -> Code:
    """The k-code ``{a M : a . w = 0}`` inside the row space of ``m``."""
    field = m.field
    w = np.asarray(w, dtype=field.dtype).reshape(1, m.rows)
    if not w.any():
        raise ZeroVector("C(w) needs a nonzero w")
    K = kernel(MatF(field, w))
    return Code(row_space(K.generator @ m))


def top_clique(m: MatF) -> frozenset[Code]:
    """All projective k-codes contained in the row space of ``m``, as ``{C(y) : y in Y}``."""
    U = row_space(m)
    clique = frozenset(code_C(m, y) for y in compute_Y(m))
    for c in clique:
        if not is_projective(c) or c.k != U.dim - 1:
            raise RuntimeError(f"internal error: {c} should be a projective {U.dim - 1}-code")
    return clique


def _span_dim(field, vectors: list[Vector], k1: int) -> tuple[int, Subspace]:
    s = span(field, vectors, k1)
    return s.dim, s


def _core_from(m: MatF, span_y: Subspace) -> Subspace:
    # a M lies in every C(y) exactly when a is orthogonal to every y
    perp = orthogonal_complement(span_y)
    if perp.dim == 0:
        return Subspace.zero(m.field, m.cols)
    return row_space(perp.generator @ m)


def clique_core(m: MatF) -> tuple[int, Subspace | None]:
    """``(dim <Y>, S)`` where S is the common intersection of the clique (None if Y is empty)."""
    Y = compute_Y(m)
    d, span_y = _span_dim(m.field, Y, m.rows)
    if not Y:
        return 0, None
    return d, _core_from(m, span_y)


def _line_class(m: MatF, span_y_dim: int, core: Subspace | None) -> LineClass:
    k, n, q = m.rows - 1, m.cols, m.field.q
    if span_y_dim == 0:
        return LineClass(LineKind.ALL)
    if span_y_dim == 1:
        return LineClass(LineKind.MANY, count=q_bracket(k, q) * q_bracket(n - k, q))
    if span_y_dim == 2:
        return LineClass(LineKind.ONE, count=1, core=core)
    return LineClass(LineKind.NONE, count=0)


def classify_lines(m: MatF) -> LineClass:
    """How many lines ``[S, U']_k`` of the Grassmannian contain the clique.

    ``AllLines`` for an empty clique, ``ManyLines([k]_q [n-k]_q)`` for a single
    code, ``OneLine(S)`` when ``dim <Y> = 2`` and ``NoLine`` otherwise.
    """
    _check_range(m)
    d, core = clique_core(m)
    return _line_class(m, d, core)


def _star_test(m: MatF, core: Subspace, clique: frozenset[Code]) -> tuple[bool, int]:
    """Do all projective k-codes containing ``core`` lie in the row space of ``m``?

    Scans the ``[n-k+1]_q`` superspaces ``core + <v>``.  Returns the answer and
    the number of projective superspaces found.
    """
    field = m.field
    U = row_space(m)
    V = extension_vectors(core)
    gens = np.concatenate(
        [np.broadcast_to(core.basis, (len(V),) + core.basis.shape), V[:, None, :]], axis=1
    )
    projective = projective_mask(field, gens)
    inside = membership_mask(U, V)
    found = frozenset(Code(row_space(MatF(field, g))) for g in gens[projective & inside])
    if found != clique:
        raise RuntimeError("internal error: projective codes between S and U differ from the clique")
    return bool(np.all(inside[projective])), int(projective.sum())


def _verdict(m: MatF, line: LineClass, clique: frozenset[Code]) -> Verdict:
    if line.kind in (LineKind.ALL, LineKind.MANY):
        return Verdict(False, False, Reason.EMPTY_OR_SINGLETON)
    if line.kind is LineKind.NONE:
        return Verdict(True, False, Reason.TOP_NO_LINE)
    star_is_top, star_size = _star_test(m, line.core, clique)
    if star_is_top:
        return Verdict(True, True, Reason.TOP_STAR_EQUALS_TOP, star_size)
    return Verdict(False, False, Reason.PROPER_SUBSET_OF_STAR, star_size)


def analyze(m: MatF) -> CliqueAnalysis:
    """Run the whole classification once and collect every intermediate result."""
    _validate(m)
    _check_range(m)
    field = m.field
    W = compute_W(m)
    Y = compute_Y(m)
    clique = frozenset(code_C(m, y) for y in Y)
    d, span_y = _span_dim(field, Y, m.rows)
    core = _core_from(m, span_y) if Y else None
    line = _line_class(m, d, core)
    return CliqueAnalysis(
        u=Code.from_generator(m),
        w_set=W,
        y_set=Y,
        clique=clique,
        span_y_dim=d,
        core=core,
        line_class=line,
        verdict=_verdict(m, line, clique),
    )


def decide_top(m: MatF) -> Verdict:
    """Is the clique of projective k-codes in ``U`` a maximal clique (a top)?"""
    _check_range(m)
    clique = top_clique(m)
    d, core = clique_core(m)
    return _verdict(m, _line_class(m, d, core), clique)


def decide_star_and_top(m: MatF) -> bool:
    """True iff the clique is simultaneously a top and a star."""
    return decide_top(m).reason is Reason.TOP_STAR_EQUALS_TOP
