"""q-analogs of integers and binomial coefficients, in exact integer arithmetic."""

from __future__ import annotations


def _check_q(q: int) -> None:
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")


def q_bracket(n: int, q: int) -> int:
    """``[n]_q = (q**n - 1) / (q - 1)``, the number of points of PG(n-1, q)."""
    _check_q(q)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return (q**n - 1) // (q - 1)


def q_binomial(n: int, k: int, q: int) -> int:
    """Gaussian binomial coefficient: the number of k-dimensional subspaces of F_q^n.

    Computed by iterated exact division, so every intermediate value is an
    integer (the partial products are themselves Gaussian binomials).
    """
    _check_q(q)
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    k = min(k, n - k)
    result = 1
    for i in range(k):
        num = result * (q ** (n - i) - 1)
        den = q ** (i + 1) - 1
        result, rem = divmod(num, den)
        assert rem == 0
    return result
