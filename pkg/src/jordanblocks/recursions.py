"""Closed-form identities for Jordan types of tensor products of blocks.

Each function here predicts the Jordan type of J_m tensor J_n over GF(p) in
some restricted regime, without building a matrix. They serve as fast paths
and as independent checks: the test suite compares every one of them against
the elimination-based oracle on its stated domain, and none is trusted
outside that domain.
"""

from __future__ import annotations

from .oracle import DEFAULT_MAX_ENTRIES, tensor_block_type
from .partitions import JordanType, PrimeChar

__all__ = ["clebsch_gordan", "free_rule", "gpx_scale", "reflect_rule"]


def gpx_scale(base: JordanType, alpha: int, p: int) -> JordanType:
    """Scale a tensor decomposition from (m, n) up to (p^alpha m, p^alpha n).

    If base is the Jordan type of J_m tensor J_n over GF(p), the returned
    type is that of J_{p^alpha m} tensor J_{p^alpha n}: every block size and
    every multiplicity is multiplied by p^alpha. alpha = 0 is the identity.
    """
    if alpha < 0:
        raise ValueError(f"scaling exponent must be non-negative, got {alpha}")
    PrimeChar(int(p))
    q = int(p) ** alpha
    return JordanType({size * q: mult * q for size, mult in base})


def reflect_rule(
    m: int, n: int, p: int, *, max_entries: int = DEFAULT_MAX_ENTRIES
) -> JordanType | None:
    """Fold (m, n) across a power of p that separates max(m, n) from m + n.

    Applicable when some power q = p^alpha satisfies max(m, n) < q < m + n;
    such a q is unique because the next power up is already at least 2q.
    The type is then m + n - q full blocks of size q plus the type of the
    complementary pair (q - m, q - n), which the oracle supplies; max_entries
    is forwarded to that oracle call. Returns None when no power of p lies
    in the window.
    """
    if m < 1 or n < 1:
        raise ValueError("tensor factors must have positive dimension")
    PrimeChar(int(p))
    q = int(p)
    while q < m + n:
        if q > max(m, n):
            complement = tensor_block_type(q - m, q - n, p, max_entries=max_entries)
            return JordanType({q: m + n - q}) + complement
        q *= p
    return None


def free_rule(m: int, alpha: int, p: int) -> JordanType:
    """Type of J_m tensor J_q for q = p^alpha and m <= q: m blocks of size q.

    A block whose size is a full power of p absorbs any factor no larger
    than itself, so the product splits into m copies of the largest block.
    """
    if alpha < 1:
        raise ValueError(f"exponent must be positive, got {alpha}")
    PrimeChar(int(p))
    q = int(p) ** alpha
    if not 1 <= m <= q:
        raise ValueError(f"factor dimension {m} must lie in 1..{q}")
    return JordanType({q: m})


def clebsch_gordan(m: int, n: int) -> JordanType:
    """Characteristic-zero ladder: sizes m+n-1, m+n-3, ..., |m-n|+1, once each.

    Over GF(p) this matches the true decomposition whenever m + n - 1 <= p,
    a sufficient bound enforced by callers and verified against the oracle
    in the tests; the function itself is prime-free and never fails.
    """
    if m < 1 or n < 1:
        raise ValueError("tensor factors must have positive dimension")
    return JordanType({size: 1 for size in range(m + n - 1, abs(m - n), -2)})
