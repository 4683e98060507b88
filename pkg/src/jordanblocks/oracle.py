"""Ground-truth Jordan types from matrix ranks.

The authoritative decomposition path: multiplicities come from kernel
dimensions of powers of X = u - 1, each rank extracted by exact Gaussian
elimination over GF(p). Powers are never formed densely from scratch; a row
basis of the row space of X^k is carried along and multiplied by X once per
step, which is what makes the large tensor-square sweeps affordable. All
arithmetic is integer.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
import scipy.sparse as sparse

from .linalg import PrimeFieldMatrix, exterior_square, jordan_block, symmetric_square
from .partitions import JordanType, PrimeChar

DEFAULT_MAX_ENTRIES = 40_000

_SPARSE_CUTOFF = 256


class OracleCapError(ValueError):
    """A requested matrix would exceed the configured entry cap."""


def _check_cap(side: int, max_entries: int) -> None:
    if side * side > max_entries:
        raise OracleCapError(
            f"{side}x{side} matrix ({side * side} entries) exceeds the cap of "
            f"{max_entries}; pass a larger max_entries to allow it"
        )


def _inv_table(p: int, dtype) -> np.ndarray:
    return np.array([0] + [pow(a, p - 2, p) for a in range(1, p)], dtype=dtype)


def _working_dtype(p: int, max_col_terms: int):
    """Narrowest integer dtype that cannot overflow during the chain.

    The product step sums at most max_col_terms products of entries < p; the
    elimination step subtracts one such product from a reduced entry. All
    partial sums are non-negative and bounded by the final value, so a dtype
    that holds the bound holds every intermediate.
    """
    bound = max(max_col_terms, 1) * (p - 1) * (p - 1) + p
    for dt, lim in ((np.int8, 127), (np.int16, 32767), (np.int32, 2**31 - 1)):
        if bound <= lim:
            return dt
    return np.int64


def _echelon(work: np.ndarray, p: int, inv: np.ndarray) -> np.ndarray:
    """Row-echelon basis of the row space of work, pivots normalized to 1.

    work must already be reduced mod p; it is consumed as scratch. Vectorized
    rounds: every active row is bucketed by leading column, one row per new
    column is accepted as a pivot, and all active rows then subtract their
    multiple of the pivot row sharing their lead. A row just accepted
    subtracts its own normalized copy and dies; every other surviving row's
    leading column strictly advances, so the loop terminates.

    The elimination adds coef * (p - coef(pivot)) products, keeping every
    entry in [0, (p-1)^2 + p - 1], so the reduction is a table gather instead
    of an integer-division pass; division is what would otherwise dominate
    the loop. Very large p falls back to a plain mod rather than building a
    quadratic-size table.
    """
    ncols = work.shape[1]
    acc = np.zeros((min(work.shape[0], ncols), ncols), dtype=work.dtype)
    pivot_at = np.full(ncols, -1, dtype=np.intp)
    count = 0
    act = work
    top = (p - 1) * (p - 1) + p
    canon = None
    if top <= 4096:
        canon = np.array([v % p for v in range(top)], dtype=act.dtype)
    idx = np.arange(work.shape[0])
    while act.shape[0]:
        leads = np.argmax(act != 0, axis=1)
        coef = act[idx[: act.shape[0]], leads]
        n_alive = int(np.count_nonzero(coef))
        if n_alive == 0:
            break
        if n_alive < act.shape[0]:
            alive = coef != 0
            act = act[alive]
            leads = leads[alive]
            coef = coef[alive]
        pidx = pivot_at[leads]
        if pidx.min() < 0:
            fresh = pidx < 0
            cols, order = np.unique(leads[fresh], return_index=True)
            take = np.flatnonzero(fresh)[order]
            rows = act[take] * inv[coef[take]][:, None] % p
            acc[count : count + len(cols)] = rows
            pivot_at[cols] = count + np.arange(len(cols))
            count += len(cols)
            pidx = pivot_at[leads]
        piv = acc[pidx]
        np.subtract(p, coef, out=coef)
        np.multiply(piv, coef[:, None], out=piv)
        np.add(act, piv, out=act)
        if canon is not None:
            act = np.take(canon, act)
        else:
            np.mod(act, p, out=act)
    return acc[:count]


def _rows_to_ints(bits: np.ndarray) -> list[int]:
    """Each 0/1 row becomes one arbitrary-precision integer, bit i = column i."""
    packed = np.packbits(bits, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _ints_to_rows(vals, n: int) -> np.ndarray:
    nbytes = (n + 7) >> 3
    buf = b"".join(v.to_bytes(nbytes, "little") for v in vals)
    packed = np.frombuffer(buf, dtype=np.uint8).reshape(-1, nbytes)
    return np.unpackbits(packed, axis=1, count=n, bitorder="little")


def _echelon_gf2(rows: list[int]) -> dict[int, int]:
    """GF(2) echelon with rows held as Python ints, keyed by pivot column.

    A row is one big integer, elimination is one xor, and the leading column
    is the lowest set bit; the classic insert-and-reduce walk runs at bigint
    speed with no per-step array dispatch, which is what makes the p = 2
    chains cheap.
    """
    pivots: dict[int, int] = {}
    for v in rows:
        while v:
            c = (v & -v).bit_length() - 1
            w = pivots.get(c)
            if w is None:
                pivots[c] = v
                break
            v ^= w
    return pivots


def _rank_chain_gf2(x_op, n: int) -> list[int]:
    """The p = 2 chain; ranks match _rank_chain exactly.

    Eliminations run on integer-packed rows; the product step unpacks the
    basis, multiplies by X with ordinary sparse integer arithmetic, and keeps
    the parity.
    """
    dense = np.asarray(_to_dense_rows(x_op), dtype=np.uint8)
    ranks = [n]
    pivots = _echelon_gf2(_rows_to_ints(dense))
    while True:
        r = len(pivots)
        if r == ranks[-1] and r > 0:
            raise ValueError("matrix is not unipotent: rank of powers stalls above zero")
        ranks.append(r)
        if r == 0:
            return ranks
        rows = _ints_to_rows(pivots.values(), n)
        prod = np.asarray(rows @ x_op)
        np.bitwise_and(prod, 1, out=prod)
        pivots = _echelon_gf2(_rows_to_ints(prod.astype(np.uint8)))


def _rank_chain(x_op, n: int, p: int) -> list[int]:
    """[rank X^0, rank X^1, ...] down to rank 0, for nilpotent X.

    x_op is a dense ndarray or a scipy sparse matrix; either way the step is
    an exact integer product of the current row basis with X. A rank that
    stalls above zero means X was not nilpotent.
    """
    if p == 2:
        return _rank_chain_gf2(x_op, n)
    if sparse.issparse(x_op):
        col_terms = int(x_op.getnnz(axis=0).max()) if x_op.nnz else 0
    else:
        col_terms = x_op.shape[0]
    dtype = _working_dtype(p, col_terms)
    x_op = x_op.astype(dtype)
    inv = _inv_table(p, dtype)
    ranks = [n]
    basis = _echelon(_to_dense_rows(x_op), p, inv)
    while True:
        r = basis.shape[0]
        if r == ranks[-1] and r > 0:
            raise ValueError("matrix is not unipotent: rank of powers stalls above zero")
        ranks.append(r)
        if r == 0:
            return ranks
        basis = np.asarray(basis @ x_op)
        np.mod(basis, p, out=basis)
        basis = _echelon(basis, p, inv)


def _to_dense_rows(x_op) -> np.ndarray:
    if sparse.issparse(x_op):
        return x_op.toarray()
    return x_op.copy()


def _blocks_from_ranks(ranks: list[int]) -> JordanType:
    blocks = {}
    for m in range(1, len(ranks)):
        before = ranks[m - 1]
        at = ranks[m]
        after = ranks[m + 1] if m + 1 < len(ranks) else 0
        mult = before + after - 2 * at
        if mult:
            blocks[m] = mult
    return JordanType(blocks)


def jordan_type_of(M: PrimeFieldMatrix) -> JordanType:
    """Jordan type of a unipotent matrix from kernel dimensions of powers.

    r_m = 2 dim Ker X^m - dim Ker X^{m+1} - dim Ker X^{m-1} with X = M - 1;
    non-unipotent input is detected and rejected.
    """
    if not M.is_square():
        raise ValueError("jordan_type_of needs a square matrix")
    n = M.rows
    if n == 0:
        return JordanType()
    p = M.p
    X = (M.array - np.eye(n, dtype=np.int64)) % p
    x_op = sparse.csr_matrix(X) if n >= _SPARSE_CUTOFF else X
    t = _blocks_from_ranks(_rank_chain(x_op, n, p))
    assert t.dim == n
    return t


@lru_cache(maxsize=None)
def _tensor_block_type(m: int, n: int, p: int) -> JordanType:
    a = sparse.csr_matrix(jordan_block(m, p).array)
    b = sparse.csr_matrix(jordan_block(n, p).array)
    prod = sparse.kron(a, b, format="csr")
    side = m * n
    x = (prod - sparse.identity(side, dtype=np.int64, format="csr")).tocsr()
    x.data %= p
    x_op = x if side >= _SPARSE_CUTOFF else np.asarray(x.todense(), dtype=np.int64)
    t = _blocks_from_ranks(_rank_chain(x_op, side, p))
    assert t.dim == side
    return t


def tensor_block_type(
    m: int, n: int, p: int, *, max_entries: int = DEFAULT_MAX_ENTRIES
) -> JordanType:
    """Jordan type of J_m tensor J_n over GF(p), memoized by (min, max, p)."""
    if m < 1 or n < 1:
        raise ValueError("tensor factors must have positive dimension")
    PrimeChar(int(p))
    lo, hi = sorted((m, n))
    _check_cap(lo * hi, max_entries)
    return _tensor_block_type(lo, hi, int(p))


@lru_cache(maxsize=None)
def _ext2_single(d: int, p: int) -> JordanType:
    if d == 1:
        return JordanType()
    return jordan_type_of(exterior_square(jordan_block(d, p)))


@lru_cache(maxsize=None)
def _sym2_single(d: int, p: int) -> JordanType:
    return jordan_type_of(symmetric_square(jordan_block(d, p)))


def tensor_dual_type(
    t: JordanType, p: int, *, max_entries: int = DEFAULT_MAX_ENTRIES
) -> JordanType:
    """Jordan type of u on V tensor V*, summed over ordered pairs of blocks.

    Valid because every indecomposable summand is self-dual, so V* has the
    same block type as V.
    """
    if not t:
        raise ValueError("empty Jordan type")
    out = JordanType()
    for d1, m1 in t:
        for d2, m2 in t:
            part = tensor_block_type(d1, d2, p, max_entries=max_entries)
            out = out + JordanType({s: m * m1 * m2 for s, m in part})
    assert out.dim == t.dim**2
    return out


def _square_type(
    t: JordanType, p: int, single, diag_side: int, max_entries: int
) -> JordanType:
    out = JordanType()
    for i, (d1, m1) in enumerate(t):
        _check_cap(d1 * (d1 + diag_side) // 2, max_entries)
        part = single(d1, p)
        if part and m1:
            out = out + JordanType({s: m * m1 for s, m in part})
        cross_self = m1 * (m1 - 1) // 2
        if cross_self:
            part = tensor_block_type(d1, d1, p, max_entries=max_entries)
            out = out + JordanType({s: m * cross_self for s, m in part})
        for d2, m2 in list(t)[i + 1 :]:
            part = tensor_block_type(d1, d2, p, max_entries=max_entries)
            out = out + JordanType({s: m * m1 * m2 for s, m in part})
    return out


def ext2_type(
    t: JordanType, p: int, *, max_entries: int = DEFAULT_MAX_ENTRIES
) -> JordanType:
    """Jordan type of u on the exterior square of V."""
    if not t:
        raise ValueError("empty Jordan type")
    PrimeChar(int(p))
    out = _square_type(t, int(p), _ext2_single, -1, max_entries)
    assert out.dim == t.dim * (t.dim - 1) // 2
    return out


def sym2_type(
    t: JordanType, p: int, *, max_entries: int = DEFAULT_MAX_ENTRIES
) -> JordanType:
    """Jordan type of u on the symmetric square of V; needs p > 2."""
    if not t:
        raise ValueError("empty Jordan type")
    if p == 2:
        raise ValueError("sym2_type requires p > 2")
    PrimeChar(int(p))
    out = _square_type(t, int(p), _sym2_single, 1, max_entries)
    assert out.dim == t.dim * (t.dim + 1) // 2
    return out
