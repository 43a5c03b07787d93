"""Exact matrix arithmetic over a prime field GF(p).

Matrices are plain numpy int64 arrays with entries reduced mod p.  Row-vector
convention throughout the package: a linear map f: U -> V with dim U = m,
dim V = n is an (m, n) matrix M acting by v |-> v @ M.
"""

from __future__ import annotations

import numpy as np

MAX_PRIME = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not (2 <= p <= MAX_PRIME) or not is_prime(p):
        raise ValueError(f"field order must be a prime in [2, {MAX_PRIME}], got {p}")
    return p


def inv_mod(x: int, p: int) -> int:
    return pow(int(x) % p, p - 2, p)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def as_matrix(rows, p: int, cols: int | None = None) -> np.ndarray:
    """Coerce nested lists / arrays to a canonical (m, n) int64 array mod p."""
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, cols or 0)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    if cols is not None and a.shape[1] != cols and a.shape[0] == 0:
        a = a.reshape(0, cols)
    return a % p


_INV_TABLES: dict[int, np.ndarray] = {}


def _inv_table(p: int) -> np.ndarray:
    tbl = _INV_TABLES.get(p)
    if tbl is None:
        tbl = np.array([0] + [pow(x, p - 2, p) for x in range(1, p)], dtype=np.int64)
        _INV_TABLES[p] = tbl
    return tbl


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form mod p.  Returns (nonzero rows, pivot columns)."""
    a = a.copy() % p
    rows, cols = a.shape
    pivots: list[int] = []
    if rows == 0 or cols == 0:
        return a[:0], pivots
    inv = _inv_table(p)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        colvals = a[r:, c]
        nz = colvals.nonzero()[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        head = int(a[r, c])
        if head != 1:
            a[r] = (a[r] * int(inv[head])) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = col.nonzero()[0]
        if hit.size:
            a[hit] = (a[hit] - col[hit, None] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(a: np.ndarray, p: int) -> int:
    return rref(a, p)[0].shape[0]


def right_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : a @ x = 0} for an (m, n) matrix; shape (k, n)."""
    m, n = a.shape
    r, piv = rref(a, p)
    free = [c for c in range(n) if c not in piv]
    basis = zeros(len(free), n)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(piv):
            basis[k, pc] = (-int(r[i, fc])) % p
    return basis


def left_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of {v : v @ a = 0} for an (m, n) matrix; shape (k, m)."""
    return right_nullspace(a.T, p)


def row_reduce_against(v: np.ndarray, basis: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Residual of rows v after eliminating along an RREF basis."""
    if basis.shape[0] == 0 or v.shape[0] == 0:
        return v % p
    coeff = v[:, pivots]
    return (v - coeff @ basis) % p


def coords_in_rowspace(v: np.ndarray, basis: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Coefficients c with c @ basis = v; raises if v is not in the row space."""
    coeff = v[:, pivots] % p
    if np.any((v - coeff @ basis) % p):
        raise ValueError("vector not in row space")
    return coeff
