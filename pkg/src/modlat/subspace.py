"""Subspaces of GF(p)^d in canonical reduced-row-echelon basis form.

A Subspace is the row space of its canonical RREF basis; two subspaces are
equal iff their canonical bases are identical entry-wise.  All lattice
operations (join = sum, meet = intersection) return canonical values, so
equality after an operation is plain structural equality.
"""

from __future__ import annotations

import numpy as np

from . import gf


class DimensionMismatch(ValueError):
    pass


class Subspace:
    __slots__ = ("p", "ambient_dim", "basis", "pivots", "_key")

    def __init__(self, p: int, ambient_dim: int, rows=None, *, _canonical: np.ndarray | None = None,
                 _pivots: list[int] | None = None):
        self.p = p
        self.ambient_dim = ambient_dim
        if _canonical is not None:
            basis, pivots = _canonical, _pivots
        else:
            a = gf.as_matrix(rows if rows is not None else [], p, cols=ambient_dim)
            if a.shape[1] != ambient_dim:
                raise DimensionMismatch(f"rows have {a.shape[1]} columns, ambient is {ambient_dim}")
            basis, pivots = gf.rref(a, p)
        basis.setflags(write=False)
        self.basis = basis
        self.pivots = pivots
        self._key = (p, ambient_dim, basis.tobytes())

    @classmethod
    def zero(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls(p, ambient_dim, gf.zeros(0, ambient_dim))

    @classmethod
    def full(cls, p: int, ambient_dim: int) -> "Subspace":
        return cls(p, ambient_dim, gf.eye(ambient_dim))

    @classmethod
    def span(cls, p: int, rows) -> "Subspace":
        a = np.array(rows, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1)
        return cls(p, a.shape[1], a)

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    dim = rank

    def is_zero(self) -> bool:
        return self.rank == 0

    def is_full(self) -> bool:
        return self.rank == self.ambient_dim

    def _check(self, other: "Subspace") -> None:
        if self.p != other.p:
            raise DimensionMismatch(f"field mismatch: GF({self.p}) vs GF({other.p})")
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"ambient mismatch: {self.ambient_dim} vs {other.ambient_dim}")

    def join(self, other: "Subspace") -> "Subspace":
        """Smallest subspace containing both (lattice sum)."""
        self._check(other)
        if self.rank == 0 or other.is_full():
            return other
        if other.rank == 0 or self.is_full():
            return self
        if self.rank >= other.rank and self.contains(other):
            return self
        if other.rank >= self.rank and other.contains(self):
            return other
        stacked = np.vstack([self.basis, other.basis])
        return Subspace(self.p, self.ambient_dim, stacked)

    def meet(self, other: "Subspace") -> "Subspace":
        """Largest common subspace, via the kernel of the stacked-basis map."""
        self._check(other)
        if self.is_full() or other.rank == 0:
            return other
        if other.is_full() or self.rank == 0:
            return self
        if self.rank >= other.rank and self.contains(other):
            return other
        if other.rank >= self.rank and other.contains(self):
            return self
        a, b = self.basis, other.basis
        stacked = np.vstack([a, (-b) % self.p])
        w = gf.left_nullspace(stacked, self.p)
        rows = (w[:, : a.shape[0]] @ a) % self.p
        return Subspace(self.p, self.ambient_dim, rows)

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        if other.rank > self.rank:
            return False
        res = gf.row_reduce_against(other.basis, self.basis, self.pivots, self.p)
        return not np.any(res)

    def contains_vector(self, v) -> bool:
        v = gf.as_matrix(v, self.p, cols=self.ambient_dim)
        return not np.any(gf.row_reduce_against(v, self.basis, self.pivots, self.p))

    def compare(self, other: "Subspace") -> str:
        """One of 'equal', 'less' (self strictly inside), 'greater', 'incomparable'."""
        self._check(other)
        if self._key == other._key:
            return "equal"
        if other.contains(self):
            return "less"
        if self.contains(other):
            return "greater"
        return "incomparable"

    def apply(self, m: np.ndarray) -> "Subspace":
        """Image of this subspace under the row-acting map m (ambient x target)."""
        if m.shape[0] != self.ambient_dim:
            raise DimensionMismatch(f"map expects domain {m.shape[0]}, got {self.ambient_dim}")
        return Subspace(self.p, m.shape[1], (self.basis @ m) % self.p)

    def coords_in(self, ambient_basis: np.ndarray, pivots: list[int]) -> np.ndarray:
        """Coordinates of this subspace's basis w.r.t. an enclosing RREF basis."""
        return gf.coords_in_rowspace(self.basis, ambient_basis, pivots, self.p)

    def vectors(self):
        """Iterate over all p^rank vectors (test-oracle sizes only)."""
        k = self.rank
        idx = np.zeros(k, dtype=np.int64)
        while True:
            yield (idx @ self.basis) % self.p if k else np.zeros(self.ambient_dim, dtype=np.int64)
            i = 0
            while i < k:
                idx[i] += 1
                if idx[i] < self.p:
                    break
                idx[i] = 0
                i += 1
            else:
                return
            if k == 0:
                return

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Subspace(GF({self.p})^{self.ambient_dim}, dim {self.rank})"


def map_kernel(m: np.ndarray, p: int, domain_restriction: Subspace | None = None) -> Subspace:
    """{v in the domain (or the restriction) : v @ m = 0}, in domain coordinates."""
    dom, _cod = m.shape
    if domain_restriction is None:
        return Subspace(p, dom, gf.left_nullspace(m, p))
    s = domain_restriction
    if s.ambient_dim != dom:
        raise DimensionMismatch(f"restriction lives in dim {s.ambient_dim}, map domain is {dom}")
    w = gf.left_nullspace((s.basis @ m) % p, p)
    return Subspace(p, dom, (w @ s.basis) % p)


def map_cokernel(m: np.ndarray, p: int) -> tuple[int, np.ndarray]:
    """Cokernel of the row-acting map m: (quotient dim, projection matrix).

    The projection maps the codomain onto the complement of image(m) spanned
    by the non-pivot coordinates of the image's RREF; projection @ m = 0.
    """
    dom, cod = m.shape
    r, piv = gf.rref(m, p)
    npiv = [c for c in range(cod) if c not in piv]
    e = gf.eye(cod)
    reduced = (e - e[:, piv] @ r) % p if piv else e
    return len(npiv), reduced[:, npiv]
