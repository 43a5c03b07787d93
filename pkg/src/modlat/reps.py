"""Representations of the central-orientation quivers for D^{2,2,2} and D^4.

Two carriers:

* SubspaceRep -- the lattice-facing form: a chain of subspaces of X0 per arm
  (X_i <= Y_i <= X0 for d222, Y_i <= X0 for d4), ambient GF(p)^d.
* MatRep -- the quiver form: one matrix per arrow, row-vector convention.

The Coxeter functor Phi+ is built twice: on SubspaceReps via the product-space
construction (the kernel of the sum map, with the coordinate-pattern
subspaces), and on MatReps as the composite of reflection functors at sinks.
Phi- is the reverse composite of reflection functors at sources.  The
elementary maps phi_i are the per-arm coordinate projections of the product
space; CoxeterStep keeps their matrices so phi-compositions can be chained.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import gf
from .subspace import Subspace, map_cokernel
from .terms import D222, D4, Evaluator, Term

ARMS = {D222: 3, D4: 4}


class RepError(ValueError):
    pass


# --- quiver shapes -----------------------------------------------------------

@dataclass(frozen=True)
class Quiver:
    kind: str
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...]  # (source, target)

    def sources_into(self, v):
        return [i for i, (s, t) in enumerate(self.arrows) if t == v]

    def targets_of(self, v):
        return [i for i, (s, t) in enumerate(self.arrows) if s == v]


E6_QUIVER = Quiver(
    D222,
    ("x1", "y1", "x2", "y2", "x3", "y3", "x0"),
    (("x1", "y1"), ("x2", "y2"), ("x3", "y3"),
     ("y1", "x0"), ("y2", "x0"), ("y3", "x0")),
)

D4_QUIVER = Quiver(
    D4,
    ("e1", "e2", "e3", "e4", "x0"),
    (("e1", "x0"), ("e2", "x0"), ("e3", "x0"), ("e4", "x0")),
)

QUIVERS = {D222: E6_QUIVER, D4: D4_QUIVER}

# display order for dimension vectors, following the published layout
DIM_ORDER = {
    D222: ("x1", "y1", "x0", "y2", "x2", "y3", "x3"),
    D4: ("e1", "e2", "e3", "e4", "x0"),
}


@dataclass
class MatRep:
    """Matrix-form representation: dims per vertex, one matrix per arrow."""

    kind: str
    p: int
    dims: dict[str, int]
    mats: list[np.ndarray]  # parallel to QUIVERS[kind].arrows

    def __post_init__(self):
        q = QUIVERS[self.kind]
        for (s, t), m in zip(q.arrows, self.mats):
            if m.shape != (self.dims[s], self.dims[t]):
                raise RepError(f"arrow {s}->{t}: matrix {m.shape}, dims "
                               f"({self.dims[s]}, {self.dims[t]})")

    @property
    def quiver(self) -> Quiver:
        return QUIVERS[self.kind]

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in DIM_ORDER[self.kind])

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.dims.values())

    def arrow_matrix(self, src: str, tgt: str) -> np.ndarray:
        idx = self.quiver.arrows.index((src, tgt))
        return self.mats[idx]


@dataclass
class SubspaceRep:
    """Subspace-form representation inside X0 = GF(p)^ambient."""

    kind: str
    p: int
    ambient: int
    spaces: dict[str, Subspace]

    def __post_init__(self):
        full = self.top
        for name, s in self.spaces.items():
            if s.p != self.p or s.ambient_dim != self.ambient:
                raise RepError(f"{name} not a subspace of the top space")
        if self.kind == D222:
            for i in (1, 2, 3):
                if not self.spaces[f"y{i}"].contains(self.spaces[f"x{i}"]):
                    raise RepError(f"chain violation: x{i} not inside y{i}")
        elif set(self.spaces) != {f"e{i}" for i in range(1, 5)}:
            raise RepError("d4 representation needs e1..e4")

    @property
    def top(self) -> Subspace:
        return Subspace.full(self.p, self.ambient)

    def dim_vector(self) -> tuple[int, ...]:
        out = []
        for v in DIM_ORDER[self.kind]:
            out.append(self.ambient if v == "x0" else self.spaces[v].rank)
        return tuple(out)

    def evaluator(self, validate: bool = False) -> Evaluator:
        return Evaluator(self.spaces, self.top, validate=validate)

    def evaluate(self, t: Term) -> Subspace:
        # persistent memo: evaluations of shared subterms are reused across calls
        cached = getattr(self, "_eval", None)
        if cached is None:
            cached = self.evaluator()
            object.__setattr__(self, "_eval", cached)
        return cached(t)


def to_subspace(rep: MatRep) -> SubspaceRep:
    """Lattice semantics of a matrix representation: images inside X0."""
    p, d0 = rep.p, rep.dims["x0"]
    spaces = {}
    if rep.kind == D222:
        for i in (1, 2, 3):
            ji = rep.arrow_matrix(f"y{i}", "x0")
            ii = rep.arrow_matrix(f"x{i}", f"y{i}")
            spaces[f"y{i}"] = Subspace(p, d0, ji)
            spaces[f"x{i}"] = Subspace(p, d0, (ii @ ji) % p)
    else:
        for i in (1, 2, 3, 4):
            spaces[f"e{i}"] = Subspace(p, d0, rep.arrow_matrix(f"e{i}", "x0"))
    return SubspaceRep(rep.kind, p, d0, spaces)


# --- projectives and injectives ---------------------------------------------

def projective(kind: str, vertex: str, p: int) -> MatRep:
    """Indecomposable projective at a vertex (dims 1 along the path to x0)."""
    q = QUIVERS[kind]
    if vertex not in q.vertices:
        raise RepError(f"unknown vertex {vertex!r}")
    on_path = {vertex}
    # path from vertex toward x0 in the central orientation
    cur = vertex
    while cur != "x0":
        nxt = [t for (s, t) in q.arrows if s == cur][0]
        on_path.add(nxt)
        cur = nxt
    dims = {v: int(v in on_path) for v in q.vertices}
    mats = [gf.eye(1) if (s in on_path and t in on_path) else gf.zeros(dims[s], dims[t])
            for s, t in q.arrows]
    return MatRep(kind, p, dims, mats)


def injective(kind: str, vertex: str, p: int) -> MatRep:
    """Indecomposable injective at a vertex (dims 1 on vertices mapping into it)."""
    q = QUIVERS[kind]
    if vertex not in q.vertices:
        raise RepError(f"unknown vertex {vertex!r}")
    into = {vertex}
    changed = True
    while changed:
        changed = False
        for s, t in q.arrows:
            if t in into and s not in into:
                into.add(s)
                changed = True
    dims = {v: int(v in into) for v in q.vertices}
    mats = [gf.eye(1) if (s in into and t in into) else gf.zeros(dims[s], dims[t])
            for s, t in q.arrows]
    return MatRep(kind, p, dims, mats)


# --- reflection functors ------------------------------------------------------

def _reflect_plus(rep: MatRep, v: str, arrows, dims, mats) -> None:
    """F+ at a sink v (in-place on the working arrow list)."""
    incoming = [i for i, (s, t) in enumerate(arrows) if t == v]
    srcs = [arrows[i][0] for i in incoming]
    total = sum(dims[s] for s in srcs)
    stacked = gf.zeros(total, dims[v])
    off = 0
    offsets = {}
    for i, s in zip(incoming, srcs):
        offsets[s] = off
        stacked[off:off + dims[s]] = mats[i]
        off += dims[s]
    ker = gf.left_nullspace(stacked, rep.p)  # rows span ker(+: sum -> V_v)
    new_dim = ker.shape[0]
    for i, s in zip(incoming, srcs):
        o = offsets[s]
        arrows[i] = (v, s)
        mats[i] = ker[:, o:o + dims[s]].copy()
    dims[v] = new_dim


def _reflect_minus(rep: MatRep, v: str, arrows, dims, mats) -> None:
    """F- at a source v."""
    outgoing = [i for i, (s, t) in enumerate(arrows) if s == v]
    tgts = [arrows[i][1] for i in outgoing]
    total = sum(dims[t] for t in tgts)
    combined = gf.zeros(dims[v], total)
    off = 0
    offsets = {}
    for i, t in zip(outgoing, tgts):
        offsets[t] = off
        combined[:, off:off + dims[t]] = mats[i]
        off += dims[t]
    new_dim, proj = map_cokernel(combined, rep.p)
    for i, t in zip(outgoing, tgts):
        o = offsets[t]
        arrows[i] = (t, v)
        mats[i] = proj[o:o + dims[t], :].copy()
    dims[v] = new_dim


def _coxeter_mat(rep: MatRep, direction: str) -> MatRep:
    q = rep.quiver
    arrows = list(q.arrows)
    dims = dict(rep.dims)
    mats = [m.copy() for m in rep.mats]
    if rep.kind == D222:
        plus_order = ["x0", "y1", "y2", "y3", "x1", "x2", "x3"]
    else:
        plus_order = ["x0", "e1", "e2", "e3", "e4"]
    order = plus_order if direction == "plus" else plus_order[::-1]
    for v in order:
        if direction == "plus":
            _reflect_plus(rep, v, arrows, dims, mats)
        else:
            _reflect_minus(rep, v, arrows, dims, mats)
    # arrows are back in the original orientation; reorder to match the quiver
    new_mats = [None] * len(arrows)
    for (s, t), m in zip(arrows, mats):
        new_mats[q.arrows.index((s, t))] = m
    out = MatRep(rep.kind, rep.p, dims, new_mats)
    if out.is_zero():
        out.dims = {v: 0 for v in q.vertices}
    return out


def coxeter_plus_mat(rep: MatRep) -> MatRep:
    return _coxeter_mat(rep, "plus")


def coxeter_minus(rep: MatRep) -> MatRep:
    return _coxeter_mat(rep, "minus")


def coxeter_power(rep: MatRep, k: int) -> MatRep:
    """(Phi-)^k for k > 0, (Phi+)^(-k) for k < 0, identity for k = 0."""
    out = rep
    for _ in range(abs(k)):
        out = coxeter_minus(out) if k > 0 else coxeter_plus_mat(out)
        if out.is_zero():
            break
    return out


# --- Phi+ on subspace representations (the product-space construction) -------

ARM_KEYS = {D222: ("y1", "y2", "y3"), D4: ("e1", "e2", "e3", "e4")}


@dataclass
class CoxeterStep:
    """Phi+ of a subspace representation, with the elementary-map data.

    rep        -- Phi+rho, re-coordinatized onto GF(p)^(dim X0^1)
    phi_mats   -- per arm i, the matrix of phi_i : X0^1 -> X0 in the new
                  coordinates (row-vector action)
    """

    source: SubspaceRep
    rep: SubspaceRep
    phi_mats: list[np.ndarray]

    def phi(self, i: int, space: Subspace) -> Subspace:
        """phi_i image in the source ambient of a subspace of the new top."""
        if space.ambient_dim != self.rep.ambient:
            raise RepError("space does not live in the Phi+ total space")
        return space.apply(self.phi_mats[i - 1])


def coxeter_plus(rho: SubspaceRep) -> CoxeterStep:
    p, d0 = rho.p, rho.ambient
    arms = ARM_KEYS[rho.kind]
    bases = [rho.spaces[a].basis for a in arms]
    dims = [b.shape[0] for b in bases]
    total = sum(dims)
    offs = np.cumsum([0] + dims)
    # nabla: R -> X0, block i acts through the basis of Y_i
    nabla = gf.zeros(total, d0)
    for i, b in enumerate(bases):
        nabla[offs[i]:offs[i + 1]] = b
    x01 = Subspace(p, total, gf.left_nullspace(nabla, p))
    c_basis, c_piv = x01.basis, x01.pivots
    new_dim = x01.rank

    def in_new_coords(rows) -> Subspace:
        sub = Subspace(p, total, rows).meet(x01)
        return Subspace(p, new_dim, gf.coords_in_rowspace(sub.basis, c_basis, c_piv, p))

    spaces: dict[str, Subspace] = {}
    for i, arm in enumerate(arms):
        # pattern subspaces of R: arm slot restricted, other slots full
        def pattern(slot_rows_dim: int, slot_rows: np.ndarray | None) -> np.ndarray:
            rows = []
            for j in range(len(arms)):
                if j == i:
                    if slot_rows is not None and slot_rows_dim:
                        block = gf.zeros(slot_rows_dim, total)
                        block[:, offs[j]:offs[j + 1]] = slot_rows
                        rows.append(block)
                else:
                    block = gf.zeros(dims[j], total)
                    block[:, offs[j]:offs[j + 1]] = gf.eye(dims[j])
                    rows.append(block)
            return np.vstack(rows) if rows else gf.zeros(0, total)

        if rho.kind == D222:
            xi = rho.spaces[f"x{i + 1}"]
            # coordinates of X_i inside the Y_i basis
            xin = gf.coords_in_rowspace(xi.basis, rho.spaces[arm].basis,
                                        rho.spaces[arm].pivots, p)
            spaces[f"y{i + 1}"] = in_new_coords(pattern(xin.shape[0], xin))
            spaces[f"x{i + 1}"] = in_new_coords(pattern(0, None))
        else:
            spaces[arm] = in_new_coords(pattern(0, None))

    new_rep = SubspaceRep(rho.kind, p, new_dim, spaces)
    phi_mats = []
    for i in range(len(arms)):
        proj = (c_basis[:, offs[i]:offs[i + 1]] @ bases[i]) % p
        phi_mats.append(proj)
    return CoxeterStep(rho, new_rep, phi_mats)


def phi_push(i: int, rho: SubspaceRep, t: Term) -> Subspace:
    """phi_i Phi+rho (t): evaluate under Phi+rho, project the i-th coordinate."""
    step = coxeter_plus(rho)
    return step.phi(i, step.rep.evaluate(t))


# --- representation bank and random representations ---------------------------

@dataclass
class BankMember:
    kind: str
    label: str
    generation: int
    side: str  # 'proj' | 'inj'
    mat: MatRep
    sub: SubspaceRep = field(init=False)

    def __post_init__(self):
        self.sub = to_subspace(self.mat)

    @property
    def ambient(self) -> int:
        return self.sub.ambient

    def dim_vector(self) -> tuple[int, ...]:
        return self.mat.dim_vector()


def rep_bank(depth: int, p: int, kind: str = D222) -> list[BankMember]:
    """Projectives, injectives and their Coxeter orbits up to the given depth."""
    if depth < 0:
        raise RepError("depth must be >= 0")
    q = QUIVERS[kind]
    members: list[BankMember] = []
    proj = [(v, projective(kind, v, p)) for v in q.vertices]
    inj = [(v, injective(kind, v, p)) for v in q.vertices]
    for gen_idx in range(depth + 1):
        for v, m in proj:
            if m is not None and not m.is_zero():
                label = v if gen_idx == 0 else f"C-{gen_idx}[{v}]"
                members.append(BankMember(kind, label, gen_idx, "proj", m))
        for v, m in inj:
            if m is not None and not m.is_zero():
                label = f"I[{v}]" if gen_idx == 0 else f"C+{gen_idx}[I[{v}]]"
                members.append(BankMember(kind, label, gen_idx, "inj", m))
        proj = [(v, coxeter_minus(m)) if m is not None and not m.is_zero() else (v, None)
                for v, m in proj]
        inj = [(v, coxeter_plus_mat(m)) if m is not None and not m.is_zero() else (v, None)
               for v, m in inj]
    return members


def random_rep(seed: int, p: int, max_dim: int, kind: str = D222) -> SubspaceRep:
    """Deterministic random subspace representation with nested random spans."""
    if max_dim < 1:
        raise RepError("max_dim must be >= 1")
    rng = random.Random((seed, p, max_dim, kind).__repr__())
    d = rng.randint(1, max_dim)

    def rand_inside(container: Subspace) -> Subspace:
        k = rng.randint(0, container.rank)
        if k == 0:
            return Subspace.zero(p, d)
        rows = []
        for _ in range(k):
            coeffs = [rng.randrange(p) for _ in range(container.rank)]
            rows.append([
                sum(c * int(b) for c, b in zip(coeffs, container.basis[:, j])) % p
                for j in range(d)])
        return Subspace(p, d, rows)

    top = Subspace.full(p, d)
    spaces = {}
    if kind == D222:
        for i in (1, 2, 3):
            y = rand_inside(top)
            spaces[f"y{i}"] = y
            spaces[f"x{i}"] = rand_inside(y)
    else:
        for i in (1, 2, 3, 4):
            spaces[f"e{i}"] = rand_inside(top)
    return SubspaceRep(kind, p, d, spaces)


def random_pool(seed: int, count: int, p: int, max_dim: int, kind: str = D222) -> list[SubspaceRep]:
    return [random_rep(seed * 1_000_003 + i, p, max_dim, kind) for i in range(count)]
