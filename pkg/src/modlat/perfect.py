"""Perfect elements, the sublattices H+(n), signatures and Hasse structure.

Perfect generators a_i(n) <= b_i(n) <= c_i(n) are sums of cumulative
polynomials; every element of H+(n) is a product v1 v2 v3 with v_i in the
i-th generator chain.  Characteristic signatures (0 = zero subspace, 1 = full
space per representation) certify distinctness against the golden tables and
order the elements; mod-theta verdicts over the representation bank are
explicitly bank-verified necessary checks, never proofs (the bank omits the
regular representations).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import golden
from .elements import cumulative
from .reps import BankMember, SubspaceRep
from .subspace import Subspace
from .terms import D222, Term, gen, join, meet


class PerfectError(ValueError):
    pass


class NotPerfectOnWitness(PerfectError):
    """An evaluation produced a proper nonzero subspace on a witness."""

    def __init__(self, rep_index: int, dim: int, ambient: int):
        super().__init__(f"proper nonzero value on representation #{rep_index} "
                         f"(dim {dim} of {ambient})")
        self.rep_index = rep_index


def _arms(i: int) -> tuple[int, int]:
    j, k = [x for x in (1, 2, 3) if x != i]
    return j, k


_GEN_CACHE: dict[tuple, Term] = {}


def perfect_generator(kind_sym: str, i: int, n: int) -> Term:
    """One of the generators a/b/c (upper) or p/q/s (lower) of H+(n)."""
    key = (kind_sym, i, n)
    hit = _GEN_CACHE.get(key)
    if hit is not None:
        return hit
    if n < 0 or i not in (1, 2, 3):
        raise PerfectError(f"bad generator spec {kind_sym}_{i}({n})")
    j, k = _arms(i)
    if n == 0:
        if kind_sym == "a":
            out = join(gen(f"y{j}"), gen(f"y{k}"))
        elif kind_sym == "b":
            out = join(gen(f"x{i}"), gen(f"y{j}"), gen(f"y{k}"))
        elif kind_sym == "c":
            out = join(gen("y1"), gen("y2"), gen("y3"))
        elif kind_sym in ("p", "q", "s"):
            raise PerfectError("lower generators start at n >= 1")
        else:
            raise PerfectError(f"unknown generator kind {kind_sym!r}")
    elif kind_sym in ("a", "b", "c"):
        a = join(cumulative("x", n, j), cumulative("x", n, k),
                 cumulative("y", n + 1, j), cumulative("y", n + 1, k))
        if kind_sym == "a":
            out = a
        elif kind_sym == "b":
            out = join(a, cumulative("x", n + 1, i))
        else:
            out = join(a, cumulative("y", n + 1, i))
    elif kind_sym == "p":
        out = join(cumulative("x0", n + 2), cumulative("x", n + 1, i))
    elif kind_sym == "q":
        out = join(cumulative("x0", n + 2), cumulative("y", n + 1, i))
    elif kind_sym == "s":
        out = join(cumulative("x0", n + 2), cumulative("y", n + 1, i),
                   cumulative("x", n, i))
    else:
        raise PerfectError(f"unknown generator kind {kind_sym!r}")
    _GEN_CACHE[key] = out
    return out


def hplus_top(n: int) -> Term:
    if n == 0:
        return join(gen("y1"), gen("y2"), gen("y3"))
    return join(perfect_generator("a", 1, n), perfect_generator("a", 2, n))


def factors_label(factors: tuple[str, str, str], n: int) -> str:
    body = "".join(f"{f}{arm}" for arm, f in enumerate(factors, 1) if f != "I")
    return f"{body or 'I'}@n={n}"


@dataclass
class HPlusElement:
    n: int
    factors: tuple[str, str, str]
    term: Term

    @property
    def label(self) -> str:
        return factors_label(self.factors, self.n)


def hplus_element(n: int, factors: tuple[str, str, str]) -> HPlusElement:
    parts = []
    for arm, f in enumerate(factors, 1):
        if f != "I":
            parts.append(perfect_generator(f, arm, n))
    term = meet(*parts) if parts else hplus_top(n)
    return HPlusElement(n, factors, term)


def enumerate_hplus(n: int) -> list[HPlusElement]:
    """All elements of H+(n) in the published table order (27 or 64)."""
    if n < 0:
        raise PerfectError("level must be >= 0")
    rows = golden.H0_ROWS if n == 0 else golden.H1_ROWS
    return [hplus_element(n, factors) for factors in rows]


# --- signatures ---------------------------------------------------------------

def signature(term: Term, reps: list[SubspaceRep]) -> tuple[int, ...]:
    """Characteristic bits of a term over an ordered representation list."""
    bits = []
    for idx, rep in enumerate(reps):
        if rep.ambient == 0:
            raise PerfectError(f"representation #{idx} has a zero total space")
        val = rep.evaluate(term)
        if val.is_zero():
            bits.append(0)
        elif val.is_full():
            bits.append(1)
        else:
            raise NotPerfectOnWitness(idx, val.rank, rep.ambient)
    return tuple(bits)


def char_table_reps(p: int, level: int) -> list[SubspaceRep]:
    """The published representation columns for the H+(0) / H+(1) tables."""
    from .reps import coxeter_minus, projective, to_subspace
    if level == 0:
        names = [f"y{i}" for i in (1, 2, 3)] + [f"x{i}" for i in (1, 2, 3)]
        return [to_subspace(projective(D222, v, p)) for v in names]
    if level == 1:
        out = [to_subspace(projective(D222, f"x{i}", p)) for i in (1, 2, 3)]
        for group in ("y", "x"):
            for i in (1, 2, 3):
                out.append(to_subspace(coxeter_minus(projective(D222, f"{group}{i}", p))))
        return out
    raise PerfectError("published characteristic tables exist for levels 0 and 1")


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    details: list[str] = field(default_factory=list)
    counts: dict[str, int] = field(default_factory=dict)

    def fail(self, msg: str) -> None:
        self.passed = False
        self.details.append(msg)

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = "; ".join(f"{k}={v}" for k, v in self.counts.items())
        lines = [f"[{status}] {self.name}" + (f" ({extra})" if extra else "")]
        lines += [f"    {d}" for d in self.details[:20]]
        return "\n".join(lines)


def verify_char_tables(p: int = 5) -> CheckReport:
    """Both golden characteristic tables, bit-exact and pairwise distinct."""
    report = CheckReport("characteristic tables H+(0) and H+(1)")
    for level, table in ((0, golden.H0_TABLE), (1, golden.H1_TABLE)):
        reps = char_table_reps(p, level)
        seen = {}
        for row_no, (factors, want) in enumerate(table, 1):
            elem = hplus_element(level, factors)
            got = signature(elem.term, reps)
            if got != want:
                report.fail(f"H+({level}) row {row_no} {elem.label}: got {got}, table {want}")
            if got in seen:
                report.fail(f"H+({level}) rows {seen[got]} and {row_no} share a signature")
            seen[got] = row_no
        report.counts[f"h{level}_rows"] = len(table)
    return report


# --- mod-theta testing over the bank ------------------------------------------

def usable_bank(bank: list[BankMember]) -> list[SubspaceRep]:
    """Lattice-facing bank members (a zero total space carries no information)."""
    return [m.sub for m in bank if m.ambient > 0]


def modtheta_equal(t1: Term, t2: Term, bank: list[BankMember] | list[SubspaceRep]) -> bool:
    """Bank-verified linear equivalence: equal on every bank member.

    Necessary check only; the bank omits the regular representations.
    """
    reps = usable_bank(bank) if bank and isinstance(bank[0], BankMember) else bank
    if not reps:
        raise PerfectError("empty representation bank")
    return all(rep.evaluate(t1) == rep.evaluate(t2) for rep in reps)


def modtheta_leq(t1: Term, t2: Term, bank: list[BankMember] | list[SubspaceRep]) -> bool:
    reps = usable_bank(bank) if bank and isinstance(bank[0], BankMember) else bank
    if not reps:
        raise PerfectError("empty representation bank")
    return all(rep.evaluate(t2).contains(rep.evaluate(t1)) for rep in reps)


# --- the U_n / V_{n+1} Boolean cube -------------------------------------------

def verify_uv_boolean(n: int, bank: list[BankMember]) -> CheckReport:
    """16 distinct elements, the three cube-merge hypotheses, 8 connection
    inclusions and the complement laws of the merged 4-cube."""
    report = CheckReport(f"U_{n} + V_{n + 1} Boolean cube")
    reps = usable_bank(bank)
    a = {i: perfect_generator("a", i, n) for i in (1, 2, 3)}
    b = {i: perfect_generator("b", i, n) for i in (1, 2, 3)}
    c = {i: perfect_generator("c", i, n + 1) for i in (1, 2, 3)}
    d = {i: meet(a[i], b[_arms(i)[0]], b[_arms(i)[1]]) for i in (1, 2, 3)}
    i_c = join(c[1], c[2])
    for other in (join(c[1], c[3]), join(c[2], c[3])):
        if not modtheta_equal(i_c, other, reps):
            report.fail("tops c_i + c_j disagree across index pairs")

    # the 16 cube members: meets of subsets of the coatoms {d1, d2, d3, I_c}
    coatoms = {1: d[1], 2: d[2], 3: d[3], 4: i_c}
    top = meet(b[1], b[2], b[3])
    elems = {}
    for mask in range(16):
        chosen = [coatoms[i + 1] for i in range(4) if mask & (1 << i)]
        elems[mask] = meet(*chosen) if chosen else top

    sigs = {}
    for mask, t in elems.items():
        s = signature(t, reps)
        if s in sigs:
            report.fail(f"cube members {sigs[s]:04b} and {mask:04b} coincide on the bank")
        sigs[s] = mask
    report.counts["distinct"] = len(sigs)

    # cube-merge hypotheses
    for i in (1, 2, 3):
        if not modtheta_leq(c[i], d[i], reps):
            report.fail(f"coatom inclusion fails: c_{i}({n + 1}) not inside d_{i}")
        for j in (1, 2, 3):
            if j != i and not modtheta_leq(d[i], join(c[i], d[j]), reps):
                report.fail(f"d_{i} not inside c_{i} + d_{j}")
            if j != i and not modtheta_leq(meet(d[i], c[j]), c[i], reps):
                report.fail(f"d_{i} c_{j} not inside c_{i}")

    # 8 connection inclusions
    for i in (1, 2, 3):
        if not modtheta_leq(c[i], d[i], reps):
            report.fail(f"connection edge c_{i} -> d_{i} fails")
    for k in (3, 2, 1):
        i, j = _arms(k)
        lhs = meet(c[i], c[j])
        rhs = meet(a[i], a[j], b[k])
        if not modtheta_leq(lhs, rhs, reps):
            report.fail(f"connection edge c_{i}c_{j} -> a_{i}a_{j}b_{k} fails")
    if not modtheta_leq(meet(c[1], c[2], c[3]), meet(a[1], a[2], a[3]), reps):
        report.fail("connection edge c1c2c3 -> a1a2a3 fails")
    if not modtheta_leq(join(c[1], c[2], c[3]), meet(b[1], b[2], b[3]), reps):
        report.fail("connection edge c1+c2+c3 -> b1b2b3 fails")
    report.counts["connection_edges"] = 8

    # complement laws of the merged cube
    bottom = meet(c[1], c[2], c[3])
    for mask in range(16):
        comp = 15 ^ mask
        if not modtheta_equal(join(elems[mask], elems[comp]), top, reps):
            report.fail(f"complement join law fails for {mask:04b}")
        if not modtheta_equal(meet(elems[mask], elems[comp]), bottom, reps):
            report.fail(f"complement meet law fails for {mask:04b}")
    return report


# --- Hasse structure -----------------------------------------------------------

_CHAIN0 = ("a", "b", "I")
_CHAIN1 = ("a", "b", "c", "I")


def _chain_rank(letter: str, n: int) -> int:
    return (_CHAIN0 if n == 0 else _CHAIN1).index(letter)


@dataclass
class HPlusPoset:
    n: int
    elements: list[HPlusElement]
    sigs: list[tuple[int, ...]]

    def index(self, factors) -> int:
        return [e.factors for e in self.elements].index(tuple(factors))


def hplus_poset(n: int, reps: list[SubspaceRep]) -> HPlusPoset:
    elements = enumerate_hplus(n)
    sigs = [signature(e.term, reps) for e in elements]
    if len(set(sigs)) != len(sigs):
        raise PerfectError(f"signatures of H+({n}) not distinct on the given bank")
    return HPlusPoset(n, elements, sigs)


def _sig_leq(s1, s2) -> bool:
    return all(x <= y for x, y in zip(s1, s2))


def grid_order_isomorphic(poset: HPlusPoset) -> bool:
    """Signature order == componentwise chain order on the factor triples."""
    n = poset.n
    for e1, s1 in zip(poset.elements, poset.sigs):
        r1 = [_chain_rank(f, n) for f in e1.factors]
        for e2, s2 in zip(poset.elements, poset.sigs):
            r2 = [_chain_rank(f, n) for f in e2.factors]
            if _sig_leq(s1, s2) != all(a <= b for a, b in zip(r1, r2)):
                return False
    return True


def covering_edges(poset: HPlusPoset) -> list[tuple[int, int]]:
    """Grid covers: one factor steps one chain position (lower, upper) pairs."""
    n = poset.n
    chain = _CHAIN0 if n == 0 else _CHAIN1
    idx = {e.factors: i for i, e in enumerate(poset.elements)}
    edges = []
    for i, e in enumerate(poset.elements):
        for arm in range(3):
            r = chain.index(e.factors[arm])
            if r + 1 < len(chain):
                upper = list(e.factors)
                upper[arm] = chain[r + 1]
                edges.append((i, idx[tuple(upper)]))
    return sorted(edges)


def lattice_tables(poset: HPlusPoset):
    """Meet/join index tables from signatures (bitwise and/or must close)."""
    sig_index = {s: i for i, s in enumerate(poset.sigs)}
    size = len(poset.sigs)
    meets = [[0] * size for _ in range(size)]
    joins = [[0] * size for _ in range(size)]
    for i, s1 in enumerate(poset.sigs):
        for j, s2 in enumerate(poset.sigs):
            lo = tuple(x & y for x, y in zip(s1, s2))
            hi = tuple(x | y for x, y in zip(s1, s2))
            if lo not in sig_index or hi not in sig_index:
                raise PerfectError("signature set not closed under and/or")
            meets[i][j] = sig_index[lo]
            joins[i][j] = sig_index[hi]
    return meets, joins


def find_m3_n5(poset: HPlusPoset):
    """Search for a diamond or pentagon sublattice; None if absent."""
    meets, joins = lattice_tables(poset)
    size = len(poset.sigs)
    comparable = [[_sig_leq(poset.sigs[i], poset.sigs[j]) or _sig_leq(poset.sigs[j], poset.sigs[i])
                   for j in range(size)] for i in range(size)]
    for x in range(size):
        for y in range(x + 1, size):
            if comparable[x][y]:
                continue
            lo, hi = meets[x][y], joins[x][y]
            for z in range(size):
                if z in (x, y) or comparable[x][z] or comparable[y][z]:
                    continue
                if (meets[x][z] == meets[y][z] == lo
                        and joins[x][z] == joins[y][z] == hi):
                    return ("M3", lo, x, y, z, hi)
    for x in range(size):
        for z in range(size):
            if x == z or comparable[x][z]:
                continue
            lo, hi = meets[x][z], joins[x][z]
            for y in range(size):
                if y in (x, z, lo, hi):
                    continue
                if (_sig_leq(poset.sigs[x], poset.sigs[y]) and x != y
                        and meets[y][z] == lo and joins[y][z] == hi):
                    return ("N5", lo, x, y, z, hi)
    return None


CONNECTION_PATTERNS = (
    # (upper-level factors at n+1) included in (lower-level factors at n)
    (("c", "I", "I"), ("a", "b", "b")),
    (("I", "c", "I"), ("b", "a", "b")),
    (("I", "I", "c"), ("b", "b", "a")),
    (("c", "c", "I"), ("a", "a", "b")),
    (("c", "I", "c"), ("a", "b", "a")),
    (("I", "c", "c"), ("b", "a", "a")),
    (("c", "c", "c"), ("a", "a", "a")),
    (("I", "I", "I"), ("b", "b", "b")),
)


def hasse_export(levels: list[int], reps: list[SubspaceRep]) -> str:
    """DOT text: per-level covering edges plus the 8 inter-level connections."""
    lines = ["digraph hplus {", "  rankdir=BT;"]
    posets = {}
    for n in levels:
        posets[n] = hplus_poset(n, reps)
        if not grid_order_isomorphic(posets[n]):
            raise PerfectError(f"H+({n}) signature order is not the chain-product grid")
    for n in levels:
        poset = posets[n]
        for e in poset.elements:
            lines.append(f'  "{e.label}";')
        for lo, hi in covering_edges(poset):
            lines.append(f'  "{poset.elements[lo].label}" -> "{poset.elements[hi].label}";')
    for n in levels:
        if n + 1 not in posets:
            continue
        upper, lower = posets[n + 1], posets[n]
        for up_factors, low_factors in CONNECTION_PATTERNS:
            u = upper.elements[upper.index(up_factors)]
            w = lower.elements[lower.index(low_factors)]
            lines.append(f'  "{u.label}" -> "{w.label}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
