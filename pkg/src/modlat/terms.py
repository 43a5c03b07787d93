"""Lattice polynomials over the generators of D^{2,2,2} and D^4.

Terms are hash-consed immutable trees: Top, generators, meets and joins.
Construction normalizes by flattening nested connectives of the same kind and
ordering children by a fixed structural key.  No lattice-law simplification is
performed; equality of terms is syntactic, equivalence is semantic (checked by
evaluation against representations).
"""

from __future__ import annotations

from .subspace import Subspace

D222 = "d222"
D4 = "d4"

GENERATORS = {
    D222: tuple(f"{r}{i}" for r in "xy" for i in (1, 2, 3)),
    D4: tuple(f"e{i}" for i in (1, 2, 3, 4)),
}
_GEN_KIND = {g: k for k, gens in GENERATORS.items() for g in gens}


class TermError(ValueError):
    pass


class Term:
    """One node of a hash-consed lattice polynomial."""

    __slots__ = ("op", "name", "children", "uid", "lattice", "_skey", "_render")

    def __init__(self, op, name, children, uid, lattice):
        self.op = op                # 'top' | 'gen' | 'meet' | 'join'
        self.name = name            # generator name for 'gen'
        self.children = children
        self.uid = uid
        self.lattice = lattice      # 'd222' | 'd4' | None (pure top)
        self._skey = None
        self._render = None

    def sort_key(self):
        if self._skey is None:
            if self.op == "top":
                self._skey = (0,)
            elif self.op == "gen":
                self._skey = (1, self.name)
            else:
                rank = 2 if self.op == "meet" else 3
                self._skey = (rank, len(self.children)) + tuple(
                    c.sort_key() for c in self.children)
        return self._skey

    def __repr__(self):
        return f"Term({render(self)})"

    # uid-based identity; interning guarantees structural equality == identity
    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return self.uid


_interned: dict[tuple, Term] = {}
_next_uid = [0]


def _mk(op, name, children, lattice):
    key = (op, name, tuple(c.uid for c in children))
    t = _interned.get(key)
    if t is None:
        t = Term(op, name, children, _next_uid[0], lattice)
        _next_uid[0] += 1
        _interned[key] = t
    return t


TOP = _mk("top", None, (), None)


def gen(name: str) -> Term:
    kind = _GEN_KIND.get(name)
    if kind is None:
        raise TermError(f"unknown generator {name!r}")
    return _mk("gen", name, (), kind)


def _combine_kind(parts):
    kind = None
    for t in parts:
        if t.lattice is None:
            continue
        if kind is None:
            kind = t.lattice
        elif kind != t.lattice:
            raise TermError("mixed D^{2,2,2} and D^4 generators in one term")
    return kind


def _connective(op, parts):
    flat = []
    for t in parts:
        if t.op == op:
            flat.extend(t.children)
        elif t.op == "top":
            if op == "join":      # I + x = I
                return TOP
            continue              # I * x = x
        else:
            flat.append(t)
    if not flat:
        return TOP
    flat.sort(key=Term.sort_key)
    dedup = [flat[0]]
    for t in flat[1:]:
        if t is not dedup[-1]:
            dedup.append(t)
    if len(dedup) == 1:
        return dedup[0]
    return _mk(op, None, tuple(dedup), _combine_kind(dedup))


def meet(*parts: Term) -> Term:
    return _connective("meet", parts)


def join(*parts: Term) -> Term:
    return _connective("join", parts)


def render(t: Term) -> str:
    """Deterministic text form; parse(render(t)) == t for normalized t."""
    if t._render is None:
        if t.op == "top":
            t._render = "I"
        elif t.op == "gen":
            t._render = t.name
        elif t.op == "join":
            t._render = "+".join(render(c) for c in t.children)
        else:
            parts = []
            for c in t.children:
                s = render(c)
                parts.append(f"({s})" if c.op == "join" else s)
            t._render = "*".join(parts)
    return t._render


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def parse(text: str, kind: str) -> Term:
    """Parse the term grammar: sum of products, '*' binds tighter than '+'.

    atom := 'I' | generator | '(' sum ')'; generators are x1..y3 for d222,
    e1..e4 for d4; juxtaposition is not accepted, meet must be written '*'.
    """
    if kind not in GENERATORS:
        raise TermError(f"unknown lattice kind {kind!r}")
    gens = set(GENERATORS[kind])
    pos = [0]
    n = len(text)

    def skip_ws():
        while pos[0] < n and text[pos[0]].isspace():
            pos[0] += 1

    def peek():
        skip_ws()
        return text[pos[0]] if pos[0] < n else ""

    def atom() -> Term:
        skip_ws()
        i = pos[0]
        if i >= n:
            raise ParseError("unexpected end of input", i)
        ch = text[i]
        if ch == "(":
            pos[0] += 1
            t = total()
            if peek() != ")":
                raise ParseError("expected ')'", pos[0])
            pos[0] += 1
            return t
        if ch == "I":
            pos[0] += 1
            return TOP
        if ch in "xye" and i + 1 < n and text[i + 1].isdigit():
            name = text[i:i + 2]
            if name not in gens:
                raise ParseError(f"generator {name!r} not valid for {kind}", i)
            pos[0] += 2
            return gen(name)
        raise ParseError(f"unexpected character {ch!r}", i)

    def product() -> Term:
        parts = [atom()]
        while peek() == "*":
            pos[0] += 1
            parts.append(atom())
        return meet(*parts)

    def total() -> Term:
        parts = [product()]
        while peek() == "+":
            pos[0] += 1
            parts.append(product())
        return join(*parts)

    t = total()
    skip_ws()
    if pos[0] != n:
        raise ParseError(f"trailing input {text[pos[0]:]!r}", pos[0])
    return t


def generators_of(t: Term) -> set[str]:
    out = set()
    stack = [t]
    while stack:
        cur = stack.pop()
        if cur.op == "gen":
            out.add(cur.name)
        else:
            stack.extend(cur.children)
    return out


def permute_indices(t: Term, sigma: dict[int, int]) -> Term:
    """Relabel every generator index through the permutation sigma."""
    idx = sorted(sigma)
    if sorted(sigma.values()) != idx or idx not in ([1, 2, 3], [1, 2, 3, 4]):
        raise TermError(f"not a permutation of an index set: {sigma}")

    def go(u: Term) -> Term:
        if u.op == "top":
            return u
        if u.op == "gen":
            return gen(f"{u.name[0]}{sigma[int(u.name[1])]}")
        parts = [go(c) for c in u.children]
        return meet(*parts) if u.op == "meet" else join(*parts)

    return go(t)


class Evaluator:
    """Memoized homomorphic evaluation of terms into a subspace lattice."""

    def __init__(self, assignment: dict[str, Subspace], top: Subspace, validate: bool = True):
        self.assignment = assignment
        self.top = top
        self.cache: dict[int, Subspace] = {}
        if validate:
            for name, s in assignment.items():
                if s.p != top.p or s.ambient_dim != top.ambient_dim:
                    raise TermError(f"assignment for {name} is not in the top space")
                if not top.contains(s):
                    raise TermError(f"assignment for {name} is not inside top")
            for i in (1, 2, 3):
                x, y = assignment.get(f"x{i}"), assignment.get(f"y{i}")
                if x is not None and y is not None and not y.contains(x):
                    raise TermError(f"chain violation: x{i} not inside y{i}")

    def __call__(self, t: Term) -> Subspace:
        hit = self.cache.get(t.uid)
        if hit is not None:
            return hit
        if t.op == "top":
            val = self.top
        elif t.op == "gen":
            try:
                val = self.assignment[t.name]
            except KeyError:
                raise TermError(f"no assignment for generator {t.name}") from None
        else:
            vals = [self(c) for c in t.children]
            acc = vals[0]
            if t.op == "meet":
                for v in vals[1:]:
                    acc = acc.meet(v)
            else:
                for v in vals[1:]:
                    acc = acc.join(v)
            val = acc
        self.cache[t.uid] = val
        return val


def evaluate(t: Term, assignment: dict[str, Subspace], top: Subspace,
             validate: bool = True) -> Subspace:
    return Evaluator(assignment, top, validate=validate)(t)
