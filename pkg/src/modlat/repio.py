"""Text file format for representations (bit-exact round trip).

Layout (one token group per line, '#' comments allowed):

    format_version 1
    prime 5
    lattice d222
    form subspace
    ambient 4
    space y1 2          <- name and row count, then that many basis rows
    1 0 0 0
    0 1 0 0
    ...

Matrix form replaces `ambient` with `dims` lines and `space` with `arrow`
blocks (one per quiver arrow, row count = source dimension).
"""

from __future__ import annotations

from . import gf
from .reps import DIM_ORDER, MatRep, QUIVERS, SubspaceRep
from .subspace import Subspace

FORMAT_VERSION = 1


class RepIOError(ValueError):
    def __init__(self, message, line_no=None):
        where = f" (line {line_no})" if line_no else ""
        super().__init__(f"{message}{where}")


def dumps(rep: SubspaceRep | MatRep) -> str:
    lines = [f"format_version {FORMAT_VERSION}", f"prime {rep.p}", f"lattice {rep.kind}"]
    if isinstance(rep, SubspaceRep):
        lines.append("form subspace")
        lines.append(f"ambient {rep.ambient}")
        for name in sorted(rep.spaces):
            s = rep.spaces[name]
            lines.append(f"space {name} {s.rank}")
            for row in s.basis:
                lines.append(" ".join(str(int(v)) for v in row))
    else:
        lines.append("form matrix")
        dims = " ".join(f"{v} {rep.dims[v]}" for v in DIM_ORDER[rep.kind])
        lines.append(f"dims {dims}")
        for (src, tgt), m in zip(QUIVERS[rep.kind].arrows, rep.mats):
            lines.append(f"arrow {src} {tgt} {m.shape[0]}")
            for row in m:
                lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next_tokens(self):
        while self.pos < len(self.lines):
            self.pos += 1
            raw = self.lines[self.pos - 1].split("#", 1)[0].strip()
            if raw:
                return raw.split(), self.pos
        return None, self.pos

    def expect(self, key: str):
        toks, ln = self.next_tokens()
        if toks is None or toks[0] != key:
            raise RepIOError(f"expected '{key}' field", ln)
        return toks[1:], ln

    def read_rows(self, count: int, width: int, p: int):
        rows = gf.zeros(count, width)
        for i in range(count):
            toks, ln = self.next_tokens()
            if toks is None:
                raise RepIOError("unexpected end of file in a matrix block", ln)
            if len(toks) != width:
                raise RepIOError(f"expected {width} entries, got {len(toks)}", ln)
            try:
                vals = [int(t) for t in toks]
            except ValueError:
                raise RepIOError("non-integer matrix entry", ln) from None
            rows[i] = [v % p for v in vals]
        return rows


def loads(text: str, expect_kind: str | None = None) -> SubspaceRep | MatRep:
    rd = _Reader(text)
    (ver,), ln = rd.expect("format_version")
    if int(ver) != FORMAT_VERSION:
        raise RepIOError(f"unsupported format_version {ver}", ln)
    (prime,), ln = rd.expect("prime")
    try:
        p = gf.check_prime(int(prime))
    except ValueError as e:
        raise RepIOError(str(e), ln) from None
    (kind,), ln = rd.expect("lattice")
    if kind not in QUIVERS:
        raise RepIOError(f"unknown lattice {kind!r}", ln)
    if expect_kind and kind != expect_kind:
        raise RepIOError(f"lattice kind mismatch: file has {kind}, expected {expect_kind}", ln)
    (form,), ln = rd.expect("form")
    if form == "subspace":
        (amb,), ln = rd.expect("ambient")
        ambient = int(amb)
        spaces = {}
        while True:
            toks, ln = rd.next_tokens()
            if toks is None:
                break
            if toks[0] != "space" or len(toks) != 3:
                raise RepIOError("expected 'space <name> <rows>'", ln)
            name, count = toks[1], int(toks[2])
            rows = rd.read_rows(count, ambient, p)
            spaces[name] = Subspace(p, ambient, rows)
        try:
            return SubspaceRep(kind, p, ambient, spaces)
        except Exception as e:
            raise RepIOError(f"invalid representation: {e}") from None
    if form == "matrix":
        toks, ln = rd.expect("dims")
        if len(toks) % 2:
            raise RepIOError("dims line must pair names with numbers", ln)
        dims = {toks[i]: int(toks[i + 1]) for i in range(0, len(toks), 2)}
        quiver = QUIVERS[kind]
        if set(dims) != set(quiver.vertices):
            raise RepIOError("dims must cover exactly the quiver vertices", ln)
        mats = [None] * len(quiver.arrows)
        while True:
            toks, ln = rd.next_tokens()
            if toks is None:
                break
            if toks[0] != "arrow" or len(toks) != 4:
                raise RepIOError("expected 'arrow <src> <tgt> <rows>'", ln)
            src, tgt, count = toks[1], toks[2], int(toks[3])
            if (src, tgt) not in quiver.arrows:
                raise RepIOError(f"no arrow {src}->{tgt} in {kind}", ln)
            if count != dims[src]:
                raise RepIOError(f"arrow {src}->{tgt}: row count must equal dim {src}", ln)
            mats[quiver.arrows.index((src, tgt))] = rd.read_rows(count, dims[tgt], p)
        for (src, tgt), m in zip(quiver.arrows, mats):
            if m is None:
                raise RepIOError(f"missing arrow block {src}->{tgt}")
        return MatRep(kind, p, dims, mats)
    raise RepIOError(f"unknown form {form!r}", ln)


def store(rep, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(rep))


def load(path, expect_kind: str | None = None):
    with open(path) as fh:
        return loads(fh.read(), expect_kind=expect_kind)
