"""Admissible sequences for D^{2,2,2} and D^4.

A word is a string of arm indices, leftmost letter = most recently applied
index.  Admissible means adjacent letters are distinct.  Two words are
equivalent under the length-preserving congruence

    d222:  a b a  ->  a c a      ({a, b, c} = {1, 2, 3})
    d4:    a b c  ->  a d c      ({a, b, c, d} = {1, 2, 3, 4}, a != c)

applied in any window.  Equivalence classes fall into finitely many
parameterized families; CanonicalSeq names a class by (family row, exponent
parameters, start letter).  Classification is done by computing the rewrite
closure of a word and matching it against realized canonical candidates, so
it agrees with the brute-force oracle by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .terms import D222, D4

ALPHABET = {D222: "123", D4: "1234"}


class SequenceError(ValueError):
    pass


def check_word(word: str, kind: str) -> str:
    if kind not in ALPHABET:
        raise SequenceError(f"unknown lattice kind {kind!r}")
    if not word:
        raise SequenceError("empty word")
    letters = ALPHABET[kind]
    for ch in word:
        if ch not in letters:
            raise SequenceError(f"letter {ch!r} not in alphabet for {kind}")
    for a, b in zip(word, word[1:]):
        if a == b:
            raise SequenceError(f"adjacent repeated index in {word!r}")
    return word


def rewrite_neighbors(word: str, kind: str):
    """All words reachable by one application of the defining relation."""
    letters = ALPHABET[kind]
    for i in range(len(word) - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if kind == D222:
            if a == c:
                (d,) = set(letters) - {a, b}
                yield word[:i + 1] + d + word[i + 2:]
        else:
            if a != c:
                (d,) = set(letters) - {a, b, c}
                yield word[:i + 1] + d + word[i + 2:]


@lru_cache(maxsize=65536)
def closure(word: str, kind: str) -> frozenset[str]:
    """Rewrite closure: the full equivalence class of the word (oracle)."""
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for v in rewrite_neighbors(w, kind):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(seen)


def class_key(word: str, kind: str) -> str:
    return min(closure(word, kind))


# --- canonical families ----------------------------------------------------
#
# Patterns are given in the frame where the start letter (rightmost, the
# first map applied) is 1; other start letters are reached by transposing
# 1 with the start letter.  A pattern is (prefix, ((block, param_name), ...));
# the realized word is prefix + block*value for each block in order.

_D222_ROWS: dict[str, tuple[str, tuple[tuple[str, str], ...]]] = {
    "T1": ("", (("213", "m"), ("21", "n"))),
    "T2": ("3", (("213", "m"), ("21", "n"))),
    "T3": ("13", (("213", "m"), ("21", "n"))),
    "T4": ("", (("312", "m"), ("31", "n"))),
    "T5": ("2", (("312", "m"), ("31", "n"))),
    "T6": ("12", (("312", "m"), ("31", "n"))),
    "T7": ("1", (("21", "n"),)),
}
_D222_ORDER = ("T1", "T2", "T3", "T4", "T5", "T6", "T7")

_D4_ROWS: dict[str, tuple[str, tuple[tuple[str, str], ...]]] = {
    "F21": ("", (("21", "t"), ("41", "r"), ("31", "s"))),
    "F31": ("", (("31", "s"), ("41", "r"), ("21", "t"))),
    "F41": ("", (("41", "r"), ("31", "s"), ("21", "t"))),
    "G11": ("1", (("41", "r"), ("31", "s"), ("21", "t"))),
    "G21": ("2", (("41", "r"), ("31", "s"), ("21", "t"))),
    "G31": ("3", (("41", "r"), ("21", "t"), ("31", "s"))),
    "G41": ("4", (("21", "t"), ("31", "s"), ("41", "r"))),
    "H11": ("", (("14", "r"), ("31", "s"), ("21", "t"))),
    "H21": ("2", (("14", "r"), ("31", "s"), ("21", "t"))),
    "H31": ("3", (("14", "r"), ("31", "s"), ("21", "t"))),
    "H41": ("4", (("14", "r"), ("31", "s"), ("21", "t"))),
}
_D4_ORDER = ("F21", "F31", "F41", "G11", "G21", "G31", "G41",
             "H11", "H21", "H31", "H41")

ROW_ORDER = {D222: _D222_ORDER, D4: _D4_ORDER}
_ROWS = {D222: _D222_ROWS, D4: _D4_ROWS}


def _transposition(kind: str, start: int) -> dict[int, int]:
    sigma = {i: i for i in range(1, len(ALPHABET[kind]) + 1)}
    if start != 1:
        sigma[1], sigma[start] = start, 1
    return sigma


def _apply_letters(word: str, sigma: dict[int, int]) -> str:
    return "".join(str(sigma[int(ch)]) for ch in word)


def _realize_base(kind: str, row: str, params: tuple[int, ...]) -> str:
    prefix, blocks = _ROWS[kind][row]
    word = prefix + "".join(b * v for (b, _), v in zip(blocks, params))
    return word


def _valid_params(kind: str, row: str, params: tuple[int, ...]) -> bool:
    if any(v < 0 for v in params):
        return False
    if kind == D222:
        m_or_n = dict(zip([p for _, p in _ROWS[kind][row][1]], params))
        if row == "T7":
            return True
        return m_or_n["n"] >= 1
    r = dict(zip([p for _, p in _ROWS[kind][row][1]], params))
    if row == "F21":
        return r["t"] >= 1
    if row == "F31":
        return r["s"] >= 1
    if row == "F41":
        return r["r"] >= 1
    if row == "G11":
        return True
    # G21/G31/G41: every class has an r >= 1 (resp. t >= 1) parameterization,
    # e.g. 2(31)^{s+1}(21)^t = 2(41)(31)^s(21)^t; the element formulas
    # degenerate at the zero value, so canonical parameters keep the
    # prefix-adjacent block nonempty.
    if row == "G21":
        return r["r"] >= 1
    if row == "G31":
        return r["r"] >= 1
    if row == "G41":
        return r["t"] >= 1
    # H rows: at least one (14) block, and the word must still end at 1
    return r["r"] >= 1 and (r["s"] >= 1 or r["t"] >= 1)


@dataclass(frozen=True)
class CanonicalSeq:
    """A canonical admissible-sequence class: family row + exponents + start."""

    kind: str
    type_id: str
    params: tuple[int, ...]
    start_letter: int

    def realize(self) -> str:
        base = _realize_base(self.kind, self.type_id, self.params)
        word = _apply_letters(base, _transposition(self.kind, self.start_letter))
        return check_word(word, self.kind)

    @property
    def word(self) -> str:
        return self.realize()

    def __len__(self) -> int:
        prefix, blocks = _ROWS[self.kind][self.type_id]
        return len(prefix) + sum(len(b) * v for (b, _), v in zip(blocks, self.params))

    def __str__(self) -> str:
        sigma = _transposition(self.kind, self.start_letter)
        prefix, blocks = _ROWS[self.kind][self.type_id]
        out = _apply_letters(prefix, sigma)
        for (block, _), v in zip(blocks, self.params):
            if v:
                out += f"({_apply_letters(block, sigma)})^{v}"
        return out or self.realize()


def _candidates(kind: str, length: int) -> list[tuple[str, tuple[int, ...], str]]:
    """All (row, params, base word) of the given length in the letter-1 frame."""
    out = []
    for row in ROW_ORDER[kind]:
        prefix, blocks = _ROWS[kind][row]
        rest = length - len(prefix)
        sizes = [len(b) for b, _ in blocks]
        if rest < 0:
            continue
        # enumerate exponent tuples with sum(size*v) == rest
        def rec(i, remaining, acc):
            if i == len(blocks) - 1:
                if remaining % sizes[i] == 0:
                    yield acc + (remaining // sizes[i],)
                return
            for v in range(remaining // sizes[i] + 1):
                yield from rec(i + 1, remaining - sizes[i] * v, acc + (v,))

        for params in rec(0, rest, ()):
            if _valid_params(kind, row, params):
                out.append((row, params, _realize_base(kind, row, params)))
    return out


@lru_cache(maxsize=4096)
def _candidates_cached(kind: str, length: int):
    return tuple(_candidates(kind, length))


def normalize(word: str, kind: str) -> CanonicalSeq:
    """Canonical class of an admissible word (deterministic)."""
    check_word(word, kind)
    start = int(word[-1])
    base = _apply_letters(word, _transposition(kind, start))
    cls = closure(base, kind)
    for row, params, cand in _candidates_cached(kind, len(word)):
        if cand in cls:
            return CanonicalSeq(kind, row, params, start)
    raise SequenceError(f"no canonical family matches {word!r}")  # pragma: no cover


def equivalent(w1: str, w2: str, kind: str) -> bool:
    check_word(w1, kind)
    check_word(w2, kind)
    if len(w1) != len(w2):
        return False
    return w2 in closure(w1, kind)


def phi_prepend(i: int, word: str, kind: str) -> CanonicalSeq:
    """Class of i·word; i must differ from the leftmost (most recent) letter."""
    check_word(word, kind)
    if str(i) not in ALPHABET[kind]:
        raise SequenceError(f"index {i} not valid for {kind}")
    if str(i) == word[0]:
        raise SequenceError(f"prepend index {i} equals the leftmost letter of {word!r}")
    return normalize(str(i) + word, kind)


def enumerate_classes(length: int, kind: str, ending_letter: int | None = None) -> list[CanonicalSeq]:
    """All distinct classes of the given length (optionally fixed rightmost letter)."""
    if length < 1:
        raise SequenceError("length must be >= 1")
    letters = [ending_letter] if ending_letter else [int(c) for c in ALPHABET[kind]]
    out = []
    for start in letters:
        if str(start) not in ALPHABET[kind]:
            raise SequenceError(f"letter {start} not valid for {kind}")
        seen = set()
        for row, params, base in _candidates_cached(kind, length):
            key = class_key(base, kind)
            if key in seen:
                continue
            seen.add(key)
            out.append(CanonicalSeq(kind, row, params, start))
    return out


def all_admissible_words(length: int, kind: str):
    """Every adjacent-distinct word of the given length (oracle enumeration)."""
    letters = ALPHABET[kind]
    if length < 1:
        return
    words = list(letters)
    for _ in range(length - 1):
        words = [w + c for w in words for c in letters if c != w[-1]]
    yield from words


# --- published prepend-action tables (used by verification) ----------------

# d222: explicit target (row, params) per legal prepend index, letter-1 frame.
D222_ACTIONS = {
    "T1": {1: lambda m, n: ("T3", (m - 1, n + 1)) if m > 0 else ("T7", (n,)),
           3: lambda m, n: ("T2", (m, n))},
    "T2": {1: lambda m, n: ("T3", (m, n)),
           2: lambda m, n: ("T1", (m, n + 1))},
    "T3": {2: lambda m, n: ("T1", (m + 1, n)),
           3: lambda m, n: ("T2", (m, n + 1))},
    "T4": {1: lambda m, n: ("T6", (m - 1, n + 1)) if m > 0 else ("T7", (n,)),
           2: lambda m, n: ("T5", (m, n))},
    "T5": {1: lambda m, n: ("T6", (m, n)),
           3: lambda m, n: ("T4", (m, n + 1))},
    "T6": {2: lambda m, n: ("T5", (m, n + 1)),
           3: lambda m, n: ("T4", (m + 1, n))},
    "T7": {2: lambda n: ("T1", (0, n + 1)),
           3: lambda n: ("T4", (0, n + 1))},
}

# d4: the table predicts only the target family per prepend index.
D4_ACTIONS = {
    "F21": {1: "G11", 3: "G31", 4: "G41"},
    "F31": {1: "G11", 2: "G21", 4: "G41"},
    "F41": {1: "G11", 2: "G21", 3: "G31"},
    "G11": {2: "F21", 3: "F31", 4: "F41"},
    "G21": {1: "H11", 3: "F31", 4: "F41"},
    "G31": {1: "H11", 2: "F21", 4: "F41"},
    "G41": {1: "H11", 2: "F21", 3: "F31"},
    "H11": {2: "H21", 3: "H31", 4: "H41"},
    "H21": {1: "H11", 3: "F31", 4: "F41"},
    "H31": {1: "H11", 2: "F21", 4: "F41"},
    "H41": {1: "H11", 2: "F21", 3: "F31"},
}


def rows_matching_class(word: str, kind: str) -> set[str]:
    """All family rows that realize some member of the word's class."""
    check_word(word, kind)
    start = int(word[-1])
    base = _apply_letters(word, _transposition(kind, start))
    cls = closure(base, kind)
    return {row for row, params, cand in _candidates_cached(kind, len(word)) if cand in cls}
