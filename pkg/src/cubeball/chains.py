"""Adjacent-pair marking and the monotone symmetric chain coordinate system.

The marking stage repeatedly picks a consecutive pair ``10`` in the current
string, marks both bits, and deletes them until the remaining (unmarked)
bits read ``0...01...1``.  The result does not depend on which eligible pair
is picked first, so a single left-to-right pass computes it: scan the string
keeping a stack of not-yet-matched 1s; each 0 marks (pops) the nearest open
1 to its left, or stays unmarked if none is open.  This is exactly balanced
parenthesis matching with 1 = open and 0 = close.

Replacing every unmarked bit with a blank yields the chain code: a string
over {0, 1, _} whose blank positions are the coordinates that move along the
chain.  A code with m blanks describes the chain ``c_k, ..., c_{n-k}`` with
``k = (n - m) / 2``, where ``c_j`` fills the leftmost ``m - (j - k)`` blanks
with 0 and the rest with 1.  Member ``c_j`` has weight ``j``, and walking up
the chain flips blanks from 0 to 1 right to left, one strictly monotone
sweep of coordinates, which is what makes the chain monotone.

A vertex ``x`` sits on its own chain at distance ``ell`` from the top, where
``ell`` is the number of blank coordinates holding 0 in ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import BitVector
from .errors import CoordinateRangeError, LevelRangeError

BLANK = "_"


def _unmatched_shifts(n: int, v: int) -> tuple[list[int], list[int]]:
    """Shift amounts (n - coordinate) of unmatched 0s and 1s, leftmost first.

    The concatenation zeros + ones lists all unmarked coordinates in
    left-to-right order, because every unmarked 0 precedes every unmarked 1.
    """
    zeros: list[int] = []
    ones: list[int] = []  # doubles as the matching stack; leftovers are unmarked
    for s in range(n - 1, -1, -1):
        if (v >> s) & 1:
            ones.append(s)
        elif ones:
            ones.pop()
        else:
            zeros.append(s)
    return zeros, ones


@dataclass(frozen=True, slots=True)
class MarkedString:
    """Per-coordinate (bit, marked) pairs produced by the marking stage."""

    bits: tuple[int, ...]
    marked: tuple[bool, ...]

    def __post_init__(self):
        if len(self.bits) != len(self.marked) or not self.bits:
            raise ValueError("bits and marks must be non-empty and equally long")

    @property
    def n(self) -> int:
        return len(self.bits)

    def marked_coordinates(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, m in enumerate(self.marked) if m)

    def unmarked_coordinates(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, m in enumerate(self.marked) if not m)

    def unmarked_zeros(self) -> int:
        return sum(1 for b, m in zip(self.bits, self.marked) if not m and b == 0)

    def unmarked_ones(self) -> int:
        return sum(1 for b, m in zip(self.bits, self.marked) if not m and b == 1)


@dataclass(frozen=True, slots=True)
class ChainCode:
    """A chain's moving coordinates, as a string over '0', '1' and '_'."""

    symbols: str

    def __post_init__(self):
        if not self.symbols or any(c not in "01_" for c in self.symbols):
            raise ValueError(f"not a chain code: {self.symbols!r}")
        m = self.symbols.count(BLANK)
        if (self.n - m) % 2:
            raise ValueError(
                f"blank count {m} must have the parity of the length {self.n}"
            )
        # the fixed symbols must form a fully matched 1/0 sequence
        depth = 0
        for c in self.symbols:
            if c == "1":
                depth += 1
            elif c == "0":
                depth -= 1
                if depth < 0:
                    raise ValueError(f"unbalanced fixed symbols in {self.symbols!r}")
        if depth != 0:
            raise ValueError(f"unbalanced fixed symbols in {self.symbols!r}")

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def k(self) -> int:
        """Bottom level of the chain: the number of fixed 1s."""
        return (self.n - self.symbols.count(BLANK)) // 2

    def blank_coordinates(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.symbols) if c == BLANK)

    def length(self) -> int:
        """Number of vertices on the chain."""
        return self.symbols.count(BLANK) + 1

    def __str__(self) -> str:
        return self.symbols


@dataclass(frozen=True, slots=True)
class ChainPosition:
    """Where a vertex sits: its chain code, bottom level k, level j, and the
    distance ell from the chain top."""

    code: ChainCode
    k: int
    j: int
    ell: int


def mark(x: BitVector) -> MarkedString:
    """Run the marking stage (single stack pass, O(n))."""
    n, v = x.n, x.value
    zeros, ones = _unmatched_shifts(n, v)
    unmarked = [False] * n
    for s in zeros:
        unmarked[n - 1 - s] = True
    for s in ones:
        unmarked[n - 1 - s] = True
    return MarkedString(x.bits(), tuple(not u for u in unmarked))


def mark_reference(x: BitVector, rightmost_first: bool = False) -> MarkedString:
    """Quadratic repeated-scan marking, kept as an independent test oracle.

    Each round finds one consecutive ``10`` pair in the current string
    (leftmost by default, rightmost when requested), marks it and deletes it.
    """
    bits = x.bits()
    active = list(range(x.n))  # indices into bits, still unmarked
    marked = [False] * x.n
    while True:
        pairs = range(len(active) - 2, -1, -1) if rightmost_first else range(len(active) - 1)
        hit = -1
        for t in pairs:
            if bits[active[t]] == 1 and bits[active[t + 1]] == 0:
                hit = t
                break
        if hit < 0:
            break
        marked[active[hit]] = marked[active[hit + 1]] = True
        del active[hit : hit + 2]
    return MarkedString(bits, tuple(marked))


def mark_via_split(x: BitVector, i: int) -> MarkedString:
    """Mark in three steps: first the prefix of length i-1, then the suffix of
    length n-i, then finish on the combined partially marked string.

    Agrees with :func:`mark` for every (x, i) because the marking result is
    order-independent.
    """
    n, v = x.n, x.value
    if not 1 <= i <= n:
        raise CoordinateRangeError(f"coordinate {i} out of [1, {n}]")
    marked = [False] * (n + 1)  # 1-based

    def stage(coords) -> None:
        stack: list[int] = []
        for p in coords:
            if (v >> (n - p)) & 1:
                stack.append(p)
            elif stack:
                q = stack.pop()
                marked[q] = True
                marked[p] = True

    stage(range(1, i))
    stage(range(i + 1, n + 1))
    stage(p for p in range(1, n + 1) if not marked[p])
    return MarkedString(x.bits(), tuple(marked[1:]))


def chain_code(x: BitVector) -> ChainCode:
    """The code of the chain containing x: marked bits kept, blanks elsewhere."""
    n, v = x.n, x.value
    zeros, ones = _unmatched_shifts(n, v)
    blank = set(zeros) | set(ones)
    symbols = "".join(
        BLANK if s in blank else ("1" if (v >> s) & 1 else "0")
        for s in range(n - 1, -1, -1)
    )
    return ChainCode(symbols)


def position(x: BitVector) -> ChainPosition:
    """Locate x on its chain: code, bottom level k, level j, distance ell."""
    code = chain_code(x)
    zeros, _ = _unmatched_shifts(x.n, x.value)
    j = x.weight()
    return ChainPosition(code=code, k=code.k, j=j, ell=len(zeros))


def chain_member(code: ChainCode, j: int) -> BitVector:
    """The unique member of weight j: leftmost blanks become 0, the rest 1."""
    k = code.k
    n = code.n
    if not k <= j <= n - k:
        raise LevelRangeError(f"level {j} out of [{k}, {n - k}] for code {code}")
    blanks = code.blank_coordinates()
    ones_from = len(blanks) - (j - k)  # blanks[ones_from:] are set to 1
    value = 0
    bi = 0
    for c in code.symbols:
        if c == BLANK:
            b = 1 if bi >= ones_from else 0
            bi += 1
        else:
            b = int(c)
        value = (value << 1) | b
    return BitVector(n, value)


def chain_members(code: ChainCode) -> list[BitVector]:
    """The full chain, bottom to top (weights k, k+1, ..., n-k)."""
    k = code.k
    return [chain_member(code, j) for j in range(k, code.n - k + 1)]
