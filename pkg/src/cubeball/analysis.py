"""Exact counting, per-bit statistics, the balanced-substring marking
criterion, and the majority reduction.

Chain counts.  The number of chains of length t in the decomposition of
{0,1}^n is ``C(n, (n-t+1)/2) - C(n, (n-t-1)/2)`` when t and n have opposite
parity, and 0 otherwise.  Summing t * M_t over all lengths recovers 2^n.

Unmarked profiles.  Exactly ``C(n, (n-a-b)/2) - C(n, (n-a-b-2)/2)`` vertices
leave a unmarked zeros and b unmarked ones after marking (a+b must have the
parity of n), and ``C(n, floor((n-a)/2))`` leave exactly a unmarked zeros.

Per-bit flip probability.  For the chain-climbing map, output bit i differs
from input bit i exactly when x_i = 0, the length-(i-1) prefix marks down to
zeros only (no unmarked ones), and its unmarked-zero count a is at least the
suffix's unmarked-zero count c.  Prefix and suffix mark independently, which
turns the probability into an exact double sum over the two profile counts;
it decays like 1/sqrt(n), so every output bit except the appended one is
essentially a copy of its input bit.

All counts are arbitrary-precision integers and all probabilities exact
``Fraction`` values; the verification suite compares them by equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .bijections import _FORWARD_VALUE, BijectionKind, _psi_value
from .bits import DEFAULT_ENUMERATION_CAP, BitVector
from .chains import _unmatched_shifts
from .errors import (
    CoordinateRangeError,
    EnumerationCapError,
    OddLengthError,
    ParityError,
)
from .metrics import image_table


@dataclass(frozen=True, slots=True)
class ChainCountTable:
    """Chain counts by length for the decomposition of {0,1}^n."""

    n: int
    entries: dict[int, int]  # chain length t in [1, n+1] -> count

    def nonzero(self) -> dict[int, int]:
        return {t: m for t, m in sorted(self.entries.items()) if m}

    def total_vertices(self) -> int:
        return sum(t * m for t, m in self.entries.items())


@dataclass(frozen=True, slots=True)
class BitAgreementStat:
    """How often an output bit disagrees with its input bit."""

    n: int
    i: int
    disagree_count: int
    probability: Fraction


def _binom(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def chain_count_formula(n: int, t: int) -> int:
    """Closed form for the number of chains of length t."""
    if not 1 <= t <= n + 1:
        raise ValueError(f"chain length {t} out of [1, {n + 1}]")
    if (t - n) % 2 == 0:
        return 0
    return _binom(n, (n - t + 1) // 2) - _binom(n, (n - t - 1) // 2)


def chain_count_enumerated(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> ChainCountTable:
    """Count distinct chain codes by length over the whole cube."""
    if (1 << n) > cap:
        raise EnumerationCapError(1 << n, cap, "vertices")
    seen: set[tuple[int, int]] = set()
    counts = {t: 0 for t in range(1, n + 2)}
    for v in range(1 << n):
        zeros, ones = _unmatched_shifts(n, v)
        blank_mask = 0
        for s in zeros:
            blank_mask |= 1 << s
        for s in ones:
            blank_mask |= 1 << s
        key = (blank_mask, v & ~blank_mask)
        if key not in seen:
            seen.add(key)
            counts[len(zeros) + len(ones) + 1] += 1
    return ChainCountTable(n=n, entries=counts)


def unmarked_profile_count(n: int, a: int, b: int) -> int:
    """Vertices whose marking leaves exactly a unmarked zeros and b ones."""
    if a < 0 or b < 0 or a + b > n:
        raise ValueError(f"profile ({a}, {b}) out of range for n={n}")
    if (a + b - n) % 2:
        raise ParityError(f"a+b={a + b} must have the parity of n={n}")
    return _binom(n, (n - a - b) // 2) - _binom(n, (n - a - b - 2) // 2)


def unmarked_zeros_count(n: int, a: int) -> int:
    """Vertices whose marking leaves exactly a unmarked zeros."""
    if not 0 <= a <= n:
        raise ValueError(f"unmarked zero count {a} out of [0, {n}]")
    return _binom(n, (n - a) // 2)


def unmarked_profile_histogram(
    n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> dict[tuple[int, int], int]:
    """Enumeration oracle for the profile counts."""
    if (1 << n) > cap:
        raise EnumerationCapError(1 << n, cap, "vertices")
    hist: dict[tuple[int, int], int] = {}
    for v in range(1 << n):
        zeros, ones = _unmatched_shifts(n, v)
        key = (len(zeros), len(ones))
        hist[key] = hist.get(key, 0) + 1
    return hist


def flip_probability_exact(n: int, i: int) -> Fraction:
    """Exact Pr over uniform x of output bit i differing from input bit i.

    Evaluates the double sum over prefix profiles (a unmarked zeros, no
    unmarked ones) and suffix unmarked-zero counts c, restricted to a >= c,
    with a final factor 1/2 for x_i = 0.
    """
    if n % 2:
        raise OddLengthError(f"flip probability requires even n, got {n}")
    if not 1 <= i <= n:
        raise CoordinateRangeError(f"coordinate {i} out of [1, {n}]")
    pre = i - 1
    suf = n - i
    total = 0  # counts weighted by 2^(pre + suf)
    for k in range(suf + 1):
        c_ways = _binom(suf, (suf - k) // 2)
        if c_ways == 0:
            continue
        a_ways = 0
        for j in range(k, pre + 1):
            if (j - pre) % 2:
                continue
            a_ways += _binom(pre, (pre - j) // 2) - _binom(pre, (pre - j - 2) // 2)
        total += c_ways * a_ways
    return Fraction(total, 1 << (pre + suf + 1))


def flip_probability_exhaustive(
    n: int, i: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> BitAgreementStat:
    """Enumeration oracle for :func:`flip_probability_exact`."""
    if n % 2:
        raise OddLengthError(f"flip probability requires even n, got {n}")
    if not 1 <= i <= n:
        raise CoordinateRangeError(f"coordinate {i} out of [1, {n}]")
    if (1 << n) > cap:
        raise EnumerationCapError(1 << n, cap, "vertices")
    table = image_table(BijectionKind.PSI, n)
    s_in = n - i
    s_out = n + 1 - i
    count = 0
    for v in range(1 << n):
        if ((v >> s_in) ^ (table[v] >> s_out)) & 1:
            count += 1
    return BitAgreementStat(
        n=n, i=i, disagree_count=count, probability=Fraction(count, 1 << n)
    )


def dyck_is_marked(x: BitVector, i: int) -> bool:
    """Marking criterion via balanced substrings (1 = open, 0 = close).

    Coordinate i is marked iff some window [s, e] containing i has equally
    many ones and zeros and no prefix with more zeros than ones.  Naive
    O(n^2) scan; kept simple because it serves as a cross-check, not a hot
    path.
    """
    n, v = x.n, x.value
    if not 1 <= i <= n:
        raise CoordinateRangeError(f"coordinate {i} out of [1, {n}]")
    for s in range(i, 0, -1):
        if not (v >> (n - s)) & 1:
            continue  # a window starting with 0 dips negative immediately
        bal = 0
        for e in range(s, n + 1):
            bal += 1 if (v >> (n - e)) & 1 else -1
            if bal < 0:
                break
            if bal == 0 and e >= i:
                return True
    return False


def dyck_marked_coordinates(x: BitVector) -> frozenset[int]:
    """All coordinates covered by some balanced window, in one O(n^2) pass.

    For each start s the union of its balanced windows is [s, e_max(s)], so
    unioning those intervals reproduces {i : dyck_is_marked(x, i)}.
    """
    n, v = x.n, x.value
    covered = [False] * (n + 2)
    for s in range(1, n + 1):
        if not (v >> (n - s)) & 1:
            continue
        bal = 0
        e_max = 0
        for e in range(s, n + 1):
            bal += 1 if (v >> (n - e)) & 1 else -1
            if bal < 0:
                break
            if bal == 0:
                e_max = e
        for p in range(s, e_max + 1):
            covered[p] = True
    return frozenset(p for p in range(1, n + 1) if covered[p])


def majority(x: BitVector) -> int:
    """1 iff strictly more ones than zeros (length must be odd)."""
    if x.n % 2 == 0:
        raise ParityError(f"majority needs odd length, got {x.n}")
    return 1 if 2 * x.weight() > x.n else 0


def majority_reduction(x: BitVector) -> BitVector:
    """Blow x up to 3n+1 bits so that the first output bit of the
    chain-climbing map computes majority(x).

    Layout: a leading 0, then n ones, then two bits per input bit, 10 for an
    input 1 and 00 for an input 0.  Each output bit depends on at most one
    input bit.  An input 1 contributes a self-matching pair while an input 0
    contributes two closers that consume the leading ones, so the final
    string has a single unmarked zero exactly when ones are in the majority,
    and that is precisely when the first bit survives the climb unchanged.
    """
    n, v = x.n, x.value
    if n % 2 == 0:
        raise ParityError(f"the reduction needs odd input length, got {n}")
    out = (1 << n) - 1  # the n ones; the leading 0 is implicit above them
    for s in range(n - 1, -1, -1):
        out = (out << 2) | (0b10 if (v >> s) & 1 else 0b00)
    return BitVector(3 * n + 1, out)


def output_bit(kind: BijectionKind, x: BitVector, i: int) -> int:
    """Coordinate i of the chosen bijection's output, i in [1, n+1]."""
    kind = BijectionKind(kind)
    n = x.n
    if not 1 <= i <= n + 1:
        raise CoordinateRangeError(f"output coordinate {i} out of [1, {n + 1}]")
    if n % 2:
        raise OddLengthError(f"{kind.value} requires even input length, got {n}")
    z = _FORWARD_VALUE[kind](n, x.value)
    return (z >> (n + 1 - i)) & 1


@lru_cache(maxsize=8)
def influence_profile(
    kind: BijectionKind, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[Fraction, ...]:
    """Exact total influence of every output bit, index 0 = coordinate 1.

    Counts, per output bit, the (x, j) pairs whose input flip changes that
    bit.  This is the per-bit accounting dual to the distance sums in the
    stretch sweeps.
    """
    kind = BijectionKind(kind)
    if n % 2:
        raise OddLengthError(f"{kind.value} requires even input length, got {n}")
    if n * (1 << n) > cap:
        raise EnumerationCapError(n * (1 << n), cap, "(x, j) pairs")
    table = image_table(kind, n)
    counts = [0] * (n + 1)  # indexed by output shift
    for v in range(1 << n):
        zv = table[v]
        for s in range(n):
            d = zv ^ table[v ^ (1 << s)]
            while d:
                low = d & -d
                counts[low.bit_length() - 1] += 1
                d ^= low
    size = 1 << n
    # output coordinate i sits at shift n+1-i
    return tuple(Fraction(counts[n + 1 - i], size) for i in range(1, n + 2))


def influence(
    kind: BijectionKind, i: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Fraction:
    """Expected number of input flips that change output bit i."""
    if not 1 <= i <= n + 1:
        raise CoordinateRangeError(f"output coordinate {i} out of [1, {n + 1}]")
    return influence_profile(BijectionKind(kind), n, cap)[i - 1]


def first_output_bit_of_reduction(x: BitVector) -> int:
    """Majority via the reduction: bit 1 of the image of the blown-up input."""
    r = majority_reduction(x)
    m = r.n
    return (_psi_value(m, r.value) >> m) & 1
