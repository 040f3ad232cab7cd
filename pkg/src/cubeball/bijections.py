"""Bijections from the Boolean cube onto the Hamming ball.

All three maps send {0,1}^n (n even) onto the ball
``B = { z in {0,1}^(n+1) : |z| > n/2 }`` and are inverted exactly.

``psi`` climbs each vertex half of its distance to the top of its chain and
uses the extra coordinate to separate the two vertices that land together:
a vertex at distance ell from the top of its chain moves to distance
floor(ell/2), and the appended bit is 1 when ell is even, 0 when odd.
Equivalently, with ell unmarked zeros at unmarked ranks 1..ell, it turns the
zeros at ranks floor(ell/2)+1..ell into ones.  Forward edge stretch is at
most 4 and inverse edge stretch at most 5 (verified exhaustively by the
metrics module).

``phi`` reflects the bottom half of each chain onto the top half: level j
goes to level n-j (appending 1) when j <= n/2 and stays put (appending 0)
otherwise.  Its forward stretch is 3, but its inverse stretch is unbounded.

``naive`` is the obvious baseline: complement-and-append-1 on the lower half
of the cube, append-0 on the upper half.  Its maximum stretch is n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Union

from .bits import BitVector
from .chains import _unmatched_shifts
from .errors import NotInBallError, NotInImageError, OddLengthError


class BijectionKind(str, Enum):
    PSI = "psi"
    PHI = "phi"
    NAIVE = "naive"


@dataclass(frozen=True, slots=True)
class BallVector:
    """A vector of length n+1 with weight strictly above n/2."""

    vector: BitVector

    def __post_init__(self):
        m = self.vector.n
        if 2 * self.vector.weight() <= m - 1:
            raise NotInBallError(
                f"weight {self.vector.weight()} not above {(m - 1) / 2} "
                f"for length {m}"
            )

    @property
    def cube_dimension(self) -> int:
        return self.vector.n - 1

    def render(self) -> str:
        return self.vector.render()

    def __str__(self) -> str:
        return self.render()


BallLike = Union[BallVector, BitVector]


def _require_even(n: int, who: str) -> None:
    if n % 2:
        raise OddLengthError(f"{who} requires even input length, got {n}")


def _as_ball_value(z: BallLike, who: str) -> tuple[int, int]:
    """Return (n, integer value) for a length-(n+1) ball point, validating."""
    vec = z.vector if isinstance(z, BallVector) else z
    n = vec.n - 1
    _require_even(n, who)
    if 2 * vec.weight() <= n:
        raise NotInBallError(f"{vec} has weight {vec.weight()}, not above {n}/2")
    return n, vec.value


# integer-valued fast paths; coordinate i of an n-bit value sits at bit n-i


def _psi_value(n: int, v: int) -> int:
    zeros = []
    depth = 0
    for s in range(n - 1, -1, -1):
        if (v >> s) & 1:
            depth += 1
        elif depth:
            depth -= 1
        else:
            zeros.append(s)
    ell = len(zeros)
    out = v
    for s in zeros[ell >> 1 :]:
        out |= 1 << s
    return (out << 1) | ((ell & 1) ^ 1)


def _psi_inverse_value(n: int, z: int) -> int:
    tail = z & 1
    x = z >> 1
    zeros, ones = _unmatched_shifts(n, x)
    ell = len(zeros)
    new_ell = 2 * ell + (tail ^ 1)
    unmarked = zeros + ones
    if new_ell > len(unmarked):
        raise NotInBallError(f"value {z:b} is not reached from the cube")
    out = x
    for s in unmarked[ell:new_ell]:
        out &= ~(1 << s)
    return out


def _phi_value(n: int, v: int) -> int:
    j = v.bit_count()
    if 2 * j > n:
        return v << 1
    zeros, ones = _unmatched_shifts(n, v)
    k = (n - len(zeros) - len(ones)) // 2
    out = v
    for s in zeros[j - k :]:
        out |= 1 << s
    return (out << 1) | 1


def _phi_inverse_value(n: int, z: int) -> int:
    tail = z & 1
    x = z >> 1
    j = x.bit_count()
    if tail == 0:
        if 2 * j <= n:
            raise NotInImageError(
                f"{z:0{n + 1}b} ends in 0 but has level {j} <= {n}/2"
            )
        return x
    if 2 * j < n:
        raise NotInImageError(f"{z:0{n + 1}b} ends in 1 but has level {j} < {n}/2")
    zeros, ones = _unmatched_shifts(n, x)
    ell = len(zeros)
    k = (n - len(zeros) - len(ones)) // 2
    unmarked = zeros + ones
    out = x
    for s in unmarked[ell : j - k]:
        out &= ~(1 << s)
    return out


def _naive_value(n: int, v: int) -> int:
    if 2 * v.bit_count() <= n:
        return ((v ^ ((1 << n) - 1)) << 1) | 1
    return v << 1


def _naive_inverse_value(n: int, z: int) -> int:
    w = z >> 1
    if z & 1:
        return w ^ ((1 << n) - 1)
    return w


_FORWARD_VALUE: dict[BijectionKind, Callable[[int, int], int]] = {
    BijectionKind.PSI: _psi_value,
    BijectionKind.PHI: _phi_value,
    BijectionKind.NAIVE: _naive_value,
}

_INVERSE_VALUE: dict[BijectionKind, Callable[[int, int], int]] = {
    BijectionKind.PSI: _psi_inverse_value,
    BijectionKind.PHI: _phi_inverse_value,
    BijectionKind.NAIVE: _naive_inverse_value,
}


def psi(x: BitVector) -> BallVector:
    """Map a cube vertex into the ball by climbing half way up its chain."""
    _require_even(x.n, "psi")
    return BallVector(BitVector(x.n + 1, _psi_value(x.n, x.value)))


def psi_inverse(z: BallLike) -> BitVector:
    """Inverse of :func:`psi`: descend twice the distance from the chain top."""
    n, value = _as_ball_value(z, "psi_inverse")
    return BitVector(n, _psi_inverse_value(n, value))


def phi(x: BitVector) -> BallVector:
    """Map a cube vertex into the ball by reflecting the lower chain half."""
    _require_even(x.n, "phi")
    return BallVector(BitVector(x.n + 1, _phi_value(x.n, x.value)))


def phi_inverse(z: BallLike) -> BitVector:
    """Inverse of :func:`phi`.

    Points with final bit 0 and level <= n/2 are outside the image; they get
    a distinct :class:`NotInImageError` even though such points are also
    outside the ball (the image check runs first, so direct misuse with a raw
    BitVector is reported precisely).
    """
    vec = z.vector if isinstance(z, BallVector) else z
    n = vec.n - 1
    _require_even(n, "phi_inverse")
    return BitVector(n, _phi_inverse_value(n, vec.value))


def naive(x: BitVector) -> BallVector:
    """Complement-and-append-1 below the equator, append-0 above it."""
    _require_even(x.n, "naive")
    return BallVector(BitVector(x.n + 1, _naive_value(x.n, x.value)))


def naive_inverse(z: BallLike) -> BitVector:
    n, value = _as_ball_value(z, "naive_inverse")
    return BitVector(n, _naive_inverse_value(n, value))


def forward_map(kind: BijectionKind) -> Callable[[BitVector], BallVector]:
    return {BijectionKind.PSI: psi, BijectionKind.PHI: phi, BijectionKind.NAIVE: naive}[
        BijectionKind(kind)
    ]


def inverse_map(kind: BijectionKind) -> Callable[[BallLike], BitVector]:
    return {
        BijectionKind.PSI: psi_inverse,
        BijectionKind.PHI: phi_inverse,
        BijectionKind.NAIVE: naive_inverse,
    }[BijectionKind(kind)]


def transitivity_map(x: BallVector, y: BallVector, z: BallVector) -> BallVector:
    """The ball self-map sending x to y and y to x with bounded distortion.

    Pulls z back to the cube, translates by the xor of the pullbacks of x
    and y, and pushes forward again.
    """
    n, zv = _as_ball_value(z, "transitivity_map")
    nx, xv = _as_ball_value(x, "transitivity_map")
    ny, yv = _as_ball_value(y, "transitivity_map")
    if not n == nx == ny:
        raise NotInBallError("transitivity_map needs three points of equal length")
    delta = _psi_inverse_value(n, xv) ^ _psi_inverse_value(n, yv)
    moved = _psi_inverse_value(n, zv) ^ delta
    return BallVector(BitVector(n + 1, _psi_value(n, moved)))
