import hypothesis.strategies as st
import pytest
from hypothesis import given

from cubeball.bits import BitVector, distance
from cubeball.bijections import (
    BallVector,
    BijectionKind,
    forward_map,
    inverse_map,
    naive,
    naive_inverse,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    transitivity_map,
)
from cubeball.chains import mark
from cubeball.errors import NotInBallError, NotInImageError, OddLengthError

from strategies import bit_vectors

KINDS = list(BijectionKind)


@pytest.mark.parametrize(
    "src,img",
    [
        ("1111", "11111"),
        ("0111", "11110"),
        ("0011", "01111"),
        ("0001", "01110"),
        ("0000", "00111"),
    ],
)
def test_psi_full_chain_values(src, img):
    assert psi(BitVector.parse(src)).render() == img
    assert psi_inverse(BitVector.parse(img)).render() == src


@pytest.mark.parametrize(
    "src,img",
    [("0000", "11111"), ("0111", "01110"), ("0011", "00111")],
)
def test_phi_examples(src, img):
    assert phi(BitVector.parse(src)).render() == img
    assert phi_inverse(BitVector.parse(img)).render() == src


@pytest.mark.parametrize(
    "src,img",
    [("0000", "11111"), ("1110", "11100"), ("0011", "11001")],
)
def test_naive_examples(src, img):
    assert naive(BitVector.parse(src)).render() == img
    assert naive_inverse(BitVector.parse(img)).render() == src


@pytest.mark.parametrize("kind", KINDS)
def test_forward_rejects_odd_length(kind):
    with pytest.raises(OddLengthError):
        forward_map(kind)(BitVector.parse("010"))


@pytest.mark.parametrize("kind", KINDS)
def test_inverse_rejects_odd_cube_dimension(kind):
    # length 4 input would invert to a 3-bit cube
    with pytest.raises(OddLengthError):
        inverse_map(kind)(BitVector.parse("1111"))


def test_psi_inverse_rejects_points_outside_ball():
    with pytest.raises(NotInBallError):
        psi_inverse(BitVector.parse("00011"))


def test_phi_inverse_not_in_image_is_distinct():
    # trailing 0 with level <= n/2 is outside the image (and the ball);
    # the image check fires first
    with pytest.raises(NotInImageError):
        phi_inverse(BitVector.parse("00110"))


def test_ball_vector_validates_membership():
    with pytest.raises(NotInBallError):
        BallVector(BitVector.parse("00011"))
    z = BallVector(BitVector.parse("00111"))
    assert z.cube_dimension == 4


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_bijectivity_onto_ball_exhaustive(kind, n):
    fwd = forward_map(kind)
    inv = inverse_map(kind)
    images = set()
    for value in range(1 << n):
        x = BitVector(n, value)
        z = fwd(x)
        assert 2 * z.vector.weight() > n
        assert inv(z) == x
        images.add(z.vector.value)
    ball = {z for z in range(1 << (n + 1)) if 2 * z.bit_count() > n}
    assert images == ball
    for zv in ball:
        z = BitVector(n + 1, zv)
        assert fwd(inv(z)).vector == z


@pytest.mark.parametrize("kind", KINDS)
@given(v=bit_vectors(min_n=2, max_n=32, even_only=True))
def test_roundtrip_pointwise(kind, v):
    fwd = forward_map(kind)
    inv = inverse_map(kind)
    z = fwd(v)
    assert 2 * z.vector.weight() > v.n
    assert inv(z) == v


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_marked_coordinates_pass_through(n):
    for value in range(1 << n):
        x = BitVector(n, value)
        img = psi(x).vector
        for i in mark(x).marked_coordinates():
            assert img.bit(i) == x.bit(i)


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_unmarked_skeleton_determines_moved_bits(n):
    # the image restricted to unmarked coordinates (plus the appended bit)
    # only depends on the unmarked 0^a 1^b skeleton
    for value in range(1 << n):
        x = BitVector(n, value)
        unmarked = mark(x).unmarked_coordinates()
        img = psi(x).vector
        if not unmarked:
            assert img.render() == x.render() + "1"
            continue
        skeleton = BitVector.from_bits([x.bit(p) for p in unmarked])
        skel_img = psi(skeleton).vector
        got = [img.bit(p) for p in unmarked] + [img.bit(n + 1)]
        want = [skel_img.bit(r) for r in range(1, len(unmarked) + 2)]
        assert got == want


def _unmarked_profile(text: str) -> tuple[int, int]:
    if not text:
        return 0, 0
    ms = mark(BitVector.parse(text))
    return ms.unmarked_zeros(), ms.unmarked_ones()


@given(st.data())
def test_edge_images_depend_only_on_unmarked_profiles(data):
    n = 2 * data.draw(st.integers(1, 8))
    x = BitVector(n, data.draw(st.integers(0, (1 << n) - 1)))
    i = data.draw(st.integers(1, n))
    y = x.flip_at(i)
    a, b = _unmarked_profile(x.render()[: i - 1])
    c, d = _unmarked_profile(x.render()[i:])
    w0 = BitVector.parse("0" * a + "1" * b + "0" + "0" * c + "1" * d)
    w1 = BitVector.parse("0" * a + "1" * b + "1" + "0" * c + "1" * d)
    assert distance(psi(x).vector, psi(y).vector) == distance(
        psi(w0).vector, psi(w1).vector
    )


def test_transitivity_map_swaps_and_cancels():
    x = psi(BitVector.parse("01100110"))
    y = psi(BitVector.parse("00000000"))
    z = psi(BitVector.parse("10100101"))
    assert transitivity_map(x, y, x) == y
    assert transitivity_map(x, y, y) == x
    assert transitivity_map(x, x, z) == z


@given(st.data())
def test_transitivity_map_is_an_exchanging_bijection(data):
    n = 2 * data.draw(st.integers(1, 6))
    xs = psi(BitVector(n, data.draw(st.integers(0, (1 << n) - 1))))
    ys = psi(BitVector(n, data.draw(st.integers(0, (1 << n) - 1))))
    zs = psi(BitVector(n, data.draw(st.integers(0, (1 << n) - 1))))
    assert transitivity_map(xs, ys, xs) == ys
    assert transitivity_map(xs, ys, ys) == xs
    moved = transitivity_map(xs, ys, zs)
    assert transitivity_map(xs, ys, moved) == zs  # involution
