from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wdpatch.exact import (
    Matrix,
    NotNilpotent,
    Polynomial,
    Scalar,
    char_poly,
    format_scalar,
    jordan_blocks,
    jordan_data,
    nilpotent_rank_profile,
    parse_scalar,
    rank,
)
from wdpatch.exact.scalar import totient
from wdpatch.symplectic import N0, N1, N2, N3

ORDERS = [1, 3, 4, 5, 8, 12]

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def scalars(draw, orders=ORDERS):
    n = draw(st.sampled_from(orders))
    coeffs = draw(st.lists(small, min_size=totient(n), max_size=totient(n)))
    return Scalar(0, n=n, coeffs=coeffs) if n > 1 else Scalar(coeffs[0])


nonzero = scalars().filter(lambda x: not x.is_zero())


@st.composite
def matrices(draw, rows=None, cols=None, orders=(1, 3, 4)):
    r = rows or draw(st.integers(1, 4))
    c = cols or draw(st.integers(1, 4))
    sparse = st.one_of(st.just(Scalar(0)), scalars(orders))
    return Matrix([[draw(sparse) for _ in range(c)] for _ in range(r)])


# --- scalars -------------------------------------------------------------


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) - b == a
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(scalars(), nonzero)
def test_division_undoes_multiplication(a, b):
    assert (a * b) / b == a
    assert b * b.inverse() == Scalar(1)


@given(scalars(), scalars())
def test_complex_conjugation_is_multiplicative(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    ab = a * b
    assert ab * ab.conj() == (a * a.conj()) * (b * b.conj())


@given(scalars(orders=[5]), scalars(orders=[5]))
def test_norm_multiplicative_in_one_field(a, b):
    # the norm is taken in the canonical field of each value
    if a.n == b.n == (a * b).n == 5:
        assert (a * b).norm() == a.norm() * b.norm()


@given(scalars())
def test_format_parse_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_canonical_order_drops_to_rationals():
    z = Scalar.zeta(3)
    assert (z + z * z).n == 1
    assert z + z * z == Scalar(-1)
    assert Scalar.zeta(6) == -Scalar.zeta(3, 2)


def test_equal_values_hash_equal():
    a = Scalar.zeta(4) * Scalar.zeta(4)
    assert a == Scalar(-1)
    assert hash(a) == hash(Scalar(-1))


@pytest.mark.parametrize("q", [2, 3, 5, 7, Fraction(9, 4), 12])
def test_square_roots_of_q(q):
    s = Scalar.sqrt_rational(q)
    assert s * s == Scalar(q)
    assert parse_scalar("q^{1/2}", q=q) * parse_scalar("q^{-1/2}", q=q) == Scalar(1)
    assert parse_scalar("q^{3/2}", q=q) == s * q


def test_sqrt_of_negative_rational():
    s = Scalar.sqrt_rational(-3)
    assert s * s == Scalar(-3)


@pytest.mark.parametrize("text", ["1.5", "q^{1/2}", "z0", "2 +"])
def test_parse_rejects_bad_input(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_roots_of_unity():
    for n in (1, 2, 3, 4, 5, 6, 8, 12):
        z = Scalar.zeta(n)
        assert z ** n == Scalar(1)
        assert z.root_of_unity_order() == n
    assert not Scalar(2).is_root_of_unity()


# --- matrices ------------------------------------------------------------


@given(matrices())
def test_rank_nullity(m):
    assert m.rank() + len(m.nullspace()) == m.cols


@given(matrices(rows=3, cols=3), matrices(rows=3, cols=3))
def test_det_multiplicative(a, b):
    assert (a @ b).det() == a.det() * b.det()


@settings(max_examples=40)
@given(matrices(rows=3, cols=3))
def test_cayley_hamilton(m):
    assert char_poly(m)(m).is_zero()


@given(matrices(rows=3, cols=3))
def test_inverse(m):
    if m.is_invertible():
        assert m @ m.inverse() == Matrix.identity(3)
    else:
        assert m.det().is_zero()


def test_char_poly_examples():
    x = Polynomial.x()
    assert char_poly(Matrix.identity(2)) == (x - Polynomial([1])) ** 2
    assert char_poly(N1) == x ** 4
    for q in (2, 3, 5):
        s = parse_scalar("q^{1/2}", q=q)
        p = char_poly(Matrix.diag([s, s.inverse()]))
        assert p == Polynomial([1, -(s + s.inverse()), 1])


def test_char_poly_needs_square():
    with pytest.raises(ValueError):
        char_poly(Matrix([[1, 2]]))


def test_rank_examples():
    assert rank(Matrix.zeros(4)) == 0
    assert rank(N1) == 1
    assert rank(N2) == 2
    assert rank(N3) == 3


# --- Jordan data ---------------------------------------------------------


def test_jordan_examples():
    part, g = jordan_data(N0)
    assert part == (1, 1, 1, 1) and g == Matrix.identity(4)
    assert jordan_data(N3)[0] == (4,)
    assert jordan_data(N2)[0] == (2, 2)
    assert jordan_data(N1)[0] == (2, 1, 1)


def test_jordan_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        jordan_data(Matrix.identity(2))


partitions = st.sampled_from([(1,), (2,), (3,), (2, 1), (1, 1, 1), (4,), (3, 1), (2, 2), (2, 1, 1),
                              (1, 1, 1, 1), (3, 2), (4, 1), (2, 2, 1), (5,)])


@st.composite
def invertible(draw, n):
    while True:
        P = Matrix([[draw(st.integers(-2, 2)) for _ in range(n)] for _ in range(n)])
        if P.is_invertible():
            return P


@given(partitions, st.data())
def test_jordan_conjugation_identity(lam, data):
    n = sum(lam)
    P = data.draw(invertible(n))
    N = P @ jordan_blocks(lam) @ P.inverse()
    part, g = jordan_data(N)
    assert part == lam
    assert g @ N @ g.inverse() == jordan_blocks(part)


@given(partitions, st.integers(0, 5))
def test_rank_profile(lam, k):
    J = jordan_blocks(lam)
    expected = sum(max(p - k, 0) for p in lam)
    assert nilpotent_rank_profile(lam, k) == expected
    assert (J ** k).rank() == expected
