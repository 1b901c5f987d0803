"""Field arithmetic, conjugation, and numeric evaluation of scalars."""

import cmath

import pytest
from hypothesis import given, settings, strategies as st

from suq2 import PoleError, Scalar, ZeroDivisorError
from suq2.scalars import GaussianRational

Q = Scalar.q()
QB = Scalar.qbar()
ZETA = Scalar.zeta()
ONE = Scalar.one()
I = Scalar.imag_unit()


# -- strategies ---------------------------------------------------------------

small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def monomials(draw):
    a = draw(st.integers(min_value=-2, max_value=2))
    b = draw(st.integers(min_value=-2, max_value=2))
    re = draw(small_ints)
    im = draw(st.integers(min_value=-2, max_value=2))
    return Scalar.monomial(a, b, GaussianRational(re, im))


@st.composite
def scalars(draw):
    terms = draw(st.lists(monomials(), min_size=1, max_size=3))
    total = Scalar.zero()
    for t in terms:
        total = total + t
    if draw(st.booleans()):
        den = draw(monomials()) + ONE
        if not den.is_zero():
            total = total / den
    return total


nonzero_scalars = scalars().filter(lambda s: not s.is_zero())


# -- examples -----------------------------------------------------------------


def test_zeta_is_unimodular():
    assert (ZETA * ZETA.conjugate()).is_one()


def test_modulus_square_is_self_conjugate():
    m = Q * QB
    assert (m - m.conjugate()).is_zero()


def test_additive_inverse():
    assert (Q + (-Q)).is_zero()


def test_conjugation_swaps_variables():
    assert Q.conjugate() == QB
    assert (I * Q**2).conjugate() == -(I * QB**2)
    assert ZETA.conjugate() == ZETA.inverse()


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisorError, match="zero-divisor"):
        ONE / Scalar.zero()
    with pytest.raises(ZeroDivisorError):
        Scalar.zero().inverse()


def test_gcd_cancellation():
    assert (ONE - Q**2 * QB**2) / (ONE - Q * QB) == ONE + Q * QB
    assert (Q**3 * QB) / (Q * QB) == Q**2


def test_evaluate_examples():
    assert abs(ZETA.evaluate(1 + 1j) - 1j) < 1e-12
    assert abs((Q * QB).evaluate(0.6 + 0.8j) - 1.0) < 1e-12


def test_evaluate_pole_on_unit_circle():
    f = ONE / (ONE - Q * QB)
    for qv in (1.0, 1j, 0.6 + 0.8j):
        with pytest.raises(PoleError, match="pole-at-q"):
            f.evaluate(qv)


def test_evaluate_rejects_zero():
    with pytest.raises(PoleError):
        Q.evaluate(0)


def test_render_round_trip_via_parser():
    from suq2 import parse, suq2_presentation

    A = suq2_presentation()
    for s in (ZETA, Q**-2, (Q**2 - QB) / (ONE - Q * QB), I * Q + Scalar.from_int(2)):
        assert parse(s.render(), A) == A.scalar(s)


# -- laws ----------------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(scalars(), scalars(), scalars())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * (b * c) == (a * b) * c
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200, deadline=None)
@given(nonzero_scalars)
def test_multiplicative_inverse(a):
    assert (a * a.inverse()).is_one()
    assert (ONE / a) * a == ONE


@settings(max_examples=200, deadline=None)
@given(scalars(), scalars())
def test_conjugation_is_a_ring_involution(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


@settings(max_examples=100, deadline=None)
@given(scalars(), scalars(), st.integers(min_value=0, max_value=50))
def test_evaluate_is_a_homomorphism(a, b, k):
    qv = cmath.rect(0.8, 0.13 * k)
    try:
        va, vb = a.evaluate(qv), b.evaluate(qv)
        vs, vp = (a + b).evaluate(qv), (a * b).evaluate(qv)
        vc = a.conjugate().evaluate(qv)
    except PoleError:
        return
    scale = max(1.0, abs(va), abs(vb))
    assert abs(vs - (va + vb)) / scale < 1e-9
    assert abs(vp - va * vb) / scale**2 < 1e-9
    assert abs(vc - va.conjugate()) / scale < 1e-9
