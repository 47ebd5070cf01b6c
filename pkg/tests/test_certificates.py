import pytest
from hypothesis import given
from hypothesis import strategies as st

from qdiamond.certificates import (LinearWeight, QuadraticForm, form_hits_progression,
                                   form_witness, two_form_weighted_divisibility,
                                   weighted_form_divisibility)

TRI = QuadraticForm(1, 1, 2)
OBLONG = QuadraticForm(1, 1, 1)
PENT = QuadraticForm(3, 1, 2)
MOD11 = QuadraticForm(3, 2, 1)


def test_form_values():
    assert [TRI(m) for m in range(5)] == [0, 1, 3, 6, 10]
    assert [PENT(m) for m in (-2, -1, 0, 1, 2)] == [5, 1, 0, 2, 7]
    assert str(MOD11) == "(3m^2 + 2m)/1"


def test_non_integral_form_rejected():
    with pytest.raises(ValueError):
        QuadraticForm(1, 0, 2)
    with pytest.raises(ValueError):
        QuadraticForm(1, 1, 0)


def test_hits_examples():
    assert not form_hits_progression(TRI, 3, 2)
    assert not form_hits_progression(OBLONG, 5, 3)
    assert form_hits_progression(TRI, 3, 0)
    assert form_witness(TRI, 3, 0) == 0
    assert form_witness(TRI, 3, 1) == 1


def test_weighted_examples():
    assert weighted_form_divisibility(OBLONG, LinearWeight(2, 1), 5, 1, 5)
    assert weighted_form_divisibility(PENT, LinearWeight(6, 1), 5, 1, 5)
    assert not weighted_form_divisibility(TRI, LinearWeight(2, 1), 3, 0, 3)
    # vacuous: 2 is never a triangular number mod 3
    assert weighted_form_divisibility(TRI, LinearWeight(2, 1), 3, 2, 3)


def test_two_form_examples():
    w = LinearWeight(3, 1)
    assert two_form_weighted_divisibility(MOD11, w, 11, 3, 11)
    assert not two_form_weighted_divisibility(MOD11, w, 5, 0, 5)
    # x^2 + y^2 never reaches 3 mod 4
    assert two_form_weighted_divisibility(QuadraticForm(1, 0, 1), LinearWeight(1, 1), 4, 3, 5)


def test_argument_checks():
    with pytest.raises(ValueError):
        form_hits_progression(TRI, 0, 0)
    with pytest.raises(ValueError):
        weighted_form_divisibility(TRI, LinearWeight(1, 0), 3, 0, 1)


# (a m^2 + b m)/2 is integral exactly when a + b is even
forms = st.one_of(
    st.builds(QuadraticForm, st.integers(-6, 6), st.integers(-6, 6)),
    st.builds(lambda a, b: QuadraticForm(a, b + (a + b) % 2, 2),
              st.integers(-6, 6), st.integers(-6, 6)),
)


@given(forms, st.integers(1, 15), st.data())
def test_hits_agrees_with_long_search(f, A, data):
    B = data.draw(st.integers(0, A - 1))
    far = any((f(m) - B) % A == 0 for m in range(-400, 400))
    assert form_hits_progression(f, A, B) == far


@given(forms, st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 12), st.integers(2, 9),
       st.data())
def test_weighted_agrees_with_long_search(f, c, e, A, M, data):
    B = data.draw(st.integers(0, A - 1))
    w = LinearWeight(c, e)
    far = all(w(m) % M == 0 for m in range(-500, 500) if (f(m) - B) % A == 0)
    assert weighted_form_divisibility(f, w, A, B, M) == far


@given(st.integers(1, 4), st.integers(-4, 4), st.integers(1, 8), st.integers(2, 7), st.data())
def test_two_form_agrees_with_pair_search(a, b, A, M, data):
    f = QuadraticForm(a, b, 1)
    w = LinearWeight(data.draw(st.integers(-3, 3)), data.draw(st.integers(-3, 3)))
    B = data.draw(st.integers(0, A - 1))
    span = range(-60, 60)
    far = all((w(j) * w(k)) % M == 0 for j in span for k in span if (f(j) + f(k) - B) % A == 0)
    assert two_form_weighted_divisibility(f, w, A, B, M) == far
