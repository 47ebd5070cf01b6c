import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import colored_partition_count, convolve
from qdiamond.diamonds import (diamond_quotient, dk_oracle, dk_progression, dk_series,
                               dk_series_via_partitions, dk_value)
from qdiamond.eta import EtaQuotient
from qdiamond.series import ZZ, Zmod, equal_up_to, reduce_mod


def brute_dk(k, n):
    """d_k via f_2^k times (3k+1)-coloured partition counts."""
    f2 = [0] * n
    f2[0] = 1
    for s in range(2, n, 2):
        f2 = [f2[i] - (f2[i - s] if i >= s else 0) for i in range(n)]
    num = [1] + [0] * (n - 1)
    for _ in range(k):
        num = convolve(num, f2, n)
    colored = [colored_partition_count(i, 3 * k + 1) for i in range(n)]
    return convolve(num, colored, n)


def test_first_values():
    assert dk_series(1, 5).values.tolist() == [1, 4, 13, 36, 90]
    assert dk_oracle(1, 5).tolist() == [1, 4, 13, 36, 90]
    assert brute_dk(1, 5) == [1, 4, 13, 36, 90]
    assert dk_value(2, 2) == 33 == brute_dk(2, 3)[2]
    assert dk_value(2, 1) == 7


@pytest.mark.parametrize("k", [1, 2, 3, 7, 20])
def test_constant_term(k):
    assert dk_series(k, 3)[0] == 1
    assert dk_series(k, 3, Zmod(5))[0] == 1


def test_brute_force_agreement():
    for k in (1, 2, 3):
        assert dk_series(k, 12).values.tolist() == brute_dk(k, 12)


def test_oracle_examples():
    assert equal_up_to(dk_oracle(1, 200), dk_series(1, 200).values, 200)
    assert dk_oracle(3, 3)[1] == 10
    assert dk_oracle(2, 64) == dk_series(2, 64).values


@pytest.mark.parametrize("k", range(1, 6))
def test_oracle_equivalence(k):
    assert dk_series(k, 200).values == dk_oracle(k, 200)


def test_oracle_guard():
    with pytest.raises(ValueError):
        dk_oracle(9, 10)
    with pytest.raises(ValueError):
        dk_oracle(1, 513)
    with pytest.raises(ValueError):
        dk_oracle(0, 10)


def test_first_order_coefficient():
    for k in range(1, 51):
        assert dk_series(k, 2)[1] == 3 * k + 1


@pytest.mark.parametrize("k,M,n", [(2, 3, 500), (3, 4, 500), (7, 8, 500)])
def test_modular_consistency(k, M, n):
    exact = dk_series(k, n).values
    assert reduce_mod(exact, M) == dk_series(k, n, Zmod(M)).values


@settings(max_examples=30)
@given(st.integers(1, 12), st.sampled_from([2, 3, 5, 9, 11, 2187, 2**31 - 1, 2**62 + 1]))
def test_partition_route_agrees(k, M):
    n = 300
    assert dk_series_via_partitions(k, n, Zmod(M)) == dk_series(k, n, Zmod(M)).values


def test_progressions():
    assert dk_progression(2, 3, 2, 3, 3000).is_zero()
    assert dk_progression(3, 5, 1, 5, 3000).is_zero()
    assert not dk_progression(1, 2, 0, 2, 100).is_zero()
    assert dk_progression(1, 2, 0, 2, 100).order == 50
    with pytest.raises(ValueError):
        dk_progression(1, 2, 0, 1, 100)


def test_quotient_shape():
    assert diamond_quotient(2) == EtaQuotient.parse("2^2 1^-7")
    with pytest.raises(ValueError):
        diamond_quotient(0)
    with pytest.raises(ValueError):
        dk_value(1, -1)


def test_exact_values_are_big_ints():
    v = dk_value(5, 3000)
    assert isinstance(v, int) and v.bit_length() > 64
    assert v % 5 == dk_series(5, 3001, Zmod(5))[3000]
