import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import colored_partition_count, partitions
from qdiamond.eta import (EtaQuotient, eta_quotient_series, partition_series,
                          pochhammer_product, pochhammer_series)
from qdiamond.series import ZZ, Zmod, equal_up_to, inflate, invert, mul, one, reduce_mod


def test_pochhammer_examples():
    assert pochhammer_series(1, 10).tolist() == [1, -1, -1, 0, 0, 1, 0, 1, 0, 0]
    assert pochhammer_series(2, 5).tolist() == [1, 0, -1, 0, -1]
    assert pochhammer_series(1, 1).tolist() == [1]


def test_pochhammer_matches_literal_product():
    for r in (1, 2, 3, 7):
        assert pochhammer_series(r, 400) == pochhammer_product(r, 400)
    assert pochhammer_series(1, 300, Zmod(7)) == pochhammer_product(1, 300, Zmod(7))


@pytest.mark.parametrize("r", range(1, 21))
def test_pochhammer_is_inflated_f1(r):
    n = 257
    base = pochhammer_series(1, -(-n // r))
    assert pochhammer_series(r, n) == inflate(base, r, n)


def test_partition_series_examples():
    counts = [sum(1 for _ in partitions(n)) for n in range(6)]
    assert partition_series(6).tolist() == counts == [1, 1, 2, 3, 5, 7]
    assert partition_series(5)[4] % 5 == 0
    n = 500
    assert mul(pochhammer_series(1, n), partition_series(n)) == one(ZZ, n)


@pytest.mark.parametrize("ring", [ZZ, Zmod(5), Zmod(2**31 - 1), Zmod(2**61 - 1)])
def test_partition_series_agrees_with_invert(ring):
    n = 2000
    assert equal_up_to(partition_series(n, ring), invert(pochhammer_series(1, n, ring)), n)


def test_partition_series_ramanujan_congruences():
    p = partition_series(2000)
    for ell, r in ((5, 4), (7, 5), (11, 6)):
        assert all(p[ell * n + r] % ell == 0 for n in range((2000 - r) // ell))


def test_eta_quotient_examples():
    triangular = [1 if n in (0, 1, 3, 6) else 0 for n in range(7)]
    assert eta_quotient_series(EtaQuotient([(2, 2), (1, -1)]), 7).tolist() == triangular
    assert eta_quotient_series(EtaQuotient([(1, 1)]), 30) == pochhammer_series(1, 30)
    four_colored = [colored_partition_count(n, 4) for n in range(3)]
    assert eta_quotient_series(EtaQuotient([(1, -4)]), 3).tolist() == four_colored == [1, 4, 14]


def test_colored_partitions_longer():
    n = 12
    got = eta_quotient_series(EtaQuotient([(1, -3)]), n).tolist()
    assert got == [colored_partition_count(k, 3) for k in range(n)]


def test_modular_expansion_matches_exact():
    eq = EtaQuotient.parse("2^2 1^-7")
    exact = eta_quotient_series(eq, 400)
    for m in (3, 27, 2187, 2**31, 2**63 + 5):
        assert eta_quotient_series(eq, 400, Zmod(m)) == reduce_mod(exact, m)
        assert eta_quotient_series(eq, 400, Zmod(m), fast=True) == reduce_mod(exact, m)


def test_parse_and_render():
    eq = EtaQuotient.parse("2^2 1^-7")
    assert eq.factors == ((1, -7), (2, 2))
    assert str(eq) == "1^-7 2^2"
    assert EtaQuotient.parse(str(eq)) == eq
    assert EtaQuotient.parse("  3^1\t18^-2 ") == EtaQuotient([(3, 1), (18, -2)])


@pytest.mark.parametrize("text", ["2^", "x^2", "2^0", "0^3", "2^2 2^1", "2**2", "-1^2", "2^+3"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        EtaQuotient.parse(text)


def test_quotient_algebra():
    a = EtaQuotient.parse("2^1 1^-4")
    assert a ** 2 == EtaQuotient.parse("2^2 1^-8")
    assert a * EtaQuotient.parse("1^4") == EtaQuotient.parse("2^1")
    assert a.scaled(3) == EtaQuotient.parse("6^1 3^-4")
    assert a.scaled(3).deflated(3) == a
    with pytest.raises(ValueError):
        a.deflated(2)


@given(st.integers(1, 6), st.integers(-5, 5), st.integers(-5, 5))
def test_exponent_additivity(r, a, b):
    n = 80
    parts = [EtaQuotient([(r, e)]) if e else EtaQuotient() for e in (a, b)]
    merged = parts[0] * parts[1]
    expected = mul(eta_quotient_series(parts[0], n), eta_quotient_series(parts[1], n))
    assert eta_quotient_series(merged, n) == expected
