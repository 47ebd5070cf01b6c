import pytest

from qdiamond.catalog import (SHORTHAND_FAMILIES, Certificate, family_congruences,
                              individual_congruences, paper_catalog, proof_certificates)
from qdiamond.certificates import QuadraticForm
from qdiamond.congruences import (Congruence, family_p_minus_1, family_p_minus_2,
                                  family_ramanujan, verify_many)


def keys(claims):
    return {c.key for c in claims}


def test_catalog_contents():
    cat = keys(paper_catalog())
    assert (3, 4, 3, 4) in cat
    assert (7, 4, 3, 8) in cat
    assert {(2, 9, 5, 9), (2, 9, 8, 9)} <= cat
    assert (8, 5, 1, 5) in keys(paper_catalog(range(2)))
    assert (13, 5, 1, 5) in cat
    assert (18, 5, 1, 5) not in cat


def test_catalog_is_sorted_and_unique():
    cat = paper_catalog()
    assert [c.key for c in cat] == sorted(keys(cat))
    assert len(cat) == 157


def test_shorthand_families_match_generators():
    """The listed families are the generator output plus the extra members."""
    listed = {(p, k): set(res) for p, k, res in SHORTHAND_FAMILIES}
    for p in (5, 7, 11, 13):
        assert listed[(p, p - 2)] == {c.B for c in family_p_minus_2(p)}
    for p in (5, 7, 11):
        assert listed[(p, p - 1)] == {c.B for c in family_p_minus_1(p)}
        ram = family_ramanujan(p)
        assert listed[(p, p)] == {ram.B}
    assert listed[(2, 1)] == {1} and listed[(3, 2)] == {2} and listed[(11, 2)] == {7}


def test_family_expansion_arithmetic():
    fams = family_congruences([1])
    assert Congruence(8, 5, 1, 5) in fams
    assert Congruence(11, 9, 5, 9) in fams
    assert all(c.source == "generated" for c in fams)
    assert all(c.source == "paper" for c in family_congruences([0]))


def test_individual_entries_hold():
    reports = verify_many(individual_congruences(), 5000)
    assert all(r.holds for r in reports), [str(r) for r in reports if not r.holds]


def test_certificates_agree():
    certs = proof_certificates()
    assert len(certs) == 66
    for cert in certs:
        assert cert.evaluate() == cert.expected, cert.name


def test_certified_claims_hold():
    claims = {c for cert in proof_certificates() for c in cert.claims}
    assert all(r.holds for r in verify_many(claims, 5000))


def test_certificate_kind_check():
    bogus = Certificate("bogus", "cubic", QuadraticForm(1, 0), 3, 0, True, ())
    with pytest.raises(ValueError):
        bogus.evaluate()
