"""Truncated q-series arithmetic and bounded congruence checks for the
partition-diamond counts ``d_k(n)`` with generating function
``f_2^k / f_1^(3k+1)``."""
from qdiamond.series import (ZZ, CoeffRing, Series, Zmod, add, coeff, dissect, divide,
                             equal_up_to, from_coeffs, inflate, invert, mul, one, pow,
                             reduce_mod, scalar_mul, shift, sub, zero)
from qdiamond.eta import (EtaQuotient, eta_quotient_series, partition_series,
                          pochhammer_product, pochhammer_series)
from qdiamond.theta import LemmaId, lemma_lhs, theta_rhs, verify_lemma
from qdiamond.diamonds import dk_oracle, dk_progression, dk_series, dk_value
from qdiamond.certificates import (LinearWeight, QuadraticForm, form_hits_progression,
                                   two_form_weighted_divisibility,
                                   weighted_form_divisibility)
from qdiamond.congruences import (Congruence, Report, family_p_minus_1, family_p_minus_2,
                                  family_ramanujan, is_qr, lift, quadratic_residues, scan,
                                  smoot_check, verify, verify_many)
from qdiamond.catalog import paper_catalog, proof_certificates

__version__ = "0.1.0"
