"""Verifying congruences for d_k(n), the coefficients of f_2^k / f_1^(3k+1)."""
from qdiamond import (Congruence, dk_series, dk_value, family_p_minus_2, lift, paper_catalog,
                      proof_certificates, verify, verify_many)

print("d_1:", dk_series(1, 10).values.tolist())
print("d_2:", dk_series(2, 10).values.tolist())

# d_2(11n+7) vanishes modulo 11
print(verify(Congruence(2, 11, 7, 11), 20000))

# a false claim comes back with its first counterexample
report = verify(Congruence(3, 7, 4, 5), 2000)
print(report)
n, v = report.counterexample
print("exact value there:", dk_value(3, 7 * n + 4), "residue", v)

# a prime family and its lifts to larger k
family = family_p_minus_2(7)
print([str(c) for c in family])
lifted = [lift(c, j) for c in family for j in range(3)]
print(sum(r.holds for r in verify_many(lifted, 10000)), "of", len(lifted), "hold")

# the full catalog at a modest bound
reports = verify_many(paper_catalog(), 5000)
print(sum(r.holds for r in reports), "of", len(reports), "catalog entries hold to 5000")

# residue-class certificates behind the vanishing arguments
certs = proof_certificates()
print(sum(c.evaluate() == c.expected for c in certs), "of", len(certs), "certificates agree")
