"""Theta-series identities checked coefficient by coefficient over Z."""
import time

from qdiamond.theta import LemmaId, dissection_pieces, lemma_lhs, theta_rhs, verify_lemma

ORDER = 2000

t0 = time.perf_counter()
for tag in LemmaId:
    print(verify_lemma(tag, ORDER))
print(f"{len(LemmaId)} identities in {time.perf_counter() - t0:.2f} s")

# f_1^2 / f_2 is sum (-1)^j q^(j^2); the first few terms side by side
print("lhs", lemma_lhs(LemmaId.L_PHI_SQUARE, 17).tolist())
print("rhs", theta_rhs(LemmaId.L_PHI_SQUARE, 17).tolist())

# a 3-dissection split into its residue classes
for B, got, expected in dissection_pieces(LemmaId.L_F1F2_3DISS, 30):
    print(f"class {B}:", got.tolist()[:6], "matches" if got == expected else "DIFFERS")
