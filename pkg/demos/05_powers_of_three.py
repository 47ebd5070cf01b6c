"""d_2 on 8n = 1 (mod 3^a) is divisible by 3^(2 floor(a/2) + 1)."""
import time

from qdiamond.congruences import smoot_check, smoot_claim, verify

for alpha in range(1, 7):
    print(alpha, smoot_claim(alpha))

t0 = time.perf_counter()
for r in smoot_check(6, 100000):
    print(r)
print(f"{time.perf_counter() - t0:.1f} s")

# with alpha = 0 the claim covers every n and fails straight away
print(verify(smoot_claim(0), 100))
