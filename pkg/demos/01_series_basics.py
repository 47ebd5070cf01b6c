"""Truncated power series: products, inverses, dissections, reductions."""
from qdiamond import (ZZ, Zmod, dissect, from_coeffs, inflate, invert, mul, pow, reduce_mod,
                      partition_series, pochhammer_series)

N = 15

# f_1 = (1-q)(1-q^2)... from the pentagonal numbers
f1 = pochhammer_series(1, N)
print("f_1        ", f1.tolist())

# its reciprocal counts partitions
p = invert(f1)
print("1/f_1      ", p.tolist())
assert p == partition_series(N)

# cube: the triangular-number theta series with weights (-1)^m (2m+1)
print("f_1^3      ", pow(f1, 3).tolist())

# the same series modulo 3 keeps only a few terms
print("f_1^3 mod 3", reduce_mod(pow(f1, 3), 3).tolist())

# q -> q^2 and back
f2 = inflate(f1, 2, N)
print("f_2        ", f2.tolist())
assert dissect(f2, 2, 0).tolist() == f1.tolist()[: (N + 1) // 2]

# arithmetic works natively modulo M, with no big integers in between
r = Zmod(7)
a = from_coeffs(r, [1, 3, 5, 2])
b = from_coeffs(r, [2, 6, 0, 4])
print("mod 7 product", mul(a, b).tolist())
print("fast path agrees:", mul(a, b) == mul(a, b, fast=True))
