"""Searching for vanishing progressions and checking them another way."""
import io

from qdiamond.congruences import read_jsonl, scan, write_jsonl
from qdiamond.diamonds import dk_series_via_partitions
from qdiamond.series import Zmod, dissect

found = scan({1, 2, 3, 7, 8}, 16, {2, 3, 4, 5, 7, 8, 9, 11}, 5000)
for c in found:
    print(c)

# every hit, recomputed from f_2^k * p(q)^(3k+1)
for c in found:
    values = dk_series_via_partitions(c.k, 5000, Zmod(c.M))
    assert dissect(values, c.A, c.B).is_zero(), c
print(len(found), "progressions confirmed")

buf = io.StringIO()
write_jsonl(found[:3], 5000, buf)
print(buf.getvalue(), end="")
print(read_jsonl(io.StringIO(buf.getvalue()))[0])
