"""
Explicit free sequences and the catalog sweep
=============================================

Constructions give lower bounds; the sweep compares C(G) with |G|.
"""

from collections import Counter

from consecutive_davenport import parse_group
from consecutive_davenport.catalog import load, sweep_catalog
from consecutive_davenport.constructions import extremal_free, product_interleave, rank_power_free
from consecutive_davenport.sequences import is_free
from consecutive_davenport.solver import conjecture_sweep
from consecutive_davenport.weights import full_weight, unit_powers

# Interleaving two free sequences gives a free sequence over the product
s = product_interleave(extremal_free(parse_group("C2")), extremal_free(parse_group("S3")))
print(len(s), s.text(), is_free(s, [1]))

# Weighted lower bounds over C_n^r
for n, r, A in [(2, 3, full_weight(2)), (5, 2, unit_powers(5, 2))]:
    t = rank_power_free(n, r, A)
    print(f"C_{A}(C{n}^{r}) >= {len(t) + 1}", is_free(t, A))

rows = conjecture_sweep(load(sweep_catalog()))
print(Counter(r.verdict for r in rows))
print(max(rows, key=lambda r: r.order).group)
