"""
Building groups from descriptors
================================

Every group is a dense Cayley table with the identity at index 0.
"""

import numpy as np

from consecutive_davenport import parse_group

# The dihedral group of order 8 as the metacyclic group M(4,2,4,3)
D = parse_group("M(4,2,4,3)")
print(D.descriptor, "order", D.order, "exponent", D.exponent)
print("labels:", D.labels)

# Element orders, tallied
print("order profile:", D.order_profile())

# y x = x y^3 in normal form
x, y = D.index("x"), D.index("y")
print("yx =", D.labels[D.mul(y, x)], " xy^3 =", D.labels[D.mul(x, D.pow(y, 3))])

# Tables are plain read-only numpy arrays
table = np.asarray(D.table)
print(table)

# Direct products index pairs (h, k) as h * |K| + k
P = parse_group("P(C2,S3)")
print(P.descriptor, P.order, P.is_abelian)
print(P.labels[:6])
