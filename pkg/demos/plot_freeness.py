"""
Checking freeness of an ordered sequence
========================================

A sequence is free when no consecutive window, with each entry raised to
some weight, multiplies to the identity.
"""

from consecutive_davenport import parse_group, parse_sequence
from consecutive_davenport.sequences import WindowAutomaton, members, pi_a, product_one_certificate

D = parse_group("D4")
seq = parse_sequence("y,y,y,x,y,y,y", D)

# Window states after each position: products of windows ending there
auto = WindowAutomaton(D, [1])
for pos, state in enumerate(auto.run(seq), 1):
    print(pos, sorted(D.labels[g] for g in members(state)))

print("free:", product_one_certificate(seq, [1]) is None)
print("all window products:", sorted(D.labels[g] for g in pi_a(seq, [1])))

###############################################################################
# Adding weights can destroy freeness.  Over C4 with A = {2} the word g, g
# already has g^2 g^2 = 1.

C4 = parse_group("C4")
cert = product_one_certificate(parse_sequence("1,1", C4), [2])
print(cert)
