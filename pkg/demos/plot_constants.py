"""
Computing consecutive and Davenport-type constants
==================================================

Constants are longest paths in the window-state automaton, plus one.
"""

from consecutive_davenport import parse_group, parse_weights
from consecutive_davenport.solver import SearchConfig, compute_consecutive, compute_davenport, verify_value

for desc, wdesc in [("C6", "{1}"), ("C6", "full"), ("C7", "U^2(7)"), ("A[3,3]", "full"), ("Q8", "{1}")]:
    G = parse_group(desc)
    A = parse_weights(wdesc, G.exponent)
    res = compute_consecutive(G, A)
    print(f"C_{A}({desc}) = {res.value}   witness {res.witness}   states {res.states_explored}")

# Zero-sum (not necessarily consecutive) analogue on an abelian group
G = parse_group("A[2,6]")
A = parse_weights("punct(2,1,3)", G.exponent)
print("D_A =", compute_davenport(G, A).value, " C_A =", compute_consecutive(G, A).value)

# An independent breadth-first check of a claimed value
print(verify_value(parse_group("A[2,6,6]"), parse_weights("punct(2,1,3)", 6), 4).verdict)

###############################################################################
# Caps turn an exact answer into a lower bound.

res = compute_consecutive(parse_group("A[2,2,2]"), parse_weights("full", 2), SearchConfig(max_states=1))
print(res.conclusive, res.lower_bound, res.cap_hit)
