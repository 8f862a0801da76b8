"""The SL3 double-cell element that has a pole along a Levi divisor.

In the lifted seed it lies in the upper bound while the divisor is
semi-frozen, drops out once the divisor is highly frozen, and the minor it
equals has order 0 along the divisor curve.
"""
import random

from clusterlift import branching as br
from clusterlift import minor_oracle as mo
from clusterlift.laurent import to_text
from clusterlift.rootsys import WeylWord, cartan
from clusterlift.seedcore import cluster_valuation, highly_freeze, in_upper_bound

a2 = cartan("A2")
w = WeylWord((1, 2, 1), a2)
s = br.double_cell_lifted(a2, w, w)
f = br.strict_inclusion_witness(s, a2, 1)

print("f =", to_text(f))
print("valuation at d1:", cluster_valuation(f, "d1", s))
print("in upper bound (semi-frozen):", in_upper_bound(f, s))
print("in upper bound (highly frozen):", in_upper_bound(f, highly_freeze(s, s.semi_frozen)))

rng = random.Random(0)
g = mo.random_sl(3, rng)
print("equals the (s1, s1) minor:", mo.evaluate_at(f, mo.reference_values(s, g)) == mo.generalized_minor(1, (1,), (1,), g))
print("order along the divisor curve:", mo.divisor_order(3, 1, 1, (1,), (1,), rng))
