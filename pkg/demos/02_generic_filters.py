"""Generic filters of a finite quasi-order.

In a finite order, a filter meets every dense set exactly when it is the
upward closure of a minimal equivalence class. We check that against
brute force over all subsets.
"""

from forcinglab.corpus import cohen2, equivalent_bottoms
from forcinglab.order import (
    generic_filters,
    generic_filters_bruteforce,
    is_dense,
    meets_every_dense,
    minimal_classes,
)

for inst in (cohen2(), equivalent_bottoms()):
    q = inst.q
    print(f"{inst.label}: {len(q)} conditions")
    print("  minimal classes:", [sorted(c) for c in minimal_classes(q)])
    gens = generic_filters(q)
    for G in gens:
        print("  generic:", sorted(G.members))
    print("  matches brute force:", gens == generic_filters_bruteforce(q))
    print()

q = cohen2().q
print("leaves dense?", is_dense(q, ["aa", "ab", "ba", "bb"]))
print("{a} dense?", is_dense(q, ["a"]))
# a set meets every dense set iff it contains a whole cone below some condition
print("{aa, a} meets every dense set?", meets_every_dense(q, {"aa", "a"}))
print("{e, a, b} meets every dense set?", meets_every_dense(q, {"e", "a", "b"}))
