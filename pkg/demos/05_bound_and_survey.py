"""The uniform bound λ* and the bounded survey.

Once λ* is known, X is generic-generated iff Σ_λ* = Σ_λ*+1 ≠ ∅, so no
level past λ*+1 is ever needed.
"""

from forcinglab.corpus import cohen2
from forcinglab.hf import format_hf
from forcinglab.oracle import generic_sets
from forcinglab.sigma import classify_by_bound, lambda_star, sigma_fixpoint

inst = cohen2()
q, t = inst.q, inst.t

bound = lambda_star(q, t)
print("lambda* =", bound)
for G, X in generic_sets(q, t).entries:
    print(f"  G = {sorted(G.members)}: lambda(t[G]) = {sigma_fixpoint(q, X, t).lam}")

print()
print("survey, rank <= 3, closure size <= 5")
for row in classify_by_bound(q, t, 3, 5):
    print(f"  {'yes' if row.generic_generated else 'no ':3}  {format_hf(row.X):24} "
          f"levels computed: {row.levels_computed}")
