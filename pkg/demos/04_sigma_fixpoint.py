"""The Σ iteration for cohen2 and X = {∅, {∅}}.

Level 0 holds the consistent superconditions; each step keeps only those
with enough extensions in the previous level. The fixpoint is nonempty
exactly when some generic G gives t[G] = X.
"""

from forcinglab.corpus import cohen2
from forcinglab.hf import format_hf, parse_hf
from forcinglab.sigma import check_generic_generated, sigma_fixpoint, superconditions

inst = cohen2()
q, t = inst.q, inst.t

for text in ["{{}}", "{{},{{}}}", "{{},{{}},{{},{{}}}}"]:
    X = parse_hf(text)
    trace = sigma_fixpoint(q, X, t)
    print(f"X = {format_hf(X)}")
    print(f"  |dpa| = {len(superconditions(q, X, t))}, level sizes {trace.level_sizes}, "
          f"lambda = {trace.lam}")
    v = check_generic_generated(q, X, t, with_oracle=True)
    print(f"  generic-generated: {v.generic_generated}, witness {v.witness}, "
          f"oracle agrees: {v.oracle_agreement}")

X = parse_hf("{{},{{}}}")
print()
print("fixpoint for X = {{},{{}}}:")
for sc in sorted(sigma_fixpoint(q, X, t).fixpoint, key=str):
    print("  ", sc)
