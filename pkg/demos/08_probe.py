"""Probing whether every generic inside Σ̂ gives back X.

This only collects evidence over a corpus; nothing is asserted.
"""

from collections import Counter

from forcinglab.corpus import cohen2, corpus
from forcinglab.hf import enumerate_transitive_sets, parse_hf
from forcinglab.sigma import probe_open_question, sigma_fixpoint

inst = cohen2()
X = parse_hf("{{},{{}}}")
rep = probe_open_question(inst.q, X, inst.t)
print("Σ̂ =", sorted(rep.sigma_hat))
for G, value, ok in rep.candidates:
    print(f"  G = {sorted(G.members)}  t[G] = {value}  {'= X' if ok else '≠ X'}")
print(rep.summary)

tally = Counter()
for inst in corpus(max_n=4):
    for X in enumerate_transitive_sets(3, 5):
        if sigma_fixpoint(inst.q, X, inst.t).nonempty:
            tally[probe_open_question(inst.q, X, inst.t).summary == "no counterexample found"] += 1
print()
print(f"corpus up to 4 conditions: {tally[True]} probes without counterexample, "
      f"{tally[False]} with one")
