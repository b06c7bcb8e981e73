"""Building a generic filter from a fixpoint member.

Starting from any member of the fixpoint, the fusion puts each element of
X into the range, settles each potential element, then descends to a
minimal condition. Each step picks the least valid extension.
"""

from forcinglab.corpus import cohen2
from forcinglab.hf import format_hf, parse_hf
from forcinglab.sigma import build_generic, sigma_fixpoint

inst = cohen2()
q, t = inst.q, inst.t
X = parse_hf("{{},{{}}}")

for start in sorted(sigma_fixpoint(q, X, t).fixpoint, key=str)[:4]:
    out = build_generic(q, start, X, t)
    print("start", start)
    for what, sc in out.steps:
        print(f"   {what:28} {sc}")
    print(f"   G = {sorted(out.filter.members)}, t[G] = {format_hf(out.value)}")
    print()
