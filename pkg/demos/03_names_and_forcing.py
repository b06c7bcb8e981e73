"""Names, their interpretations, and the forcing relation on cohen2."""

from forcinglab.corpus import cohen2
from forcinglab.forcing import (
    decides,
    forces_membership,
    forces_membership_syntactic,
    forces_nonmembership,
    forces_transitive,
    is_d_complete,
)
from forcinglab.hf import format_hf
from forcinglab.names import format_name, interpret, potential_elements
from forcinglab.order import generic_filters

inst = cohen2()
q, t = inst.q, inst.t
zero, s0, _ = inst.names

print("t =", format_name(t))
print("pe t =", [s.label for s in potential_elements(t)])
print()
for G in generic_filters(q):
    print(f"G = {sorted(G.members)}: s0[G] = {format_hf(interpret(s0, G))}, "
          f"t[G] = {format_hf(interpret(t, G))}")

print()
print("p   zero∈s0  zero∉s0  decides  syntactic")
for p in q.elements:
    print(f"{p:3} {forces_membership(q, p, zero, s0)!s:8} {forces_nonmembership(q, p, zero, s0)!s:8} "
          f"{decides(q, p, zero, s0)!s:8} {forces_membership_syntactic(q, p, zero, s0)}")

print()
print("t forced transitive:", forces_transitive(q, t))
print("e is {zero,s0}-complete:", is_d_complete(q, "e", [zero, s0], t))
print("b is {zero,s0}-complete:", is_d_complete(q, "b", [zero, s0], t))
