"""Where the two readings of the step disagree.

With t = {(zero, e)} over cohen2, every generic gives t[G] = {∅}, so X = ∅
is not generic-generated. The coupled reading asks for one extension per
(s, x) pair; with X empty there are no pairs and nothing is removed. The
separated reading still requires each potential element to be settled,
which is impossible here, so everything dies at step 1.
"""

from forcinglab.corpus import degenerate
from forcinglab.sigma import COUPLED, SEPARATED, check_generic_generated

inst = degenerate()
for variant in (SEPARATED, COUPLED):
    v = check_generic_generated(inst.q, inst.X, inst.t, variant, with_oracle=True)
    print(f"{variant:9}: generic-generated={v.generic_generated}, lambda={v.lam}, "
          f"agrees with oracle={v.oracle_agreement}")
