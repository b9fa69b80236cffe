# Subloops, the non-triviality policy and Smarandache classification.

from sloops.catalog import corpus_entry
from sloops.subalgebra import LOOSE, STRICT, classify, subloops

for name in ("z4", "nosub5", "lip6", "chein12"):
    T = corpus_entry(name).table
    print(name, "subloops:", [S.elements() for S in subloops(T)][:8])

# under the strict policy the whole loop never witnesses its own class;
# the loose policy admits it
T = corpus_entry("lbol8").table
for policy in (STRICT, LOOSE):
    rep = classify(T, policy)
    members = [c.value for c, v in rep.verdicts.items() if v.member]
    print(policy.name, members)

rep = classify(corpus_entry("chein12").table)
for c, v in rep.verdicts.items():
    print(f"{c.value:13s}", v.member, None if v.witness is None else v.witness.elements())
