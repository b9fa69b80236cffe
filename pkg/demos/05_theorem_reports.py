# End-to-end theorem reports on corpus loops.

import json

from sloops.catalog import corpus_entry
from sloops.subalgebra import LOOSE
from sloops.universality import verify_theorem, verify_theorems

chein = corpus_entry("chein12").table
rep = verify_theorem(chein, "1.7")
print("Moufang:", rep.hypothesis_status, rep.conclusion_status)
print(json.dumps(rep.parts[0]["witnesses"][0], indent=1)[:600])

# the extra-loop report also carries the alternative transcription, which fails
ex = verify_theorem(corpus_entry("extra16").table, "1.8", LOOSE)
whole = [w for w in ex.parts[0]["witnesses"] if len(w["mask"]) == 16][0]
print("t1_8_e1 failures:", len(whole["triples"]["t1_8_e1"]["failures"]))
print("t1_8_e1_alt failures:", len(whole["variants"]["t1_8_e1_alt"]["failures"]))

# the inverse-property equivalences on three loops
for name in ("lip6", "lbol8", "chein12"):
    reps = verify_theorems(corpus_entry(name).table, ["1.9", "1.10"], LOOSE)
    print(name, {k: r.conclusion_status for k, r in reps.items()})
