# Universality through principal isotopes, and the autotopism triples.

from sloops.autotopism import (TheoremTripleId, autotopism_search, build_theorem_triple,
                               is_autotopism)
from sloops.catalog import corpus_entry
from sloops.identities import PropertyId
from sloops.universality import is_universal

B = corpus_entry("lbol8").table
lip6 = corpus_entry("lip6").table

# a property is universal iff all n^2 principal isotopes have it
print("lbol8 LBOL:", is_universal(B, PropertyId.LBOL).verdict)
print("lbol8 LIP: ", is_universal(B, PropertyId.LIP).verdict)
rep = is_universal(lip6, PropertyId.LIP)
print("lip6 LIP:  ", rep.verdict, "first bad isotope (f, g) =", rep.counterexample[:2])

# the left Bol triple is an autotopism for every f, g; the right one is not
for tid in (TheoremTripleId.T1_6_LB, TheoremTripleId.T1_6_RB):
    bad = [(f, g) for f in range(8) for g in range(8)
           if is_autotopism(B, None, build_theorem_triple(B, tid, f, g)) is not None]
    print(tid.value, "fails for", len(bad), "of 64 pairs")

# brute force autotopism list of Z2: four triples
for t in autotopism_search(corpus_entry("z2").table):
    print(t.key())
