# Backtracking loop search and the Chein doubling.

from sloops.catalog import SearchSpec, gen_chein, gen_dihedral, gen_sym3, search_loops
from sloops.core import format_table
from sloops.identities import PropertyId, holds

# a left Bol loop of order 8 that is not a group
B = search_loops(SearchSpec(8, ["lbol"], ["assoc"], seed=0))[0]
print(format_table(B))

# the number of reduced Latin squares of order 5
print("order-5 loops (normalized):", len(search_loops(SearchSpec(5, limit=1000))))

# M(G, 2) is Moufang; nonassociative when G is not abelian
for G in (gen_sym3(), gen_dihedral(4)):
    M = gen_chein(G)
    print(M.order, "moufang", holds(M, PropertyId.MOUF1), "assoc", holds(M, PropertyId.ASSOC),
          "extra", holds(M, PropertyId.EXTRA1))
