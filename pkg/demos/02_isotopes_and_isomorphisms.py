# Principal isotopes, isomorphism search and G-loops.

import random

from sloops.catalog import corpus_entry, gen_cyclic, gen_klein
from sloops.core import format_table
from sloops.isotopy import (apply_isotopism, find_isomorphism, is_g_loop,
                            principal_isotope, random_loop_isotopism,
                            verify_theorem_1_1)

Z4 = gen_cyclic(4)

# x o y = (x R_g^-1) . (y L_f^-1) has identity f.g
H = principal_isotope(Z4, 1, 1)
print(format_table(H))
print("identity of the (1,1) isotope:", H.identity)

# the search returns the lexicographically least isomorphism
print("Z4 -> isotope:", find_isomorphism(Z4, H).tolist())
print("Z4 -> Klein:", find_isomorphism(Z4, gen_klein()))

# any loop isotope is isomorphic to some principal isotope
rng = random.Random(1)
B = corpus_entry("lbol8").table
for _ in range(3):
    t = random_loop_isotopism(B, rng)
    f, g, phi = verify_theorem_1_1(B, t)
    print(f"isotope identity {apply_isotopism(B, t).identity}: matches (f, g) = ({f}, {g}) via {phi.tolist()}")

# groups are isomorphic to all their loop isotopes, the Bol loop is not
for name in ("s3", "q8", "lbol8"):
    print(name, "G-loop:", is_g_loop(corpus_entry(name).table))
