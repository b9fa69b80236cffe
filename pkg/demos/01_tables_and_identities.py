# Cayley tables, translations and identity checks.
# Run from the repository root: python demos/01_tables_and_identities.py

from sloops import core, identities
from sloops.catalog import corpus_entry, gen_cyclic

Z4 = gen_cyclic(4)
print(core.format_table(Z4))

# maps act on the right: x L_a = a.x, x R_a = x.a
print("L_2 =", core.left_translation(Z4, 2).tolist())
print("R_1 =", core.right_translation(Z4, 1).tolist())

# a table that is not a Latin square is rejected with a located violation
try:
    core.validate_table(2, [[0, 1], [1, 1]])
except core.LatinViolation as exc:
    print("rejected:", exc)

# every Bol-Moufang style identity is checked exhaustively
chein = corpus_entry("chein12").table
for p in identities.PropertyId:
    cex = identities.check_identity(chein, p)
    print(f"{p.value:7s}", "holds" if cex is None else f"fails at x={cex.x} y={cex.y} z={cex.z}")

# left and right inverses can differ in a general loop
inv5 = corpus_entry("inv5").table
lam, rho = core.inverse_arrays(inv5)
print("left inverses ", lam.tolist())
print("right inverses", rho.tolist())
