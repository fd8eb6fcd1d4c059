# How many different facet sizes can we certify at a given scale?
from fractions import Fraction

from qrips.dimensions import build_witness, count_solutions, dfacets_report, facet_size_set, volume_bound

# lattice points under a simplex versus its volume
s = [2, 2, Fraction(3, 2)]
print(count_solutions(s), ">=", volume_bound(s))

cat = facet_size_set(6, [8, 12])
for sol in cat.solutions:
    pts, cert = build_witness(sol, cat.generators)
    print(sol.x, "size", sol.size, "in Q_%d" % sol.n0, "certified:", cert.ok)

# %% growth with r, using every Hadamard order the library can build
for r in (4, 8, 16, 32):
    rep = dfacets_report(r)
    print(r, rep["exact_count"], rep["generator_orders"])
