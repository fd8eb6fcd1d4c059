# Level sets L_l^n: points with exactly l plus signs.
from qrips import Ambient, enumerate_level, hadamard_of_order
from qrips.facets import check_rigid_facet, level_cross_set, level_facet
from qrips.homology import betti_z2
from qrips.rips import build, certify_nontrivial

lv = enumerate_level(6, 3)
print(len(lv), "points, first few:", [str(p) for p in list(lv)[:4]])

c = build(lv, 4, 10)
t = betti_z2(c, 9)
print("VR(L_3^6;4):", {k: b for k, b in enumerate(t.betti) if b})

# %% a facet from H^- of an order-8 matrix, swept over all 70 points of L_4^8
h = hadamard_of_order(8)
f = level_facet(h, 4, 8)
print([str(p) for p in f])
print(check_rigid_facet(f, Ambient(8, 4), 4).maximal_ok)

# doubling it with its negation gives a cross-polytope, hence a 6-sphere
y, facet = level_cross_set(h, 4, 8)
cert = certify_nontrivial(y, facet, Ambient(8, 4), 4)
print(cert.to_json()["claim"])
