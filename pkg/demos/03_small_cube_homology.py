# Z/2 homology of VR(Q_n; r) for the cases that fit on a laptop.
import time

from qrips import enumerate_cube
from qrips.homology import betti_z2, closed_form_a, closed_form_b, closed_form_c, euler_characteristic
from qrips.rips import build

for n in (3, 4):
    c = build(enumerate_cube(n), 2, 4)
    t = betti_z2(c, 3)
    print(f"VR(Q_{n};2)", "counts", t.counts, "betti", t.betti, "c_n =", closed_form_c(n))

# %% scale 3 on Q_5 needs simplices up to dimension 8
t0 = time.time()
c = build(enumerate_cube(5), 3, 8)
t = betti_z2(c, 7)
print("VR(Q_5;3) betti", t.betti, f"{time.time() - t0:.1f}s")
print("closed forms: a_5 =", closed_form_a(5), " b_5 =", closed_form_b(5))

# the alternating count of all cliques only sees b4 - b7
full = build(enumerate_cube(5), 3, 31)
print("reduced Euler characteristic", euler_characteristic(full) - 1, "= b4 - b7 =", t.betti[4] - t.betti[7])

# %% clearing skips columns whose pivots are already known; same answer
print(betti_z2(c, 7, clearing=False).betti == t.betti)
