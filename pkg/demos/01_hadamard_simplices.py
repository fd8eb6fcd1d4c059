# Hadamard matrices and the point sets cut out of them.
import numpy as np

from qrips import Ambient, hadamard_of_order, hadamard_simplex, inner_product, paley, sylvester, verify
from qrips.facets import check_rigid_facet
from qrips.hadamard import h_minus

# %% constructions
h = sylvester(8)
print(h.to_text())
print(verify(h.entries))            # (True, None)

h12 = paley(11)                     # q = 11 is 3 mod 4, order q + 1
print(h12.order, h12.construction, h12.normalized)

# a single flipped entry is caught, with the offending pair of rows
bad = h12.entries.astype(int)
bad[3, 5] *= -1
print(verify(bad))

# %% the simplex: columns of a normalized matrix, first row dropped
a = hadamard_simplex(hadamard_of_order(12))
print(len(a), "points in Q_%d" % a.n)
ips = {inner_product(x, y) for i, x in enumerate(a) for y in list(a)[i + 1:]}
print("pairwise inner products:", ips)     # {-1}

# every point sits at distance 6 from every other, and nothing else in Q_11 fits
cert = check_rigid_facet(a, Ambient(11), 6)
print(cert.diameter_ok, cert.rigid_ok, cert.maximal_ok)

# %% H^-: drop the all-ones column instead, the rest are mutually orthogonal
hm = h_minus(hadamard_of_order(8))
gram = np.array([[inner_product(x, y) for y in hm] for x in hm])
print(gram)
