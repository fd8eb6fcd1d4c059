# Building bigger rigid facets out of small ones.
from qrips import Ambient, hadamard_of_order, hadamard_simplex
from qrips.cube import pad
from qrips.facets import check_rigid_facet, hamming_ball_set, pad_facet, product_facet

square = check_rigid_facet(hadamard_simplex(hadamard_of_order(4)), Ambient(3), 2)
print("square in Q_3:", square.ok)

# products add dimension and scale
p = product_facet(square, square, recertify=True)
print(len(p.point_set), "points,", p.ambient, "scale", p.scale, "->", p.ok)

# padding with constant +1 coordinates changes nothing
for m in range(4):
    c = pad_facet(square, m, recertify=True)
    print("pad", m, c.ambient, c.ok)

# %% rigidity matters
# the radius-1 ball is a maximal diameter-2 set, but its centre only sees distance 1
ball = hamming_ball_set(3, 1)
c = check_rigid_facet(ball, Ambient(3), 2)
print("ball:", c.maximal_ok, c.rigid_ok, c.witness)

# pad it once and a new point can join: centre with the pad coordinate flipped
c = check_rigid_facet(pad(ball, m=1), Ambient(4), 2)
print("padded ball maximal?", c.maximal_ok, c.witness["maximal"])
