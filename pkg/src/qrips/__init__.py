"""Rigid facets and Z/2 homology of Vietoris-Rips complexes of hypercubes."""

__version__ = "0.1.0"

from .cube import (
    Ambient,
    CubePoint,
    GuardExceeded,
    PointSet,
    concat,
    diameter,
    enumerate_cube,
    enumerate_level,
    hamming_distance,
    inner_product,
    negate,
    set_product,
    weight,
)
from .hadamard import (
    HadamardMatrix,
    available_orders,
    hadamard_of_order,
    hadamard_simplex,
    kronecker,
    normalize,
    paley,
    sylvester,
    verify,
)

__all__ = [
    "Ambient",
    "CubePoint",
    "GuardExceeded",
    "PointSet",
    "concat",
    "diameter",
    "enumerate_cube",
    "enumerate_level",
    "hamming_distance",
    "inner_product",
    "negate",
    "set_product",
    "weight",
    "HadamardMatrix",
    "available_orders",
    "hadamard_of_order",
    "hadamard_simplex",
    "kronecker",
    "normalize",
    "paley",
    "sylvester",
    "verify",
]
