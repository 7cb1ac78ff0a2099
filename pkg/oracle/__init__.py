"""Ground-truth dimensions by exact interpolation on CP1 x CP1."""
from oracle.points import PointInstance, instantiate
from oracle.interpolation import ConstraintMatrix, build_constraints, certified_h0, generic_seed, h0_oracle
from oracle.images import image_degree, image_dimension, image_quadric_count, threefold_prediction

__all__ = [
    "PointInstance",
    "instantiate",
    "ConstraintMatrix",
    "build_constraints",
    "certified_h0",
    "generic_seed",
    "h0_oracle",
    "image_degree",
    "image_dimension",
    "image_quadric_count",
    "threefold_prediction",
]
