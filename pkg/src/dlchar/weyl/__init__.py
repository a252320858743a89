"""Root systems and Weyl groups with twists."""

from .cartan import CartanType, partitions_count, recognize_coxeter_matrix
from .engine import (
    ElementStore,
    class_count_bruteforce,
    default_cap,
    relative_class_count,
    relative_generators,
    relative_weyl_type,
    sigma_orbits,
)
from .rootsystem import RootSystem, compose, identity_perm, inverse

__all__ = [
    "CartanType",
    "ElementStore",
    "RootSystem",
    "class_count_bruteforce",
    "compose",
    "default_cap",
    "identity_perm",
    "inverse",
    "partitions_count",
    "recognize_coxeter_matrix",
    "relative_class_count",
    "relative_generators",
    "relative_weyl_type",
    "sigma_orbits",
]
