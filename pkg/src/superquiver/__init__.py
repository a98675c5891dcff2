"""Root systems of type A(n, m) realised by super-representations of coloured quivers."""

from .gabriel import (
    ARQuiver,
    RootObject,
    build_ar_quiver,
    build_table,
    build_X_alpha,
    emit_dot,
    grothendieck_check,
    verify_main_theorem,
)
from .linalg import GradedMap, GradedSpace, Matrix, SuperDim
from .pathalg import AlgebraElement, DoubleQuiver, Path, SuperModule, preprojective_dims
from .quiver import ColouredQuiver, reflect_quiver
from .rep import Representation, bgp
from .roots import (
    SimpleSystem,
    SuperRoot,
    SuperRootSystem,
    adapted_longest_word,
    all_roots,
    distinguished_simple_system,
    parse_root,
)
from .srep import SuperRep, embed_G, forget_F, super_reflect

__all__ = [
    "ARQuiver", "AlgebraElement", "ColouredQuiver", "DoubleQuiver", "GradedMap", "GradedSpace",
    "Matrix", "Path", "Representation", "RootObject", "SimpleSystem", "SuperDim", "SuperModule",
    "SuperRep", "SuperRoot", "SuperRootSystem", "adapted_longest_word", "all_roots", "bgp",
    "build_X_alpha", "build_ar_quiver", "build_table", "distinguished_simple_system", "embed_G",
    "emit_dot", "forget_F", "grothendieck_check", "parse_root", "preprojective_dims",
    "reflect_quiver", "super_reflect", "verify_main_theorem",
]
