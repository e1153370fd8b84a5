"""Legendrian Jones polynomial and Legendrian Khovanov homology from front words."""

from .complex import Z, Z2, BoundaryMatrix, build_complex, build_complex_z, build_complex_z2
from .diagram import Event, FrontDiagram, OrientedFront, orient, parse_front, serialize_front
from .errors import (FrontSyntaxError, LegkhError, NotAComplex, TooManyCrossings,
                     UnknownComponent, ValidationError)
from .homology import GradedHomology, HomologyGroup, forget_k, graded_euler_char, homology
from .moves import apply_move, find_moves, random_move_walk, stabilize
from .polynomial import DELTA, LaurentPoly, legendrian_jones, specialize_r1, to_qr

__all__ = [
    "BoundaryMatrix", "DELTA", "Event", "FrontDiagram", "FrontSyntaxError", "GradedHomology",
    "HomologyGroup", "LaurentPoly", "LegkhError", "NotAComplex", "OrientedFront",
    "TooManyCrossings", "UnknownComponent", "ValidationError", "Z", "Z2", "apply_move",
    "build_complex", "build_complex_z", "build_complex_z2", "find_moves", "forget_k",
    "graded_euler_char", "homology", "legendrian_jones", "orient", "parse_front",
    "random_move_walk", "serialize_front", "specialize_r1", "stabilize", "to_qr",
]
