"""Membership tests, certificates, and slice renders for the Bowditch
domain of the mapping-class-group action on the SL(2,C) trace variety of
the three-holed projective plane."""

from .algebra import (BoundaryData, CharacterPoint, DerivedBoundary,
                      MarkoffQuad, RootChoice, Theta, elementary_move,
                      face_value, involution_theta, sigma, solve_fourth,
                      vertex_residual)
from .bq import (AttractingTree, BqParams, BqVerdict, Status, Witness,
                 WitnessKind, decide_bq)
from .markoff import MarkoffMap, Orientation, VertexClass
from .render import SliceConfig, render_slice, render_to_file

__all__ = [
    "BoundaryData", "CharacterPoint", "DerivedBoundary", "MarkoffQuad",
    "RootChoice", "Theta", "elementary_move", "face_value",
    "involution_theta", "sigma", "solve_fourth", "vertex_residual",
    "AttractingTree", "BqParams", "BqVerdict", "Status", "Witness",
    "WitnessKind", "decide_bq", "MarkoffMap", "Orientation", "VertexClass",
    "SliceConfig", "render_slice", "render_to_file",
]

__version__ = "0.1.0"
