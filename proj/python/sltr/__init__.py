"""Straight line triangle representations of plane graphs."""

from ._core import (
    Error,
    FlatAngleAssignment,
    Graph,
    check,
    faas,
    medial_roundtrip,
    primal_dual,
    schnyder,
    segments,
    sltr,
    stretch,
)

__all__ = [
    "Error",
    "FlatAngleAssignment",
    "Graph",
    "check",
    "faas",
    "medial_roundtrip",
    "primal_dual",
    "schnyder",
    "segments",
    "sltr",
    "stretch",
]
