"""Geometric root systems and Lie algebras of ADE singularities.

Thin wrapper over the compiled ``_geomlie`` module. Types are given as
labels such as ``"A5"`` or ``"E8"``.
"""

from ._geomlie import *  # noqa: F401,F403
from ._geomlie import (
    CoxeterPlaneError,
    Error,
    FoldingError,
    SegmentError,
    TypeLabelError,
)

__version__ = "0.1.0"
