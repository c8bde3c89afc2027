"""Dual diameter of triangulations of simple polygons and point sets."""

from ._core import *  # noqa: F401,F403
from ._core import DualDiamError, Triangulation

__all__ = [name for name in dir() if not name.startswith("_")]
