"""Degree sequences, potentially H-graphic decisions and extremal thresholds."""

from ._core import *  # noqa: F401,F403
from ._core import Error

__all__ = [name for name in dir() if not name.startswith("_")]
