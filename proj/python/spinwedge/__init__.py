"""Wedge-product graphs and the XY / Heisenberg spin models on graphs."""

from ._core import *  # noqa: F401,F403
from ._core import CapacityError, ConsistencyError, ParseError, __doc__  # noqa: F401

__version__ = "0.1.0"
