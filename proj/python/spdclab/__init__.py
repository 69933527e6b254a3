"""Cavity-enhanced SPDC with an intra-cavity dissipative slow-light filter."""

from ._spdclab import *  # noqa: F401,F403
from ._spdclab import __doc__  # noqa: F401

__version__ = "1.0.0"
