"""Diagrams of simplicial sets over finite sets and injections, checked at desk scale."""

from ._util import CapError, RegimeError
from . import fincat, sset, injcat, idiag, operad, phicon, serialize

__all__ = ["CapError", "RegimeError", "fincat", "sset", "injcat", "idiag", "operad",
           "phicon", "serialize"]
__version__ = "0.1.0"
