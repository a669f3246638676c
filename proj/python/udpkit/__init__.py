"""Generalized graph splines and the Universal Difference Property."""

from ._udpkit import *  # noqa: F401,F403
from ._udpkit import (
    CapabilityError,
    GraphError,
    ObstructionError,
    ParseError,
    PreconditionError,
    StructuralError,
    UdpkitError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
