"""Exact domination-type invariants of small graphs (C++ core)."""

from ._drd import *  # noqa: F401,F403
from ._drd import Error, ExcludedCase, InvalidArgument, InvalidSpec, ParseError, ResourceLimit, __doc__  # noqa: F401
