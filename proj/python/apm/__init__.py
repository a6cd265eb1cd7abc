"""Analytical model of artificial pneumatic myofibrils built from sarcomere-like units."""

from ._apm import *  # noqa: F401,F403
from ._apm import DomainError, DataError, UnbracketedRootError

__all__ = [name for name in dir() if not name.startswith("_")]
