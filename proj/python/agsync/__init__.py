"""Python bindings for agsync: almost-group automata and their synchronization."""

from ._agsync import *  # noqa: F401,F403
from ._agsync import Automaton, Error, __doc__  # noqa: F401
