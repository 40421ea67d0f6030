"""Mealy automaton semigroups: actions, orbits and finiteness.

Words and state words are lists of 0-based indices.  In a state word the
rightmost state acts first.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
