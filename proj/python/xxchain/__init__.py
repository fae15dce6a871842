"""Exact solutions of the open XX spin chain in a transverse field."""

from ._xxchain import *  # noqa: F401,F403
from ._xxchain import __version__  # noqa: F401
