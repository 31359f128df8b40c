"""Qualitative trend models: scenario sets, transition graphs, rectification."""

from ._qtrend import *  # noqa: F401,F403
from ._qtrend import QtrendError  # noqa: F401
