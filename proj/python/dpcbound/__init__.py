"""Lower bounds on dirty-paper-coding rates for additive channels with
dependent, non-Gaussian noise and interference."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
