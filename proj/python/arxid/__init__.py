"""Generator parameter identification from ARX models."""

from ._arxid import *  # noqa: F401,F403
from ._arxid import __version__  # noqa: F401
