"""Connected-subgraph group testing for network fault localization."""

from ._gcgt import *  # noqa: F401,F403
from ._gcgt import __version__  # noqa: F401
