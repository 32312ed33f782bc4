"""Configuration-model multigraphs with almost-2-regular degree sequences.

Thin wrapper over the compiled extension; see the project README for the
CLI and the C++ API.
"""

from ._a2r import *  # noqa: F401,F403
from ._a2r import __version__, generator_name  # noqa: F401
