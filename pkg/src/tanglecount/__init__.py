"""Exact counting, decomposition and generation of (3+1)-free posets."""

from .errors import *  # noqa: F401,F403
from .poset import *  # noqa: F401,F403
from .iso import *  # noqa: F401,F403
from .tangles import *  # noqa: F401,F403
from .skeleton import *  # noqa: F401,F403
from .series import *  # noqa: F401,F403
from .bicoloured import *  # noqa: F401,F403
from .counting import *  # noqa: F401,F403
from .enumerate import *  # noqa: F401,F403
from .textio import *  # noqa: F401,F403
from .report import *  # noqa: F401,F403

__version__ = "0.1.0"
