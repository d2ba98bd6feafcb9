from ._gridcache import *  # noqa: F401,F403
from ._gridcache import __doc__  # noqa: F401
