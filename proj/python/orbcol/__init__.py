from ._orbcol import *  # noqa: F401,F403
from ._orbcol import __doc__  # noqa: F401
