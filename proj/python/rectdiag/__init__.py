"""Independent and hitting sets of axis-parallel rectangles meeting y = -x.

Thin wrapper around the compiled _rectdiag module.
"""

from _rectdiag import *  # noqa: F401,F403
from _rectdiag import __doc__  # noqa: F401
