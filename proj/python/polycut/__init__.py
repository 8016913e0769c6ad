from ._polycut import *  # noqa: F401,F403
from ._polycut import __doc__  # noqa: F401
