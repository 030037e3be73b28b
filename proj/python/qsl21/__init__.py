try:
    from ._qsl21 import *  # noqa: F401,F403  (wheel layout)
except ImportError:
    from _qsl21 import *  # noqa: F401,F403  (in-tree build)
