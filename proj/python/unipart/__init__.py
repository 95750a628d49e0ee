"""Unified part-level 3D generation: python bindings over the C++ core."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import pipeline  # noqa: F401
except ImportError:
    # build-tree layout: the extension sits directly on sys.path
    from _core import *  # noqa: F401,F403
    from _core import pipeline  # noqa: F401

__version__ = "0.1.0"
