"""Exact engine for groups of order p*q^3 and the converse of Lagrange's theorem.

The compiled core lives in ``_cltlab``; everything it exports is re-exported
here. ``build()`` accepts the same group-spec strings as the ``cltlab`` CLI.
"""

try:
    from ._cltlab import *  # noqa: F401,F403
    from ._cltlab import __version__  # noqa: F401
except ImportError:  # in-tree test runs put _cltlab on sys.path directly
    from _cltlab import *  # noqa: F401,F403
    from _cltlab import __version__  # noqa: F401
