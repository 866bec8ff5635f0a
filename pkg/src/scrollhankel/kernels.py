"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``SCROLLHANKEL_BACKEND=python`` to force the fallback.
"""

import os

BACKEND = "python"

if os.environ.get("SCROLLHANKEL_BACKEND", "").lower() != "python":
    try:
        from ._kernels import rank_mod_p
        BACKEND = "cython"
    except ImportError:
        from ._fallback import rank_mod_p
else:
    from ._fallback import rank_mod_p

__all__ = ["BACKEND", "rank_mod_p"]
