"""Pick the compiled moment kernel when it is built, else the NumPy one.

Set NILRAD_PURE_PYTHON=1 to force the NumPy kernel.
"""

from __future__ import annotations

import os

from . import _moment_py

BACKEND = "python"
objective = _moment_py.objective

if not os.environ.get("NILRAD_PURE_PYTHON"):
    try:
        from . import _moment_ext
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        objective = _moment_ext.objective
