"""Hot-loop kernels, compiled when available.

``BACKEND`` is ``"cython"`` when the extension imported and ``"python"``
otherwise. Setting ``SIGNED_INVOLUTIONS_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("SIGNED_INVOLUTIONS_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

inversions = _impl.inversions
involution_length_histogram = _impl.involution_length_histogram

__all__ = ["BACKEND", "inversions", "involution_length_histogram"]
