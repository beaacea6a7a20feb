"""Select the jet product kernel at import time.

The compiled Cython kernel is used when available; otherwise the numpy
fallback. Set CONTACT_SCHWARZIAN_JETS=python to force the fallback (used by
the benchmark and to reproduce results without the extension).
"""

import os

from . import kernels_py

if os.environ.get("CONTACT_SCHWARZIAN_JETS", "").lower() == "python":
    _impl = kernels_py
else:
    try:
        from . import _jetkernels as _impl
    except ImportError:
        _impl = kernels_py

jet_mul = _impl.jet_mul
BACKEND = _impl.BACKEND


def backend_name():
    return BACKEND
