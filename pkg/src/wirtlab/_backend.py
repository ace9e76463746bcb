"""Pick the compiled kernels if they were built, else the numpy ones.

Set ``WIRTLAB_PURE_PYTHON=1`` to force the fallback.  Spectral analysis always
goes through numpy's FFT: a compiled direct DFT was slower at every size tried.
"""

import os

from . import _kernels_py

if os.environ.get("WIRTLAB_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

eval_trig = _impl.eval_trig
dft_real = _kernels_py.dft_real
any_crossing = _impl.any_crossing


def get_backend(name):
    """Kernel module by name (``"cython"`` or ``"python"``); for tests and benchmarks."""
    if name == "python":
        return _kernels_py
    if name == "cython":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")
