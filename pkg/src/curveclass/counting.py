"""Kernel selection: compiled extension when present, pure Python otherwise.

Set CURVECLASS_PURE=1 to force the pure kernel even when the extension is
installed (used by the benchmark and the kernel-parity tests).
"""

import os

from . import _countcore_py

if os.environ.get("CURVECLASS_PURE") == "1":
    _impl = _countcore_py
else:
    try:
        from . import _countcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _countcore_py

affine_count = _impl.affine_count


def backend_name() -> str:
    return _impl.BACKEND


def pure_affine_count(*args, **kwargs):
    """Always the pure-Python kernel, for parity checks and benchmarks."""
    return _countcore_py.affine_count(*args, **kwargs)
