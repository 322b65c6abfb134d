"""Kernel backend selection: compiled extension if present, numpy otherwise.

Set BENTBIN_PURE=1 to force the fallback (used by the benchmark and by
the backend-agreement tests).
"""

import os

from . import py as _py

_compiled = None
if not os.environ.get("BENTBIN_PURE"):
    try:
        from . import _core as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None

_impl = _compiled if _compiled is not None else _py

BACKEND = "compiled" if _impl is not _py else "python"


def backend() -> str:
    return BACKEND


fwht = _impl.fwht
exp_fill = _impl.exp_fill
walsh_scan = _impl.walsh_scan
ddt_scan = _impl.ddt_scan
nu_scan = _impl.nu_scan
nu_minimizers = _impl.nu_minimizers
quad_dims = _impl.quad_dims
ell_scan = _impl.ell_scan
