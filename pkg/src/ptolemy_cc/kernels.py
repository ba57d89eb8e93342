"""Kernel backend selection.

The compiled extension is used when it was built; otherwise, or when
``PTOLEMY_CC_PURE=1`` is set, the pure-Python kernels are used.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("PTOLEMY_CC_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

# the compiled kernels hold diagonal sets in 64-bit words
WORD = 64


def closure(ndiag, mask, pair_i, pair_j, pair_req):
    impl = _impl if ndiag <= WORD else _pykernels
    return impl.closure(ndiag, mask, pair_i, pair_j, pair_req)


def enumerate_closed(ndiag, pair_i, pair_j, pair_req):
    impl = _impl if ndiag < WORD else _pykernels
    return impl.enumerate_closed(ndiag, pair_i, pair_j, pair_req)


def count_downsets(preds):
    return _impl.count_downsets(preds)


__all__ = ["BACKEND", "closure", "enumerate_closed", "count_downsets"]
