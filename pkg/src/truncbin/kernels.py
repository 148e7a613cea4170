"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Set ``TRUNCBIN_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("TRUNCBIN_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
sieve = _impl.sieve
polrem = _impl.polrem
polmulmod = _impl.polmulmod
polpowmod = _impl.polpowmod
polgcd = _impl.polgcd
thue_candidates = _impl.thue_candidates

__all__ = ["BACKEND", "sieve", "polrem", "polmulmod", "polpowmod", "polgcd",
           "thue_candidates"]
