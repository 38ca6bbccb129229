"""Hot numeric kernels with a compiled core and a numpy fallback.

The Cython extension ``_native`` is used when it was compiled at install
time; otherwise the numpy implementations in ``fallback`` take over.  Set
``VSPOP_FORCE_FALLBACK=1`` to skip the extension (used by the kernel
benchmark and the backend-parity tests).

Both backends implement the same contracts:

* ``conv1d_fwd(x, w, b, pl, pr)``        cross-correlation, stride 1
* ``conv1d_bwd(x, w, dy, pl, pr)``       gradients (dx, dw, db)
* ``lbp_hist(gray, lut)``                59-bin uniform-pattern counts
* ``best_split(xs_sorted, ys_sorted)``   minimal-SSE split scan
"""

from __future__ import annotations

import os
from functools import lru_cache

import numpy as np

from . import fallback

if os.environ.get("VSPOP_FORCE_FALLBACK"):
    _backend = fallback
    HAVE_NATIVE = False
else:
    try:
        from . import _native as _backend  # type: ignore[no-redef]

        HAVE_NATIVE = True
    except ImportError:
        _backend = fallback
        HAVE_NATIVE = False

BACKEND_NAME = "native" if HAVE_NATIVE else "fallback"

conv1d_fwd = _backend.conv1d_fwd
conv1d_bwd = _backend.conv1d_bwd
lbp_hist = _backend.lbp_hist
best_split = _backend.best_split

_NEIGHBOR_OFFSETS = ((-1, -1), (-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1))


def _transitions(code: int) -> int:
    bits = [(code >> i) & 1 for i in range(8)]
    return sum(bits[i] != bits[(i + 1) % 8] for i in range(8))


@lru_cache(maxsize=1)
def uniform_lbp_lut() -> np.ndarray:
    """Map each 8-bit pattern to its histogram bin.

    Patterns with at most two circular 0/1 transitions get bins 0..57 in
    ascending code order; everything else lands in the catch-all bin 58.
    """
    uniform = [c for c in range(256) if _transitions(c) <= 2]
    lut = np.full(256, 58, dtype=np.int32)
    for bin_idx, code in enumerate(uniform):
        lut[code] = bin_idx
    return lut
