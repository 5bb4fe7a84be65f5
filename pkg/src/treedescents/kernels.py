"""Backend selection for the hot kernels.

Prefers the compiled extension and falls back to the pure-Python
implementations when it is unavailable (or when DESCENT_PURE=1 forces the
fallback, which the benchmark and backend-equality tests rely on). Both
backends are contractually bit-identical.
"""

from __future__ import annotations

import os

from . import _fallback

FORCE_PURE_ENV = "DESCENT_PURE"

if os.environ.get(FORCE_PURE_ENV, "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
        BACKEND = "pure"

brute_force_histogram = _impl.brute_force_histogram
sample_descent_histogram = _impl.sample_descent_histogram
rng_stream = _impl.rng_stream
