"""Kernel lane selection.

Imports the compiled Cython core when available, otherwise the NumPy
fallback. Set ``SPGCL_PURE_PYTHON=1`` to force the fallback. Both lanes
produce bit-identical results (same accumulation order, same exact
selection rules); only speed differs.
"""

import os

if os.environ.get("SPGCL_PURE_PYTHON"):
    from . import _numpy as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _numpy as _impl

LANE = _impl.LANE
csr_spmv = _impl.csr_spmv
accumulate_delta_sigma = _impl.accumulate_delta_sigma
block_top_candidates = _impl.block_top_candidates
