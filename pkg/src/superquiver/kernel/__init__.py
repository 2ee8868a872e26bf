"""Kernel backend selection.

The compiled Cython kernel is preferred when built; ``SUPERQUIVER_PURE=1``
forces the pure-Python fallback.  Both expose the same functions over the
same two-level term maps, so everything above this module is backend
agnostic.
"""

import os

if os.environ.get("SUPERQUIVER_PURE") == "1":
    from . import pykernel as backend
else:
    try:
        from . import _ckernel as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import pykernel as backend

BACKEND = backend.NAME

merge_sign = backend.merge_sign
copy_map = backend.copy_map
add_maps = backend.add_maps
neg_map = backend.neg_map
sub_maps = backend.sub_maps
scale_map = backend.scale_map
mul_maps = backend.mul_maps
block_addmul = backend.block_addmul
exact_div_blocks = backend.exact_div_blocks
