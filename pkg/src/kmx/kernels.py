"""Kernel backend selection and the shared edge-mask conventions.

The compiled extension `kmx._kernels` is preferred when it imports; the
pure-Python module is the fallback. Set KMX_PURE_PYTHON=1 to force the
fallback (used by the benchmark and the parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("KMX_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND

inertia = _impl.inertia
positive_root_test = _impl.positive_root_test
roots_up_to_height = _impl.roots_up_to_height
pair_witness = _impl.pair_witness
scan_hyperbolic_masks = _impl.scan_hyperbolic_masks

FINITE, AFFINE, INDEFINITE = 0, 1, 2


def pair_bit_index(rank: int, i: int, j: int) -> int:
    """Bit position of the unordered pair (i, j) in lex pair order."""
    if i > j:
        i, j = j, i
    return i * rank - i * (i + 1) // 2 + (j - i - 1)


def mask_from_edges(rank: int, edges) -> int:
    mask = 0
    for i, j in edges:
        mask |= 1 << pair_bit_index(rank, i, j)
    return mask


def edges_from_mask(rank: int, mask: int):
    out = []
    for i in range(rank):
        for j in range(i + 1, rank):
            if (mask >> pair_bit_index(rank, i, j)) & 1:
                out.append((i, j))
    return out
