"""Numpy implementations of the hot kernels."""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

_NEIGHBOR_OFFSETS = ((-1, -1), (-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1))


def conv1d_fwd(x: np.ndarray, w: np.ndarray, b: np.ndarray, pl: int, pr: int) -> np.ndarray:
    """Batched 1-d cross-correlation, stride 1, explicit zero padding.

    x: (B, Cin, L), w: (Cout, Cin, K), b: (Cout,) -> (B, Cout, L + pl + pr - K + 1)
    """
    k = w.shape[2]
    xp = np.pad(x, ((0, 0), (0, 0), (pl, pr))) if (pl or pr) else x
    windows = sliding_window_view(xp, k, axis=2)  # (B, Cin, Lout, K)
    y = np.tensordot(windows, w, axes=([1, 3], [1, 2]))  # (B, Lout, Cout)
    y = np.ascontiguousarray(y.transpose(0, 2, 1))
    y += b[None, :, None]
    return y


def conv1d_bwd(
    x: np.ndarray, w: np.ndarray, dy: np.ndarray, pl: int, pr: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Gradients of conv1d_fwd w.r.t. input, weights, and bias."""
    k = w.shape[2]
    xp = np.pad(x, ((0, 0), (0, 0), (pl, pr))) if (pl or pr) else x
    windows = sliding_window_view(xp, k, axis=2)  # (B, Cin, Lout, K)

    dw = np.tensordot(dy, windows, axes=([0, 2], [0, 2]))  # (Cout, Cin, K)
    db = dy.sum(axis=(0, 2))

    # dx is a full correlation of dy with the kernel reversed along K.
    dyp = np.pad(dy, ((0, 0), (0, 0), (k - 1 - pl, k - 1 - pr)))
    dy_windows = sliding_window_view(dyp, k, axis=2)  # (B, Cout, L, K)
    w_rev = w[:, :, ::-1]
    dx = np.tensordot(dy_windows, w_rev, axes=([1, 3], [0, 2]))  # (B, L, Cin)
    dx = np.ascontiguousarray(dx.transpose(0, 2, 1))
    return dx, dw, db


def lbp_hist(gray: np.ndarray, lut: np.ndarray) -> np.ndarray:
    """Unnormalized 59-bin histogram of 8-neighbor radius-1 patterns.

    Patterns are computed for interior pixels only; a neighbor contributes
    its bit when neighbor >= center.
    """
    h, w = gray.shape
    center = gray[1 : h - 1, 1 : w - 1]
    code = np.zeros(center.shape, dtype=np.int32)
    for bit, (dy, dx) in enumerate(_NEIGHBOR_OFFSETS):
        nb = gray[1 + dy : h - 1 + dy, 1 + dx : w - 1 + dx]
        code |= (nb >= center).astype(np.int32) << bit
    counts = np.bincount(lut[code.ravel()], minlength=59)
    return counts.astype(np.float64)


def best_split(xs: np.ndarray, ys: np.ndarray) -> tuple[int, float, float]:
    """Minimal-SSE binary split of ys along presorted xs.

    Candidates are midpoints between consecutive distinct xs; ties keep the
    lowest threshold.  Returns (left_count, threshold, total_sse); a
    left_count of 0 means no valid split exists.
    """
    n = xs.size
    cand = np.nonzero(xs[:-1] != xs[1:])[0]
    if cand.size == 0:
        return 0, float("nan"), float("inf")
    sl = np.cumsum(ys)
    sq = np.cumsum(ys * ys)
    total_s = sl[-1]
    total_q = sq[-1]
    nl = cand + 1.0
    nr = n - nl
    sse = (sq[cand] - sl[cand] ** 2 / nl) + (total_q - sq[cand]) - (total_s - sl[cand]) ** 2 / nr
    j = int(np.argmin(sse))
    i = int(cand[j])
    return i + 1, float((xs[i] + xs[i + 1]) / 2.0), float(sse[j])
