# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the hot kernels (see fallback.py for contracts)."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def conv1d_fwd(x, w, b, int pl, int pr):
    cdef double[:, :, ::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[:, :, ::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t B = xv.shape[0], Cin = xv.shape[1], L = xv.shape[2]
    cdef Py_ssize_t Cout = wv.shape[0], K = wv.shape[2]
    cdef Py_ssize_t Lout = L + pl + pr - K + 1
    out = np.empty((B, Cout, Lout), dtype=np.float64)
    cdef double[:, :, ::1] yv = out
    cdef Py_ssize_t bi, o, t, c, k, s
    cdef double acc
    for bi in range(B):
        for o in range(Cout):
            for t in range(Lout):
                acc = bv[o]
                for c in range(Cin):
                    for k in range(K):
                        s = t + k - pl
                        if 0 <= s < L:
                            acc += xv[bi, c, s] * wv[o, c, k]
                yv[bi, o, t] = acc
    return out


def conv1d_bwd(x, w, dy, int pl, int pr):
    cdef double[:, :, ::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[:, :, ::1] wv = np.ascontiguousarray(w, dtype=np.float64)
    cdef double[:, :, ::1] gv = np.ascontiguousarray(dy, dtype=np.float64)
    cdef Py_ssize_t B = xv.shape[0], Cin = xv.shape[1], L = xv.shape[2]
    cdef Py_ssize_t Cout = wv.shape[0], K = wv.shape[2]
    cdef Py_ssize_t Lout = gv.shape[2]
    dx = np.zeros((B, Cin, L), dtype=np.float64)
    dw = np.zeros((Cout, Cin, K), dtype=np.float64)
    db = np.zeros(Cout, dtype=np.float64)
    cdef double[:, :, ::1] dxv = dx
    cdef double[:, :, ::1] dwv = dw
    cdef double[::1] dbv = db
    cdef Py_ssize_t bi, o, t, c, k, s
    cdef double g
    for bi in range(B):
        for o in range(Cout):
            for t in range(Lout):
                g = gv[bi, o, t]
                dbv[o] += g
                for c in range(Cin):
                    for k in range(K):
                        s = t + k - pl
                        if 0 <= s < L:
                            dwv[o, c, k] += g * xv[bi, c, s]
                            dxv[bi, c, s] += g * wv[o, c, k]
    return dx, dw, db


def lbp_hist(gray, lut):
    cdef double[:, ::1] gv = np.ascontiguousarray(gray, dtype=np.float64)
    cdef int[::1] lv = np.ascontiguousarray(lut, dtype=np.int32)
    cdef Py_ssize_t H = gv.shape[0], W = gv.shape[1]
    counts = np.zeros(59, dtype=np.float64)
    cdef double[::1] cv = counts
    cdef Py_ssize_t i, j
    cdef int code
    cdef double c
    for i in range(1, H - 1):
        for j in range(1, W - 1):
            c = gv[i, j]
            code = 0
            if gv[i - 1, j - 1] >= c: code |= 1
            if gv[i - 1, j] >= c: code |= 2
            if gv[i - 1, j + 1] >= c: code |= 4
            if gv[i, j + 1] >= c: code |= 8
            if gv[i + 1, j + 1] >= c: code |= 16
            if gv[i + 1, j] >= c: code |= 32
            if gv[i + 1, j - 1] >= c: code |= 64
            if gv[i, j - 1] >= c: code |= 128
            cv[lv[code]] += 1.0
    return counts


def best_split(xs, ys):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0]
    cdef double total_s = 0.0, total_q = 0.0
    cdef Py_ssize_t i
    for i in range(n):
        total_s += yv[i]
        total_q += yv[i] * yv[i]
    cdef double sl = 0.0, sq = 0.0
    cdef double best_sse = np.inf, best_thr = np.nan, sse, nl, nr
    cdef Py_ssize_t best_pos = 0
    for i in range(n - 1):
        sl += yv[i]
        sq += yv[i] * yv[i]
        if xv[i] != xv[i + 1]:
            nl = i + 1.0
            nr = n - nl
            sse = (sq - sl * sl / nl) + (total_q - sq) - (total_s - sl) * (total_s - sl) / nr
            if sse < best_sse:
                best_sse = sse
                best_thr = (xv[i] + xv[i + 1]) / 2.0
                best_pos = i + 1
    return best_pos, best_thr, best_sse
