"""Compiled inner loops: low-weight codeword enumeration and batched gram checks."""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    # int64 result: mixing uint64 into int64 sums would promote them to float64
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def _masked_weight(acc, d, rows, r, masks, p):
    s = 0
    for w in range(acc.shape[1]):
        s += _popcount((acc[d, w] ^ rows[r, w]) & masks[p, w])
    return s


@njit(cache=True)
def _xor_weight(acc, d, rows, r):
    s = 0
    for w in range(acc.shape[1]):
        s += _popcount(acc[d, w] ^ rows[r, w])
    return s


@njit(cache=True)
def accumulate_weights(rows, size, prior_masks, threshold, counts):
    """Add to ``counts`` the weights of all XORs of exactly ``size`` rows.

    A combination is skipped when its weight restricted to any of
    ``prior_masks`` is at most ``threshold`` (it was counted by an earlier
    information set).  Weights beyond ``len(counts) - 1`` are dropped.
    """
    k = rows.shape[0]
    nw = rows.shape[1]
    if size > k:
        return
    if size == 0:
        # the zero word has weight 0 on every prior set
        if threshold < 0 or prior_masks.shape[0] == 0:
            counts[0] += 1
        return
    idx = np.empty(size, dtype=np.int64)
    acc = np.zeros((size, nw), dtype=np.uint64)
    for d in range(size - 1):
        idx[d] = d
        for w in range(nw):
            acc[d + 1, w] = acc[d, w] ^ rows[d, w]
    last = size - 1
    idx[last] = last
    n_masks = prior_masks.shape[0]
    top = counts.shape[0]
    while True:
        # the codeword acc[last] ^ rows[r] is never written back; early exits
        # and stores inside this loop cost an order of magnitude in speed
        for r in range(idx[last], k):
            p = 0
            while p < n_masks:
                if _masked_weight(acc, last, rows, r, prior_masks, p) <= threshold:
                    break
                p += 1
            if p == n_masks:
                wt = _xor_weight(acc, last, rows, r)
                if wt < top:
                    counts[wt] += 1
        i = last - 1
        while i >= 0 and idx[i] == k - size + i:
            i -= 1
        if i < 0:
            break
        idx[i] += 1
        for d in range(i + 1, size):
            idx[d] = idx[d - 1] + 1
        for d in range(i, last):
            r = idx[d]
            for w in range(nw):
                acc[d + 1, w] = acc[d, w] ^ rows[r, w]


@njit(cache=True)
def batch_orthogonal(bits, basis, nrows):
    """For each bit vector, test whether the linear image M satisfies M M^T = I.

    ``basis[b, r]`` is row ``r`` (one uint64 word, at most 64 columns) of the
    matrix contributed by free bit ``b``.
    """
    trials = bits.shape[0]
    nb = bits.shape[1]
    out = np.zeros(trials, dtype=np.bool_)
    m = np.empty(nrows, dtype=np.uint64)
    one = np.uint64(1)
    for t in range(trials):
        for r in range(nrows):
            m[r] = np.uint64(0)
        for b in range(nb):
            if bits[t, b]:
                for r in range(nrows):
                    m[r] ^= basis[b, r]
        ok = True
        for i in range(nrows):
            if (_popcount(m[i]) & one) != one:
                ok = False
                break
            for j in range(i + 1, nrows):
                if _popcount(m[i] & m[j]) & one:
                    ok = False
                    break
            if not ok:
                break
        out[t] = ok
    return out
