"""Hot loops used by the brute-force oracle.

Every kernel exists twice: a loop form compiled with numba and a numpy form.
The public names at the bottom of the module dispatch to one of them according
to :data:`schurbounds._accel.USE_NUMBA`. Both forms are importable directly so
tests and the benchmark can compare them.
"""
import numpy as np

from . import _accel


# --------------------------------------------------------------------------
# prefix-sum dominance: does each row of ``big`` majorize the row of ``small``?

def _dominance_loop(big, small, tol):
    rows, n = big.shape
    out = np.empty(rows, dtype=np.bool_)
    for r in range(rows):
        sb = 0.0
        ss = 0.0
        ok = True
        for k in range(n):
            sb += big[r, k]
            ss += small[r, k]
            if k < n - 1 and ss > sb + tol:
                ok = False
                break
        if ok and abs(sb - ss) > tol:
            ok = False
        out[r] = ok
    return out


def _dominance_numpy(big, small, tol):
    pb = np.cumsum(big, axis=1)
    ps = np.cumsum(small, axis=1)
    head = np.all(ps[:, :-1] <= pb[:, :-1] + tol, axis=1)
    return head & (np.abs(pb[:, -1] - ps[:, -1]) <= tol)


# --------------------------------------------------------------------------
# sequential clamped sampling inside a box with a fixed total

def _fill_loop(lower, upper, total, uniforms):
    count, n = uniforms.shape
    tail_lo = np.zeros(n)
    tail_hi = np.zeros(n)
    for i in range(n - 2, -1, -1):
        tail_lo[i] = tail_lo[i + 1] + lower[i + 1]
        tail_hi[i] = tail_hi[i + 1] + upper[i + 1]
    out = np.empty((count, n))
    for r in range(count):
        rem = total
        for i in range(n):
            lo = max(lower[i], rem - tail_hi[i])
            hi = min(upper[i], rem - tail_lo[i])
            if hi < lo:
                hi = lo
            v = lo + uniforms[r, i] * (hi - lo)
            rem -= v
            # insertion sort, descending; rows are short
            j = i
            while j > 0 and out[r, j - 1] < v:
                out[r, j] = out[r, j - 1]
                j -= 1
            out[r, j] = v
    return out


def _fill_numpy(lower, upper, total, uniforms):
    count, n = uniforms.shape
    tail_lo = np.concatenate([np.cumsum(lower[::-1])[::-1][1:], [0.0]])
    tail_hi = np.concatenate([np.cumsum(upper[::-1])[::-1][1:], [0.0]])
    out = np.empty((count, n))
    rem = np.full(count, float(total))
    for i in range(n):
        lo = np.maximum(lower[i], rem - tail_hi[i])
        hi = np.maximum(np.minimum(upper[i], rem - tail_lo[i]), lo)
        out[:, i] = lo + uniforms[:, i] * (hi - lo)
        rem -= out[:, i]
    return -np.sort(-out, axis=1)


# --------------------------------------------------------------------------
# exhaustive nonincreasing integer vectors in a box with a fixed total

def _enumerate_loop(lower, upper, total):
    n = lower.shape[0]
    tail_lo = np.zeros(n, dtype=np.int64)
    tail_hi = np.zeros(n, dtype=np.int64)
    for i in range(n - 2, -1, -1):
        tail_lo[i] = tail_lo[i + 1] + lower[i + 1]
        tail_hi[i] = tail_hi[i + 1] + upper[i + 1]

    cap = 64
    buf = np.empty((cap, n), dtype=np.int64)
    found = 0
    x = np.zeros(n, dtype=np.int64)
    rem = np.zeros(n + 1, dtype=np.int64)
    nxt = np.zeros(n, dtype=np.int64)
    lo = np.zeros(n, dtype=np.int64)
    rem[0] = total

    i = 0
    descend = True
    while i >= 0:
        if descend:
            top = upper[i] if i == 0 else min(upper[i], x[i - 1])
            nxt[i] = min(top, rem[i] - tail_lo[i])
            slots = n - i
            # x[i] is the largest remaining entry, so it carries at least the mean
            lo[i] = max(lower[i], rem[i] - tail_hi[i], -((-rem[i]) // slots))
            descend = False
        if nxt[i] < lo[i]:
            i -= 1
            if i >= 0:
                nxt[i] -= 1
            continue
        x[i] = nxt[i]
        if i == n - 1:
            if found == cap:
                grown = np.empty((2 * cap, n), dtype=np.int64)
                grown[:cap] = buf
                buf = grown
                cap *= 2
            buf[found] = x
            found += 1
            nxt[i] -= 1
            continue
        rem[i + 1] = rem[i] - x[i]
        i += 1
        descend = True
    return buf[:found].copy()


# --------------------------------------------------------------------------

_dominance_jit = _accel.njit(_dominance_loop)
_fill_jit = _accel.njit(_fill_loop)
_enumerate_jit = _accel.njit(_enumerate_loop)

if _accel.USE_NUMBA:
    _dominance, _fill, _enumerate = _dominance_jit, _fill_jit, _enumerate_jit
else:
    _dominance, _fill, _enumerate = _dominance_numpy, _fill_numpy, _enumerate_loop


def prefix_dominance(big, small, tol=0.0):
    """Row-wise majorization test of sorted rows: ``big[r]`` majorizes ``small[r]``.

    Either argument may be 1-D; it is broadcast against the other.
    """
    big = np.atleast_2d(np.asarray(big, dtype=np.float64))
    small = np.atleast_2d(np.asarray(small, dtype=np.float64))
    big, small = np.broadcast_arrays(big, small)
    return _dominance(np.ascontiguousarray(big), np.ascontiguousarray(small), float(tol))


def fill_box_samples(lower, upper, total, uniforms):
    """Turn a ``(count, n)`` block of U[0,1) draws into sorted box members with sum ``total``."""
    return _fill(
        np.ascontiguousarray(lower, dtype=np.float64),
        np.ascontiguousarray(upper, dtype=np.float64),
        float(total),
        np.ascontiguousarray(uniforms, dtype=np.float64),
    )


def enumerate_box_integer(lower, upper, total):
    """All nonincreasing integer vectors with ``lower <= x <= upper`` and ``sum(x) == total``.

    Rows come out in reverse lexicographic order.
    """
    return _enumerate(
        np.ascontiguousarray(lower, dtype=np.int64),
        np.ascontiguousarray(upper, dtype=np.int64),
        np.int64(total),
    )
