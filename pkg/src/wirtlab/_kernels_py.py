"""Numpy implementations of the hot loops; used when the extension is absent."""

import numpy as np


def eval_trig(mean, a, b, t):
    t = np.asarray(t, dtype=np.float64)
    if len(a) == 0:
        return np.full(t.shape, float(mean))
    n = np.arange(1, len(a) + 1)
    arg = np.multiply.outer(t, n)
    return mean + np.cos(arg) @ a + np.sin(arg) @ b


def dft_real(v, max_degree):
    v = np.asarray(v, dtype=np.float64)
    N = len(v)
    spectrum = np.fft.rfft(v)
    k = spectrum[1 : max_degree + 1]
    return spectrum[0].real / N, 2.0 * k.real / N, -2.0 * k.imag / N


def _orient(ax, ay, bx, by, cx, cy, tol):
    o = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return np.where(np.abs(o) <= tol, 0.0, o)


def any_crossing(x, y, rel_eps):
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n = len(x)
    tol = rel_eps * (np.ptp(x) ** 2 + np.ptp(y) ** 2)
    x1 = np.roll(x, -1)
    y1 = np.roll(y, -1)
    for i in range(n):
        stop = n - 1 if i == 0 else n
        j = np.arange(i + 2, stop)
        if len(j) == 0:
            continue
        ax, ay, bx, by = x[i], y[i], x1[i], y1[i]
        cx, cy, dx, dy = x[j], y[j], x1[j], y1[j]
        box = (
            (np.minimum(ax, bx) <= np.maximum(cx, dx))
            & (np.minimum(cx, dx) <= np.maximum(ax, bx))
            & (np.minimum(ay, by) <= np.maximum(cy, dy))
            & (np.minimum(cy, dy) <= np.maximum(ay, by))
        )
        if not box.any():
            continue
        cx, cy, dx, dy = cx[box], cy[box], dx[box], dy[box]
        o1 = _orient(ax, ay, bx, by, cx, cy, tol)
        o2 = _orient(ax, ay, bx, by, dx, dy, tol)
        o3 = _orient(cx, cy, dx, dy, ax, ay, tol)
        o4 = _orient(cx, cy, dx, dy, bx, by, tol)
        collinear = (o1 == 0.0) & (o2 == 0.0)
        proper = (o1 * o2 <= 0.0) & (o3 * o4 <= 0.0)
        if (collinear | proper).any():
            return True
    return False
