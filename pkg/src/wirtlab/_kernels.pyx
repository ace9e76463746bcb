# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.  Signatures mirror ``_kernels_py`` exactly."""

import numpy as np

from libc.math cimport cos, sin, fabs


def eval_trig(double mean, const double[::1] a, const double[::1] b, const double[::1] t):
    cdef Py_ssize_t n_pts = t.shape[0], deg = a.shape[0], i, n
    cdef double c1, s1, cn, sn, tmp, acc
    out = np.empty(n_pts, dtype=np.float64)
    cdef double[::1] res = out
    for i in range(n_pts):
        c1 = cos(t[i])
        s1 = sin(t[i])
        cn = c1
        sn = s1
        acc = mean
        for n in range(deg):
            acc += a[n] * cn + b[n] * sn
            tmp = cn * c1 - sn * s1
            sn = sn * c1 + cn * s1
            cn = tmp
        res[i] = acc
    return out


cdef inline double _orient(double ax, double ay, double bx, double by,
                           double cx, double cy, double tol) nogil:
    cdef double o = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    if fabs(o) <= tol:
        return 0.0
    return o


cdef inline bint _overlap(double p, double q, double r, double s) nogil:
    cdef double lo1 = p if p < q else q
    cdef double hi1 = q if p < q else p
    cdef double lo2 = r if r < s else s
    cdef double hi2 = s if r < s else r
    return lo1 <= hi2 and lo2 <= hi1


cdef bint _scan(const double[::1] x, const double[::1] y, double tol) nogil:
    cdef Py_ssize_t n = x.shape[0], i, j, i1, j1, jstop
    cdef double o1, o2, o3, o4
    for i in range(n):
        i1 = i + 1 if i + 1 < n else 0
        jstop = n - 1 if i == 0 else n
        for j in range(i + 2, jstop):
            j1 = j + 1 if j + 1 < n else 0
            if not (_overlap(x[i], x[i1], x[j], x[j1]) and _overlap(y[i], y[i1], y[j], y[j1])):
                continue
            o1 = _orient(x[i], y[i], x[i1], y[i1], x[j], y[j], tol)
            o2 = _orient(x[i], y[i], x[i1], y[i1], x[j1], y[j1], tol)
            o3 = _orient(x[j], y[j], x[j1], y[j1], x[i], y[i], tol)
            o4 = _orient(x[j], y[j], x[j1], y[j1], x[i1], y[i1], tol)
            if o1 == 0.0 and o2 == 0.0:
                # collinear; the bounding boxes already overlap
                return True
            if o1 * o2 <= 0.0 and o3 * o4 <= 0.0:
                return True
    return False


def any_crossing(const double[::1] x, const double[::1] y, double rel_eps):
    cdef Py_ssize_t n = x.shape[0], i
    cdef double xmin = x[0], xmax = x[0], ymin = y[0], ymax = y[0]
    cdef bint hit
    for i in range(n):
        xmin = x[i] if x[i] < xmin else xmin
        xmax = x[i] if x[i] > xmax else xmax
        ymin = y[i] if y[i] < ymin else ymin
        ymax = y[i] if y[i] > ymax else ymax
    cdef double tol = rel_eps * ((xmax - xmin) * (xmax - xmin) + (ymax - ymin) * (ymax - ymin))
    with nogil:
        hit = _scan(x, y, tol)
    return bool(hit)
