# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels; see ``_kernels_py`` for the reference semantics."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline long _dadd(long x, long y, const long[:] w, const long[:] b, int d, bint binary) nogil:
    cdef long out = 0
    cdef int k
    if binary:
        return x ^ y
    for k in range(d):
        out += (((x // w[k]) % b[k] + (y // w[k]) % b[k]) % b[k]) * w[k]
    return out


def _radix_arrays(radix):
    b = np.asarray([int(v) for v in radix], dtype=np.int64)
    w = np.ones(len(b), dtype=np.int64)
    for k in range(1, len(b)):
        w[k] = w[k - 1] * b[k - 1]
    return w, b


def digit_add(x, y, radix):
    x = np.asarray(x, dtype=np.int64)
    y = np.asarray(y, dtype=np.int64)
    if all(r == 2 for r in radix):
        # a single vectorized xor beats the per-element loop
        return x ^ y
    bx, by = np.broadcast_arrays(x, y)
    shape = bx.shape
    cdef long[:] xs = np.ascontiguousarray(bx).ravel()
    cdef long[:] ys = np.ascontiguousarray(by).ravel()
    w_arr, b_arr = _radix_arrays(radix)
    cdef const long[:] w = w_arr
    cdef const long[:] b = b_arr
    cdef int d = len(b_arr)
    cdef bint binary = bool((b_arr == 2).all())
    out_arr = np.empty(xs.shape[0], dtype=np.int64)
    cdef long[:] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(xs.shape[0]):
            out[i] = _dadd(xs[i], ys[i], w, b, d, binary)
    return out_arr.reshape(shape)


def distributive_table(radix, basis_rows):
    w_arr, b_arr = _radix_arrays(radix)
    cdef const long[:] w = w_arr
    cdef const long[:] b = b_arr
    cdef int d = len(b_arr)
    cdef bint binary = bool((b_arr == 2).all())
    cdef Py_ssize_t n = int(np.prod(b_arr))
    table_arr = np.zeros((n, n), dtype=np.int32)
    cdef int[:, :] table = table_arr
    rows_arr = np.ascontiguousarray(np.asarray(basis_rows, dtype=np.int64).reshape(d, n))
    cdef const long[:, :] rows = rows_arr
    cdef Py_ssize_t a, j, wk
    cdef int k, top
    with nogil:
        for a in range(1, n):
            top = d - 1
            while (a // w[top]) % b[top] == 0:
                top -= 1
            wk = w[top]
            for j in range(n):
                table[a, j] = <int>_dadd(table[a - wk, j], rows[top, j], w, b, d, binary)
    return table_arr


def unit_mask(mul, long one):
    mul_arr = np.ascontiguousarray(mul, dtype=np.int32)
    cdef const int[:, :] m = mul_arr
    cdef Py_ssize_t n = m.shape[0]
    out_arr = np.zeros(n, dtype=bool)
    cdef cnp.uint8_t[:] out = out_arr.view(np.uint8)
    seen_arr = np.zeros(n, dtype=np.int64)
    cdef long[:] seen = seen_arr
    cdef Py_ssize_t x, r
    cdef long stamp
    cdef bint injective
    with nogil:
        for x in range(n):
            # left multiplication by x is a bijection iff x is a unit
            stamp = x + 1
            injective = True
            for r in range(n):
                if seen[m[x, r]] == stamp:
                    injective = False
                    break
                seen[m[x, r]] = stamp
            out[x] = injective
    return out_arr


def radical_mask(mul, units, one_minus):
    mul_arr = np.ascontiguousarray(mul, dtype=np.int32)
    cdef const int[:, :] m = mul_arr
    units_arr = np.ascontiguousarray(units, dtype=np.uint8)
    cdef const cnp.uint8_t[:] u = units_arr
    om_arr = np.ascontiguousarray(one_minus, dtype=np.int64)
    cdef const long[:] om = om_arr
    cdef Py_ssize_t n = m.shape[0]
    out_arr = np.zeros(n, dtype=bool)
    cdef cnp.uint8_t[:] out = out_arr.view(np.uint8)
    cdef Py_ssize_t x, r
    cdef bint ok
    with nogil:
        for x in range(n):
            ok = True
            for r in range(n):
                if not u[om[m[r, x]]]:
                    ok = False
                    break
            out[x] = ok
    return out_arr


def element_orders(mul, long identity):
    mul_arr = np.ascontiguousarray(mul, dtype=np.int32)
    cdef const int[:, :] m = mul_arr
    cdef Py_ssize_t n = m.shape[0]
    out_arr = np.zeros(n, dtype=np.int64)
    cdef long[:] out = out_arr
    cdef Py_ssize_t g, steps
    cdef long p
    cdef bint bad = False
    with nogil:
        for g in range(n):
            p = g
            steps = 1
            while p != identity:
                p = m[p, g]
                steps += 1
                if steps > n:
                    bad = True
                    break
            if bad:
                break
            out[g] = steps
    if bad:
        raise ValueError("table is not a group: some element has no finite order")
    return out_arr


def closure(add, gens, long zero):
    add_arr = np.ascontiguousarray(add, dtype=np.int32)
    cdef const int[:, :] t = add_arr
    cdef Py_ssize_t n = t.shape[0]
    gens_arr = np.asarray([int(g) for g in gens], dtype=np.int64)
    cdef const long[:] gs = gens_arr
    cdef Py_ssize_t ng = gens_arr.shape[0]
    member_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.uint8_t[:] member = member_arr
    queue_arr = np.empty(n, dtype=np.int64)
    cdef long[:] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 1, i
    cdef long x, y
    queue[0] = zero
    member[zero] = 1
    with nogil:
        while head < tail:
            x = queue[head]
            head += 1
            for i in range(ng):
                y = t[x, gs[i]]
                if not member[y]:
                    member[y] = 1
                    queue[tail] = y
                    tail += 1
    return np.flatnonzero(member_arr).astype(np.int64)
