# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same contracts as ``_pykernels``.

All arithmetic is on ``long long``; inputs whose magnitude could overflow are
rejected with ``OverflowError`` (the dispatcher in ``kernels`` routes those to
the pure-Python path before they get here).
"""
from libc.stdlib cimport malloc, free

cdef long long MAX_GROUP = 1 << 26


cdef long long _gcd(long long a, long long b) nogil:
    while b:
        a, b = b, a % b
    return a if a >= 0 else -a


cdef long long _mod(long long x, long long n) nogil:
    x %= n
    return x + n if x < 0 else x


def reduce_letters(letters):
    cdef Py_ssize_t n = len(letters)
    cdef long long *stack = <long long *> malloc((n + 1) * sizeof(long long))
    cdef Py_ssize_t top = 0
    cdef long long x
    if stack == NULL:
        raise MemoryError()
    try:
        for item in letters:
            x = item
            if top and stack[top - 1] == -x:
                top -= 1
            else:
                stack[top] = x
                top += 1
        return tuple([stack[i] for i in range(top)])
    finally:
        free(stack)


def element_order(moduli, h):
    cdef long long order = 1, k, n, r
    for n_, r_ in zip(moduli, h):
        n = n_
        r = _mod(r_, n)
        k = n // _gcd(n, r)
        order = order * k // _gcd(order, k)
    return order


def cone_orbits(moduli, h, cones):
    cdef long long a = moduli[0], b = moduli[1]
    if a <= 0 or b <= 0 or a > MAX_GROUP or b > MAX_GROUP or a * b > MAX_GROUP:
        raise OverflowError("group too large for the compiled kernel")
    cdef long long size = a * b
    cdef long long h0 = _mod(h[0], a), h1 = _mod(h[1], b)
    cdef long long ordh = element_order(moduli, (h0, h1))
    cdef long long m, x0, x1, e0, e1, c, k, d, lam, nu, hit
    cdef long long *index = <long long *> malloc(size * sizeof(long long))
    if index == NULL:
        raise MemoryError()
    out = []
    try:
        for cone in cones:
            m, x0, x1 = cone
            for k in range(size):
                index[k] = -1
            e0 = 0
            e1 = 0
            for c in range(m):
                index[e0 * b + e1] = c
                e0 = _mod(e0 + x0, a)
                e1 = _mod(e1 + x1, b)
            d = ordh
            c = 0
            for k in range(1, ordh + 1):
                hit = index[((k * h0) % a) * b + (k * h1) % b]
                if hit >= 0:
                    d = k
                    c = hit
                    break
            lam = ordh // d
            nu = (c // (m // lam)) % lam if lam > 1 else 0
            out.append((lam, nu, (size // m) // d))
    finally:
        free(index)
    return out


def vertex_classes(m_, pairing):
    cdef long long m = m_
    cdef long long *parent = <long long *> malloc(m * sizeof(long long))
    cdef long long *pair = <long long *> malloc(m * sizeof(long long))
    cdef long long e, p, u, v, ru, rv, x, j
    if parent == NULL or pair == NULL:
        free(parent)
        free(pair)
        raise MemoryError()
    try:
        for e in range(m):
            parent[e] = e
            pair[e] = pairing[e]
        for e in range(m):
            p = pair[e]
            for j in range(2):
                if j == 0:
                    u = e
                    v = (p + 1) % m
                else:
                    u = (e + 1) % m
                    v = p
                ru = u
                while parent[ru] != ru:
                    parent[ru] = parent[parent[ru]]
                    ru = parent[ru]
                rv = v
                while parent[rv] != rv:
                    parent[rv] = parent[parent[rv]]
                    rv = parent[rv]
                if ru != rv:
                    if ru < rv:
                        parent[rv] = ru
                    else:
                        parent[ru] = rv
        out = []
        for e in range(m):
            x = e
            while parent[x] != x:
                x = parent[x]
            out.append(x)
        return out
    finally:
        free(parent)
        free(pair)
