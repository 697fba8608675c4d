# cython: boundscheck=False, cdivision=True
# Compiled series kernels; contract documented in pure.py.

BACKEND = "cython"


def kummer_pair(double b1, double b2, double complex w, int max_terms):
    cdef double complex t1 = 1, S1 = 1, D1 = 0, t2 = 1, S2 = 1, D2 = 0, dt
    cdef double mx1 = 1, mx2 = 1, at, aw = abs(w)
    cdef bint done1 = False, done2 = False
    cdef int k
    for k in range(max_terms):
        if not done1:
            dt = t1 * (b1 + k) / ((0.5 + k) * (k + 1))
            D1 = D1 + (k + 1) * dt
            t1 = dt * w
            S1 = S1 + t1
            at = abs(t1)
            if at > mx1:
                mx1 = at
            if at < 1e-17 * mx1 and k > aw:
                done1 = True
        if not done2:
            dt = t2 * (b2 + k) / ((1.5 + k) * (k + 1))
            D2 = D2 + (k + 1) * dt
            t2 = dt * w
            S2 = S2 + t2
            at = abs(t2)
            if at > mx2:
                mx2 = at
            if at < 1e-17 * mx2 and k > aw:
                done2 = True
        if done1 and done2:
            break
    return S1, D1, mx1, S2, D2, mx2


def asym_pair(double a, double complex z2inv, int max_terms):
    cdef double complex t1 = 1, S1 = 1, t2 = 1, S2 = 1
    cdef double mn = 1, m
    cdef int s
    for s in range(1, max_terms):
        t1 = -t1 * (a - 1.5 + 2 * s) * (a - 0.5 + 2 * s) * z2inv / s
        t2 = t2 * (-a - 1.5 + 2 * s) * (-a - 0.5 + 2 * s) * z2inv / s
        m = max(abs(t1), abs(t2))
        if m > mn:
            mn = m
            break
        S1 = S1 + t1
        S2 = S2 + t2
        mn = m
        if mn < 1e-18:
            break
    return S1, S2, mn
