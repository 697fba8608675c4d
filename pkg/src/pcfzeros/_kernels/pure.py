"""Pure-Python fallback for the hot series kernel.

Same contract as the compiled version in _useries.pyx.
"""

BACKEND = "pure"


def kummer_pair(b1, b2, w, max_terms):
    """Sum the two Kummer series M(b,1/2;w) and M(b2,3/2;w) together with
    the derivative sums and the largest-term magnitudes.

    Returns (S1, D1, mx1, S2, D2, mx2) where S = sum_k t_k, t_0 = 1,
    t_{k+1} = t_k * w * (b+k)/((c+k)(k+1)), D = sum_k (k+1) t_{k+1}/w
    (i.e. dS/dw), and mx = max_k |t_k| (for cancellation tracking).
    """
    t1 = 1.0 + 0.0j
    S1 = t1
    D1 = 0.0 + 0.0j
    mx1 = 1.0
    t2 = 1.0 + 0.0j
    S2 = t2
    D2 = 0.0 + 0.0j
    mx2 = 1.0
    done1 = False
    done2 = False
    aw = abs(w)
    for k in range(max_terms):
        if not done1:
            dt = t1 * (b1 + k) / ((0.5 + k) * (k + 1))
            D1 += (k + 1) * dt
            t1 = dt * w
            S1 += t1
            at = abs(t1)
            if at > mx1:
                mx1 = at
            if at < 1e-17 * mx1 and k > aw:
                done1 = True
        if not done2:
            dt = t2 * (b2 + k) / ((1.5 + k) * (k + 1))
            D2 += (k + 1) * dt
            t2 = dt * w
            S2 += t2
            at = abs(t2)
            if at > mx2:
                mx2 = at
            if at < 1e-17 * mx2 and k > aw:
                done2 = True
        if done1 and done2:
            break
    return S1, D1, mx1, S2, D2, mx2


def asym_pair(a, z2inv, max_terms):
    """Sum the two Poincare-type series

        S1 = sum_s (-1)^s (1/2+a)_{2s} / (s! (2 z^2)^s)
        S2 = sum_s (1/2-a)_{2s} / (s! (2 z^2)^s)

    with z2inv = 1/(2 z^2).  Truncates each series at its smallest term.
    Returns (S1, S2, minterm) where minterm bounds the truncation error
    relative to the leading terms.
    """
    t1 = 1.0 + 0.0j
    S1 = t1
    t2 = 1.0 + 0.0j
    S2 = t2
    mn = 1.0
    for s in range(1, max_terms):
        t1 = -t1 * (a - 1.5 + 2 * s) * (a - 0.5 + 2 * s) * z2inv / s
        t2 = t2 * (-a - 1.5 + 2 * s) * (-a - 0.5 + 2 * s) * z2inv / s
        m = max(abs(t1), abs(t2))
        if m > mn:
            # divergent tail reached; first omitted term bounds the error
            mn = m
            break
        S1 += t1
        S2 += t2
        mn = m
        if mn < 1e-18:
            break
    return S1, S2, mn
