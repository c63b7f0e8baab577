# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled transition maps between the two PBW coordinate systems.

Same contract as b2crystal._kernel_py; typed C integers for the inner
arithmetic, tuples in and out.
"""


def r_transfer(a):
    cdef long a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3]
    cdef long bd = a2 if a2 >= a4 else a4
    cdef long n1 = bd + a3 - a1
    if a2 > n1:
        n1 = a2
    cdef long n2 = (a1 if a1 >= a3 else a3) + 2 * a2
    cdef long t1 = a3 + a4
    cdef long t2 = a1 + (a2 if a2 <= a4 else a4)
    cdef long n3 = t1 if t1 <= t2 else t2
    cdef long n4 = a1 if a1 <= a3 else a3
    cdef long mu = 2 * n3 if 2 * n3 >= n2 + n4 else n2 + n4
    return (n1, mu - n2, n2 + n3 - mu, n4 - 2 * n3 + mu)


def r_inverse(x):
    cdef long x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3]
    cdef long bd = x2 if x2 >= x4 else x4
    cdef long p1 = bd + 2 * (x3 - x1)
    if x2 > p1:
        p1 = x2
    cdef long p2 = (x1 if x1 >= x3 else x3) + x2
    cdef long t1 = 2 * x3 + x4
    cdef long t2 = 2 * x1 + (x2 if x2 <= x4 else x4)
    cdef long p3 = t1 if t1 <= t2 else t2
    cdef long p4 = x1 if x1 <= x3 else x3
    cdef long nu = p3 if p3 >= p2 + p4 else p2 + p4
    return (p1, nu - p2, 2 * p2 + p3 - 2 * nu, p4 - p3 + nu)
