# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels on GMP integers; semantics identical to ``_pykernels``.

Python ints cross the boundary through word-size fast paths or
``mpz_import``/``mpz_export`` on little-endian byte strings.
"""

from cpython.long cimport PyLong_AsLongAndOverflow
from libc.stdlib cimport free, malloc


cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct* mpz_ptr
    ctypedef const __mpz_struct* mpz_srcptr

    void mpz_init(mpz_ptr)
    void mpz_clear(mpz_ptr)
    void mpz_set(mpz_ptr, mpz_srcptr)
    void mpz_set_si(mpz_ptr, long)
    long mpz_get_si(mpz_srcptr)
    int mpz_fits_slong_p(mpz_srcptr)
    void mpz_mul(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_add(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_submul(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_divexact(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_gcd(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_neg(mpz_ptr, mpz_srcptr)
    void mpz_swap(mpz_ptr, mpz_ptr)
    int mpz_sgn(mpz_srcptr)
    int mpz_cmp_ui(mpz_srcptr, unsigned long)
    size_t mpz_sizeinbase(mpz_srcptr, int)
    void mpz_import(mpz_ptr, size_t, int, size_t, int, size_t, const void*)
    void* mpz_export(void*, size_t*, int, size_t, int, size_t, mpz_srcptr)


cdef int set_py(mpz_ptr r, object x) except -1:
    cdef int overflow = 0
    cdef long v = PyLong_AsLongAndOverflow(x, &overflow)
    cdef bytes raw
    if not overflow:
        mpz_set_si(r, v)
        return 0
    ax = -x if x < 0 else x
    raw = ax.to_bytes((ax.bit_length() + 7) // 8, "little")
    mpz_import(r, len(raw), -1, 1, 0, 0, <const char*>raw)
    if x < 0:
        mpz_neg(r, r)
    return 0


cdef object get_py(mpz_srcptr r):
    cdef size_t n, count = 0
    cdef bytearray buf
    cdef char* p
    if mpz_fits_slong_p(r):
        return mpz_get_si(r)
    n = (mpz_sizeinbase(r, 2) + 7) // 8
    buf = bytearray(n)
    p = buf
    mpz_export(p, &count, -1, 1, 0, 0, r)
    v = int.from_bytes(buf[:count], "little")
    return -v if mpz_sgn(r) < 0 else v


cdef class _MpzArray:
    cdef __mpz_struct* data
    cdef Py_ssize_t size

    def __cinit__(self, Py_ssize_t size):
        cdef Py_ssize_t i
        self.data = <__mpz_struct*>malloc(max(size, 1) * sizeof(__mpz_struct))
        if self.data == NULL:
            raise MemoryError()
        self.size = size
        for i in range(size):
            mpz_init(&self.data[i])

    def __dealloc__(self):
        cdef Py_ssize_t i
        if self.data != NULL:
            for i in range(self.size):
                mpz_clear(&self.data[i])
            free(self.data)


def bareiss_solve(matrix, rhs):
    cdef Py_ssize_t n = len(matrix)
    cdef Py_ssize_t w = n + 1
    cdef Py_ssize_t i, j, k, s
    cdef _MpzArray A = _MpzArray(n * w)
    cdef _MpzArray tmp = _MpzArray(3)  # prev, scratch, d
    cdef __mpz_struct* a = A.data
    cdef mpz_ptr prev = &tmp.data[0]
    cdef mpz_ptr t = &tmp.data[1]
    cdef mpz_ptr d = &tmp.data[2]
    for i in range(n):
        row = matrix[i]
        for j in range(n):
            set_py(&a[i * w + j], row[j])
        set_py(&a[i * w + n], rhs[i])
    mpz_set_si(prev, 1)
    for k in range(n):
        if mpz_sgn(&a[k * w + k]) == 0:
            for s in range(k + 1, n):
                if mpz_sgn(&a[s * w + k]) != 0:
                    for j in range(w):
                        mpz_swap(&a[k * w + j], &a[s * w + j])
                    break
            else:
                return None
        for i in range(k + 1, n):
            for j in range(k + 1, w):
                mpz_mul(t, &a[k * w + k], &a[i * w + j])
                mpz_submul(t, &a[i * w + k], &a[k * w + j])
                mpz_divexact(&a[i * w + j], t, prev)
            mpz_set_si(&a[i * w + k], 0)
        mpz_set(prev, &a[k * w + k])
    if n:
        mpz_set(d, &a[(n - 1) * w + n - 1])
    else:
        mpz_set_si(d, 1)
    # back substitution; y_i overwrites the rhs column
    for i in range(n - 1, -1, -1):
        mpz_mul(t, d, &a[i * w + n])
        for j in range(i + 1, n):
            mpz_submul(t, &a[i * w + j], &a[j * w + n])
        mpz_divexact(&a[i * w + n], t, &a[i * w + i])
    return get_py(d), [get_py(&a[i * w + n]) for i in range(n)]


def series_terms(num, den, xn, xd, Py_ssize_t stop):
    cdef Py_ssize_t l
    cdef _MpzArray T = _MpzArray(5)
    cdef mpz_ptr tn = &T.data[0]
    cdef mpz_ptr td = &T.data[1]
    cdef mpz_ptr rn = &T.data[2]
    cdef mpz_ptr rd = &T.data[3]
    cdef mpz_ptr f = &T.data[4]
    cdef list out = [(1, 1)]
    mpz_set_si(tn, 1)
    mpz_set_si(td, 1)
    for l in range(stop):
        set_py(rn, xn)
        set_py(rd, xd * (l + 1))
        for p, q in num:
            set_py(f, p + l * q)
            mpz_mul(rn, rn, f)
            set_py(f, q)
            mpz_mul(rd, rd, f)
        if mpz_sgn(rn) == 0:
            out.append((0, 1))
            break
        for p, q in den:
            set_py(f, p + l * q)
            mpz_mul(rd, rd, f)
            set_py(f, q)
            mpz_mul(rn, rn, f)
        mpz_mul(tn, tn, rn)
        mpz_mul(td, td, rd)
        if mpz_sgn(td) < 0:
            mpz_neg(tn, tn)
            mpz_neg(td, td)
        mpz_gcd(f, tn, td)
        if mpz_cmp_ui(f, 1) != 0:
            mpz_divexact(tn, tn, f)
            mpz_divexact(td, td, f)
        out.append((get_py(tn), get_py(td)))
    return out


def rational_dot(xs, ys):
    cdef _MpzArray T = _MpzArray(8)
    cdef mpz_ptr tn = &T.data[0]
    cdef mpz_ptr td = &T.data[1]
    cdef mpz_ptr pn = &T.data[2]
    cdef mpz_ptr pd = &T.data[3]
    cdef mpz_ptr g = &T.data[4]
    cdef mpz_ptr u = &T.data[5]
    cdef mpz_ptr v = &T.data[6]
    cdef mpz_ptr h = &T.data[7]
    mpz_set_si(tn, 0)
    mpz_set_si(td, 1)
    for (an, ad), (bn, bd) in zip(xs, ys):
        if an == 0 or bn == 0:
            continue
        set_py(pn, an)
        set_py(h, bn)
        mpz_mul(pn, pn, h)
        set_py(pd, ad)
        set_py(h, bd)
        mpz_mul(pd, pd, h)
        mpz_gcd(g, td, pd)
        # tn/td + pn/pd over lcm(td, pd)
        mpz_divexact(u, pd, g)
        mpz_divexact(v, td, g)
        mpz_mul(tn, tn, u)
        mpz_mul(h, pn, v)
        mpz_add(tn, tn, h)
        mpz_mul(td, v, pd)
    mpz_gcd(g, tn, td)
    mpz_divexact(tn, tn, g)
    mpz_divexact(td, td, g)
    return get_py(tn), get_py(td)
