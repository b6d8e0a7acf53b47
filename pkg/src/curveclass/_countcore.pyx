# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled affine point-count kernel; same algorithm as _countcore_py.

Counts solutions (x, y) in F_Q^2 of y^2 + h(x)*y = f(x) over the degree-d
extension of F_p cut out by ``modulus`` (full monic list, length d+1).
"""

from libc.stdlib cimport calloc, free

BACKEND = "compiled"


cdef void elem_mul(int* a, int* b, int* out, int* scratch, int p, int d, int* red):
    cdef int i, j, k, t, c, ai
    if d == 1:
        out[0] = (a[0] * b[0]) % p
        return
    for i in range(2 * d - 1):
        scratch[i] = 0
    for i in range(d):
        ai = a[i]
        if ai:
            for j in range(d):
                if b[j]:
                    scratch[i + j] = (scratch[i + j] + ai * b[j]) % p
    for k in range(2 * d - 2, d - 1, -1):
        c = scratch[k]
        if c:
            scratch[k] = 0
            for t in range(d):
                if red[(k - d) * d + t]:
                    scratch[t] = (scratch[t] + c * red[(k - d) * d + t]) % p
    for i in range(d):
        out[i] = scratch[i]


cdef void elem_pow(int* a, unsigned long long e, int* out, int p, int d, int* red,
                   int* scratch, int* base, int* tmp):
    cdef int i
    for i in range(d):
        out[i] = 0
        base[i] = a[i]
    out[0] = 1
    while e:
        if e & 1:
            elem_mul(out, base, tmp, scratch, p, d, red)
            for i in range(d):
                out[i] = tmp[i]
        elem_mul(base, base, tmp, scratch, p, d, red)
        for i in range(d):
            base[i] = tmp[i]
        e >>= 1


cdef void horner(int* coeffs, int ncoeffs, int* x, int* out, int* scratch, int* tmp,
                 int p, int d, int* red):
    cdef int i, k
    if ncoeffs == 0:
        for i in range(d):
            out[i] = 0
        return
    for i in range(d):
        out[i] = coeffs[(ncoeffs - 1) * d + i]
    for k in range(ncoeffs - 2, -1, -1):
        elem_mul(out, x, tmp, scratch, p, d, red)
        for i in range(d):
            out[i] = (tmp[i] + coeffs[k * d + i]) % p


cdef int increment(int* x, int p, int d):
    cdef int i
    for i in range(d):
        x[i] += 1
        if x[i] < p:
            return 0
        x[i] = 0
    return 1


def affine_count(int p, int d, modulus, fcoeffs, hcoeffs):
    cdef unsigned long long Q = 1
    cdef int i, j, k
    for i in range(d):
        Q *= <unsigned long long> p
    cdef int nf = len(fcoeffs)
    cdef int nh = len(hcoeffs)

    cdef int* red = <int*> calloc(max((d - 1) * d, 1), sizeof(int))
    cdef int* fc = <int*> calloc(max(nf * d, 1), sizeof(int))
    cdef int* hc = <int*> calloc(max(nh * d, 1), sizeof(int))
    cdef int* x = <int*> calloc(d, sizeof(int))
    cdef int* u = <int*> calloc(d, sizeof(int))
    cdef int* v = <int*> calloc(d, sizeof(int))
    cdef int* w = <int*> calloc(d, sizeof(int))
    cdef int* tmp = <int*> calloc(d, sizeof(int))
    cdef int* base = <int*> calloc(d, sizeof(int))
    cdef int* scratch = <int*> calloc(max(2 * d - 1, 1), sizeof(int))
    cdef int* tr = <int*> calloc(d, sizeof(int))
    cdef unsigned char* squares = NULL
    cdef unsigned long long n, idx
    cdef unsigned long long count = 0
    cdef int tbit, top

    if red == NULL or fc == NULL or hc == NULL or x == NULL or u == NULL or v == NULL \
            or w == NULL or tmp == NULL or base == NULL or scratch == NULL or tr == NULL:
        raise MemoryError()

    try:
        # reduction rows of t^(d+j) mod modulus
        if d > 1:
            for i in range(d):
                red[i] = (-(<int> modulus[i])) % p
                if red[i] < 0:
                    red[i] += p
            for j in range(1, d - 1):
                top = red[(j - 1) * d + d - 1]
                red[j * d] = 0
                for k in range(1, d):
                    red[j * d + k] = red[(j - 1) * d + k - 1]
                if top:
                    for k in range(d):
                        red[j * d + k] = (red[j * d + k] + top * red[k]) % p
        for i in range(nf):
            for j in range(d):
                fc[i * d + j] = fcoeffs[i][j]
        for i in range(nh):
            for j in range(d):
                hc[i * d + j] = hcoeffs[i][j]

        if p != 2:
            squares = <unsigned char*> calloc(Q, sizeof(unsigned char))
            if squares == NULL:
                raise MemoryError()
            for i in range(d):
                x[i] = 0
            n = 0
            while n < Q:
                elem_mul(x, x, u, scratch, p, d, red)
                idx = 0
                for i in range(d - 1, -1, -1):
                    idx = idx * <unsigned long long> p + <unsigned long long> u[i]
                squares[idx] = 1
                increment(x, p, d)
                n += 1
            for i in range(d):
                x[i] = 0
            n = 0
            while n < Q:
                horner(fc, nf, x, u, scratch, tmp, p, d, red)
                idx = 0
                tbit = 0
                for i in range(d):
                    if u[i]:
                        tbit = 1
                for i in range(d - 1, -1, -1):
                    idx = idx * <unsigned long long> p + <unsigned long long> u[i]
                if tbit:
                    if squares[idx]:
                        count += 2
                else:
                    count += 1
                increment(x, p, d)
                n += 1
            return count

        # p == 2: absolute traces of the power basis
        for i in range(d):
            for j in range(d):
                u[j] = 0
            u[i] = 1
            for j in range(d):
                v[j] = u[j]
            for k in range(d - 1):
                elem_mul(v, v, tmp, scratch, p, d, red)
                for j in range(d):
                    v[j] = tmp[j]
                    u[j] = u[j] ^ tmp[j]
            tr[i] = u[0]
        for i in range(d):
            x[i] = 0
        n = 0
        while n < Q:
            horner(hc, nh, x, v, scratch, tmp, p, d, red)
            tbit = 0
            for i in range(d):
                if v[i]:
                    tbit = 1
            if tbit == 0:
                count += 1
            else:
                horner(fc, nf, x, u, scratch, tmp, p, d, red)
                elem_mul(v, v, w, scratch, p, d, red)
                elem_pow(w, Q - 2, v, p, d, red, scratch, base, tmp)
                elem_mul(u, v, w, scratch, p, d, red)
                tbit = 0
                for i in range(d):
                    if w[i]:
                        tbit ^= tr[i]
                if tbit == 0:
                    count += 2
            increment(x, p, d)
            n += 1
        return count
    finally:
        free(red)
        free(fc)
        free(hc)
        free(x)
        free(u)
        free(v)
        free(w)
        free(tmp)
        free(base)
        free(scratch)
        free(tr)
        if squares != NULL:
            free(squares)
