# cython: language_level=3, boundscheck=False, wraparound=False, overflowcheck=True
"""Compiled twin of ``_pykernels`` on int64 buffers.

Inputs that do not fit in int64, and any intermediate overflow, raise
OverflowError; the dispatcher in ``kernels`` then reruns the call on the
pure-Python path with unbounded ints.
"""

from array import array

ctypedef long long i64


cdef inline i64[::1] _buf(values):
    return array('q', values)


cdef inline i64[::1] _zeros(Py_ssize_t n):
    return array('q', bytes(8 * n))


cdef i64[::1] _flat_red(red, Py_ssize_t phi):
    flat = []
    for row in red[:2 * phi - 1]:
        flat.extend(row[:phi])
    return array('q', flat)


cdef void _pmul(i64* a, i64* b, i64* out, i64* tmp, Py_ssize_t phi, i64* red) except *:
    cdef Py_ssize_t u, v, s
    cdef i64 av, c
    for u in range(2 * phi - 1):
        tmp[u] = 0
    for u in range(phi):
        av = a[u]
        if av == 0:
            continue
        for v in range(phi):
            tmp[u + v] += av * b[v]
    for s in range(phi):
        out[s] = tmp[s]
    for u in range(phi, 2 * phi - 1):
        c = tmp[u]
        if c != 0:
            for s in range(phi):
                out[s] += c * red[u * phi + s]


cdef inline bint _nonzero(i64* a, Py_ssize_t phi) noexcept:
    cdef Py_ssize_t s
    for s in range(phi):
        if a[s] != 0:
            return True
    return False


def matmul(a, b, Py_ssize_t r, Py_ssize_t s, Py_ssize_t t, Py_ssize_t phi, red):
    cdef i64[::1] A = _buf(a)
    cdef i64[::1] B = _buf(b)
    cdef i64[::1] out = _zeros(r * t * phi)
    cdef i64[::1] R = _flat_red(red, phi)
    cdef i64[::1] tmp = _zeros(2 * phi)
    cdef i64[::1] prod = _zeros(phi)
    cdef Py_ssize_t i, j, k, c, ao, bo, oo
    cdef i64 aij, bv
    if phi == 1:
        for i in range(r):
            for j in range(s):
                aij = A[i * s + j]
                if aij == 0:
                    continue
                for k in range(t):
                    bv = B[j * t + k]
                    if bv != 0:
                        out[i * t + k] += aij * bv
        return list(out)
    for i in range(r):
        for j in range(s):
            ao = (i * s + j) * phi
            if not _nonzero(&A[ao], phi):
                continue
            for k in range(t):
                bo = (j * t + k) * phi
                if not _nonzero(&B[bo], phi):
                    continue
                _pmul(&A[ao], &B[bo], &prod[0], &tmp[0], phi, &R[0])
                oo = (i * t + k) * phi
                for c in range(phi):
                    out[oo + c] += prod[c]
    return list(out)


def kron(a, b, Py_ssize_t ra, Py_ssize_t ca, Py_ssize_t rb, Py_ssize_t cb,
         Py_ssize_t phi, red):
    cdef i64[::1] A = _buf(a)
    cdef i64[::1] B = _buf(b)
    cdef Py_ssize_t cols = ca * cb
    cdef i64[::1] out = _zeros(ra * rb * cols * phi)
    cdef i64[::1] R = _flat_red(red, phi)
    cdef i64[::1] tmp = _zeros(2 * phi)
    cdef Py_ssize_t i, j, k, l, ao, bo, oo
    for i in range(ra):
        for j in range(ca):
            ao = (i * ca + j) * phi
            if not _nonzero(&A[ao], phi):
                continue
            for k in range(rb):
                for l in range(cb):
                    bo = (k * cb + l) * phi
                    if not _nonzero(&B[bo], phi):
                        continue
                    oo = ((i * rb + k) * cols + j * cb + l) * phi
                    if phi == 1:
                        out[oo] = A[ao] * B[bo]
                    else:
                        _pmul(&A[ao], &B[bo], &out[oo], &tmp[0], phi, &R[0])
    return list(out)


def convolve(f, g, Py_ssize_t d, Py_ssize_t phi, red, cidx, cval, moff, mtgt, mval):
    cdef i64[::1] F = _buf(f)
    cdef i64[::1] G = _buf(g)
    cdef i64[::1] C = _buf(cidx)
    cdef i64[::1] CV = _buf(cval)
    cdef i64[::1] OFF = _buf(moff)
    cdef i64[::1] TGT = _buf(mtgt)
    cdef i64[::1] MV = _buf(mval)
    cdef i64[::1] out = _zeros(d * d * phi)
    cdef i64[::1] R = _flat_red(red, phi)
    cdef i64[::1] tmp = _zeros(2 * phi)
    cdef i64[::1] ef = _zeros(phi)
    cdef i64[::1] v = _zeros(phi)
    cdef i64[::1] prod = _zeros(phi)
    cdef Py_ssize_t nnz = len(cidx) // 3
    cdef Py_ssize_t n, i, j, k, p, q, pq, t, c, oo
    cdef i64 e, fv, gv, ef1, v1
    if phi == 1:
        for n in range(nnz):
            i = C[3 * n]
            j = C[3 * n + 1]
            k = C[3 * n + 2]
            e = CV[n]
            for p in range(d):
                fv = F[p * d + j]
                if fv == 0:
                    continue
                ef1 = e * fv
                for q in range(d):
                    gv = G[q * d + k]
                    if gv == 0:
                        continue
                    v1 = ef1 * gv
                    pq = p * d + q
                    for t in range(OFF[pq], OFF[pq + 1]):
                        out[TGT[t] * d + i] += v1 * MV[t]
        return list(out)
    for n in range(nnz):
        i = C[3 * n]
        j = C[3 * n + 1]
        k = C[3 * n + 2]
        for p in range(d):
            if not _nonzero(&F[(p * d + j) * phi], phi):
                continue
            _pmul(&CV[n * phi], &F[(p * d + j) * phi], &ef[0], &tmp[0], phi, &R[0])
            for q in range(d):
                if not _nonzero(&G[(q * d + k) * phi], phi):
                    continue
                _pmul(&ef[0], &G[(q * d + k) * phi], &v[0], &tmp[0], phi, &R[0])
                pq = p * d + q
                for t in range(OFF[pq], OFF[pq + 1]):
                    _pmul(&v[0], &MV[t * phi], &prod[0], &tmp[0], phi, &R[0])
                    oo = (TGT[t] * d + i) * phi
                    for c in range(phi):
                        out[oo + c] += prod[c]
    return list(out)
