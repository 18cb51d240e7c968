"""Pure-Python integer kernels.

Every array here is a flat list of Python ints holding elements of
Z[zeta]/(Phi_n) in the power basis, ``phi`` coefficients per entry.  ``red``
maps each exponent ``u < 2*phi - 1`` to the coefficients of ``zeta**u``.
Denominators are handled by the caller; these routines never divide.

The compiled twin in ``_ckernels.pyx`` implements the same signatures on
int64 buffers.
"""

from __future__ import annotations

from typing import Sequence


def _pmul(a: Sequence[int], b: Sequence[int], phi: int, red: Sequence[Sequence[int]]) -> list[int]:
    tmp = [0] * (2 * phi - 1)
    for u, av in enumerate(a):
        if av:
            for v, bv in enumerate(b):
                if bv:
                    tmp[u + v] += av * bv
    out = tmp[:phi]
    for u in range(phi, 2 * phi - 1):
        c = tmp[u]
        if c:
            ru = red[u]
            for s in range(phi):
                out[s] += c * ru[s]
    return out


def matmul(a: Sequence[int], b: Sequence[int], r: int, s: int, t: int,
           phi: int, red: Sequence[Sequence[int]]) -> list[int]:
    """Product of an ``r x s`` and an ``s x t`` matrix."""
    if phi == 1:
        out = [0] * (r * t)
        for i in range(r):
            oi = i * t
            for j in range(s):
                aij = a[i * s + j]
                if not aij:
                    continue
                bj = j * t
                for k in range(t):
                    bv = b[bj + k]
                    if bv:
                        out[oi + k] += aij * bv
        return out

    out = [0] * (r * t * phi)
    for i in range(r):
        for j in range(s):
            ao = (i * s + j) * phi
            aij = a[ao:ao + phi]
            if not any(aij):
                continue
            for k in range(t):
                bo = (j * t + k) * phi
                bjk = b[bo:bo + phi]
                if not any(bjk):
                    continue
                prod = _pmul(aij, bjk, phi, red)
                oo = (i * t + k) * phi
                for c in range(phi):
                    out[oo + c] += prod[c]
    return out


def kron(a: Sequence[int], b: Sequence[int], ra: int, ca: int, rb: int, cb: int,
         phi: int, red: Sequence[Sequence[int]]) -> list[int]:
    """Kronecker product, row-major block layout."""
    rows, cols = ra * rb, ca * cb
    out = [0] * (rows * cols * phi)
    for i in range(ra):
        for j in range(ca):
            ao = (i * ca + j) * phi
            aij = a[ao:ao + phi]
            if not any(aij):
                continue
            for k in range(rb):
                for l in range(cb):
                    bo = (k * cb + l) * phi
                    bkl = b[bo:bo + phi]
                    if not any(bkl):
                        continue
                    oo = ((i * rb + k) * cols + j * cb + l) * phi
                    if phi == 1:
                        out[oo] = aij[0] * bkl[0]
                    else:
                        out[oo:oo + phi] = _pmul(aij, bkl, phi, red)
    return out


def convolve(f: Sequence[int], g: Sequence[int], d: int, phi: int,
             red: Sequence[Sequence[int]],
             cidx: Sequence[int], cval: Sequence[int],
             moff: Sequence[int], mtgt: Sequence[int], mval: Sequence[int]) -> list[int]:
    """Matrix of ``x -> sum f(x1) g(x2)`` for ``d x d`` matrices ``f`` and ``g``.

    ``cidx`` holds comultiplication triples ``(i, j, k)`` flattened, one per
    coefficient in ``cval``.  The multiplication tensor is CSR over the pair
    index ``p*d + q``: entries ``moff[pq]:moff[pq+1]`` of ``mtgt``/``mval``.
    """
    nnz = len(cidx) // 3
    if phi == 1:
        fcols = [[(p, f[p * d + j]) for p in range(d) if f[p * d + j]] for j in range(d)]
        gcols = [[(q, g[q * d + k]) for q in range(d) if g[q * d + k]] for k in range(d)]
        out = [0] * (d * d)
        for n in range(nnz):
            i, j, k = cidx[3 * n], cidx[3 * n + 1], cidx[3 * n + 2]
            e = cval[n]
            gk = gcols[k]
            for p, fv in fcols[j]:
                ef = e * fv
                base = p * d
                for q, gv in gk:
                    v = ef * gv
                    pq = base + q
                    for t in range(moff[pq], moff[pq + 1]):
                        out[mtgt[t] * d + i] += v * mval[t]
        return out

    def col(m: Sequence[int], j: int) -> list[tuple[int, list[int]]]:
        entries = []
        for p in range(d):
            o = (p * d + j) * phi
            v = list(m[o:o + phi])
            if any(v):
                entries.append((p, v))
        return entries

    fcols = [col(f, j) for j in range(d)]
    gcols = [col(g, k) for k in range(d)]
    mpolys = [list(mval[t * phi:(t + 1) * phi]) for t in range(len(mtgt))]
    out = [0] * (d * d * phi)
    for n in range(nnz):
        i, j, k = cidx[3 * n], cidx[3 * n + 1], cidx[3 * n + 2]
        e = cval[n * phi:(n + 1) * phi]
        gk = gcols[k]
        for p, fv in fcols[j]:
            ef = _pmul(e, fv, phi, red)
            base = p * d
            for q, gv in gk:
                v = _pmul(ef, gv, phi, red)
                pq = base + q
                for t in range(moff[pq], moff[pq + 1]):
                    prod = _pmul(v, mpolys[t], phi, red)
                    oo = (mtgt[t] * d + i) * phi
                    for c in range(phi):
                        out[oo + c] += prod[c]
    return out
