# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Bott-sum kernel: 64-bit lattice-point counting.

Callers guarantee that m * max(numerator, denominator) stays below 2^62;
`bottiter.kernel` routes anything larger to the pure backend.
"""

from fractions import Fraction

from libc.stdlib cimport free, malloc

from .errors import PhaseCollision


cdef long long _index_at_c(
    long long* arcs, long long n_arcs,
    long long* pnum, long long* pden, long long l,
    long long m, long long* collision_idx,
) nogil:
    cdef long long k, f, prev_floor, total, index, half_count
    for k in range(l):
        if m % pden[k] == 0:
            collision_idx[0] = k
            return -1
    half_count = (m - 1) >> 1
    total = 0
    prev_floor = 0
    for k in range(l):
        f = (m * pnum[k]) / pden[k]
        total += arcs[k] * (f - prev_floor)
        prev_floor = f
    total += arcs[n_arcs - 1] * (half_count - prev_floor)
    index = arcs[0] + 2 * total
    if m % 2 == 0:
        index += arcs[n_arcs - 1]
    return index


cdef class _Buffers:
    cdef long long* arcs
    cdef long long* pnum
    cdef long long* pden
    cdef long long n_arcs
    cdef long long l

    def __cinit__(self, list arcs, list pnum, list pden):
        cdef long long i
        self.n_arcs = len(arcs)
        self.l = len(pnum)
        self.arcs = <long long*> malloc(self.n_arcs * sizeof(long long))
        self.pnum = <long long*> malloc(max(self.l, 1) * sizeof(long long))
        self.pden = <long long*> malloc(max(self.l, 1) * sizeof(long long))
        if self.arcs == NULL or self.pnum == NULL or self.pden == NULL:
            raise MemoryError()
        for i in range(self.n_arcs):
            self.arcs[i] = arcs[i]
        for i in range(self.l):
            self.pnum[i] = pnum[i]
            self.pden[i] = pden[i]

    def __dealloc__(self):
        if self.arcs != NULL:
            free(self.arcs)
        if self.pnum != NULL:
            free(self.pnum)
        if self.pden != NULL:
            free(self.pden)


def index_at(list arcs, list pnum, list pden, long long m):
    """ind(c^m); raises PhaseCollision when some denominator divides m."""
    cdef _Buffers buf = _Buffers(arcs, pnum, pden)
    cdef long long collision_idx = -1
    cdef long long result = _index_at_c(
        buf.arcs, buf.n_arcs, buf.pnum, buf.pden, buf.l, m, &collision_idx
    )
    if collision_idx >= 0:
        raise PhaseCollision(
            Fraction(pnum[collision_idx], pden[collision_idx]), collision_idx, m
        )
    return result


def index_sequence(list arcs, list pnum, list pden, long long m_max):
    """[ind(c^1), ..., ind(c^m_max)]."""
    cdef _Buffers buf = _Buffers(arcs, pnum, pden)
    cdef long long collision_idx = -1
    cdef long long m, value
    cdef list out = []
    for m in range(1, m_max + 1):
        value = _index_at_c(
            buf.arcs, buf.n_arcs, buf.pnum, buf.pden, buf.l, m, &collision_idx
        )
        if collision_idx >= 0:
            raise PhaseCollision(
                Fraction(pnum[collision_idx], pden[collision_idx]), collision_idx, m
            )
        out.append(value)
    return out
