# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled BFS orbit kernel.

Same contract as _orbitpy.bfs_orbit. States live in C arrays of unsigned
16-bit ints and are interned as bytes for the visited set, so the inner
matrix application runs entirely in C. Requires modulus < 2**16; the
dispatcher falls back to the pure-Python kernel above that.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc

from symtorus.errors import OrbitSizeExceeded


def bfs_orbit(start, mats, Py_ssize_t m, Py_ssize_t d, long modulus,
              Py_ssize_t max_states):
    """Closure of ``start`` under all matrices; frozenset of int tuples."""
    cdef Py_ssize_t length = m * d
    cdef Py_ssize_t nmats = len(mats)
    if len(start) != length:
        raise ValueError("state length does not match m*d")
    if not (1 < modulus < 65536):
        raise ValueError("compiled kernel requires 1 < modulus < 2**16")

    cdef long* tables = <long*> malloc(nmats * m * m * sizeof(long))
    cdef unsigned short* scratch = <unsigned short*> malloc(
        length * sizeof(unsigned short))
    if tables == NULL or scratch == NULL:
        free(tables)
        free(scratch)
        raise MemoryError()

    cdef Py_ssize_t i, j, t, k
    cdef long acc
    cdef unsigned short* sp
    cdef long* wrow
    try:
        for k in range(nmats):
            w = mats[k]
            for j in range(m):
                row = w[j]
                for i in range(m):
                    tables[(k * m + j) * m + i] = row[i] % modulus

        for i in range(length):
            scratch[i] = <unsigned short> (start[i] % modulus)
        first = PyBytes_FromStringAndSize(
            <char*> scratch, length * sizeof(unsigned short))

        seen = {first}
        frontier = [first]
        while frontier:
            fresh = []
            for state in frontier:
                sp = <unsigned short*> PyBytes_AS_STRING(state)
                for k in range(nmats):
                    for j in range(m):
                        wrow = tables + (k * m + j) * m
                        for t in range(d):
                            acc = 0
                            for i in range(m):
                                acc += wrow[i] * sp[i * d + t]
                            scratch[j * d + t] = <unsigned short> (acc % modulus)
                    cand = PyBytes_FromStringAndSize(
                        <char*> scratch, length * sizeof(unsigned short))
                    if cand not in seen:
                        if len(seen) >= max_states:
                            raise OrbitSizeExceeded(max_states)
                        seen.add(cand)
                        fresh.append(cand)
            frontier = fresh
    finally:
        free(tables)
        free(scratch)

    return frozenset(_decode(s, length) for s in seen)


cdef tuple _decode(bytes state, Py_ssize_t length):
    cdef unsigned short* sp = <unsigned short*> PyBytes_AS_STRING(state)
    cdef Py_ssize_t i
    return tuple([sp[i] for i in range(length)])
