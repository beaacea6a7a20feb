# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled jet product kernel: batched truncated multivariate Taylor products."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def jet_mul(cnp.ndarray[cnp.float64_t, ndim=2] a,
            cnp.ndarray[cnp.float64_t, ndim=2] b,
            tab):
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ia = tab.mul_a
    cdef cnp.ndarray[cnp.int32_t, ndim=1] ib = tab.mul_b
    cdef cnp.ndarray[cnp.int32_t, ndim=1] io = tab.mul_out
    cdef Py_ssize_t B = a.shape[0]
    cdef Py_ssize_t M = a.shape[1]
    cdef Py_ssize_t P = ia.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] out = np.zeros((B, M), dtype=np.float64)
    cdef Py_ssize_t r, t
    cdef double* ap
    cdef double* bp
    cdef double* op
    for r in range(B):
        ap = &a[r, 0]
        bp = &b[r, 0]
        op = &out[r, 0]
        for t in range(P):
            op[io[t]] += ap[ia[t]] * bp[ib[t]]
    return out


BACKEND = "cython"
