"""Monomial index tables for truncated multivariate Taylor arithmetic.

A jet of order K in d variables is stored as the vector of monomial
coefficients c_m of the Taylor polynomial sum_m c_m t^m, |m| <= K, with the
monomials enumerated in graded lexicographic order. The graded ordering makes
the coefficient vector of any lower order a prefix of the higher-order one,
so truncation is a slice.
"""

from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial

import numpy as np


def _monomials(dim, order):
    """All multi-indices of degree <= order in graded lex order."""
    monos = []
    for deg in range(order + 1):
        block = set()
        for comb in combinations_with_replacement(range(dim), deg):
            m = [0] * dim
            for v in comb:
                m[v] += 1
            block.add(tuple(m))
        monos.extend(sorted(block, reverse=True))
    return monos


class JetTable:
    """Precomputed index tables for one (dim, order) jet algebra."""

    def __init__(self, dim, order):
        self.dim = dim
        self.order = order
        self.monomials = _monomials(dim, order)
        self.size = len(self.monomials)
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self.degrees = np.array([sum(m) for m in self.monomials], dtype=np.intp)
        # Offsets such that monomials[:offset[k+1]] are exactly those of degree <= k.
        self.order_offsets = np.searchsorted(self.degrees, np.arange(order + 2))

        ia, ib, io = [], [], []
        for i, ma in enumerate(self.monomials):
            da = sum(ma)
            for j, mb in enumerate(self.monomials):
                if da + sum(mb) > order:
                    continue
                ia.append(i)
                ib.append(j)
                io.append(self.index[tuple(a + b for a, b in zip(ma, mb))])
        self.mul_a = np.array(ia, dtype=np.int32)
        self.mul_b = np.array(ib, dtype=np.int32)
        self.mul_out = np.array(io, dtype=np.int32)

        # Dense one-hot scatter matrix: out = (a[mul_a] * b[mul_b]) @ scatter.
        scatter = np.zeros((len(io), self.size))
        scatter[np.arange(len(io)), self.mul_out] = 1.0
        self.mul_scatter = scatter

        # Partial-derivative gather tables, one per variable.
        self.diff_src = []
        self.diff_dst = []
        self.diff_fac = []
        for v in range(dim):
            src, dst, fac = [], [], []
            for i, m in enumerate(self.monomials):
                if m[v] == 0:
                    continue
                lowered = list(m)
                lowered[v] -= 1
                src.append(i)
                dst.append(self.index[tuple(lowered)])
                fac.append(m[v])
            self.diff_src.append(np.array(src, dtype=np.intp))
            self.diff_dst.append(np.array(dst, dtype=np.intp))
            self.diff_fac.append(np.array(fac, dtype=np.float64))

        # coeff -> partial derivative conversion factors m!.
        self.fact = np.array(
            [np.prod([factorial(e) for e in m]) for m in self.monomials],
            dtype=np.float64,
        )

        self._partial_maps = {}

    def truncated_size(self, order):
        return int(self.order_offsets[order + 1])

    def partial_map(self, r):
        """Index and factor arrays mapping the full symmetric order-r partial
        tensor (shape (dim,)*r) onto monomial slots."""
        if r not in self._partial_maps:
            d = self.dim
            idx = np.empty((d,) * r, dtype=np.intp)
            for pos in np.ndindex(*((d,) * r)):
                m = [0] * d
                for v in pos:
                    m[v] += 1
                idx[pos] = self.index[tuple(m)]
            self._partial_maps[r] = idx
        return self._partial_maps[r]


@lru_cache(maxsize=None)
def table(dim, order):
    if order < 0 or order > 4:
        raise ValueError(f"jet order must be in 0..4, got {order}")
    if dim < 1:
        raise ValueError(f"jet dimension must be positive, got {dim}")
    return JetTable(dim, order)
