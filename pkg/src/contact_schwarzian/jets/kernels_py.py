"""Pure-numpy jet product kernel (fallback when the compiled extension is absent).

The truncated product is a sparse convolution over monomial pairs; it is
realised here as a gather followed by a dense scatter matmul so the inner
loop runs in BLAS.
"""

import numpy as np


def jet_mul(a, b, tab):
    """Batched truncated product.

    a, b: float64 arrays of shape (B, M) with M == tab.size.
    Returns the (B, M) coefficient array of the product.
    """
    prod = a[:, tab.mul_a] * b[:, tab.mul_b]
    return prod @ tab.mul_scatter


BACKEND = "python"
