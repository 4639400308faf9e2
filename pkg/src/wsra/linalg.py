"""Dense linear algebra over complex doubles and exact rationals.

Complex matrices are plain numpy arrays (dtype complex128).  Exact matrices,
used for symmetric-group combinatorics where seminormal matrices are
rational-valued, are numpy object arrays with ``RAT`` entries; gmpy2's mpq
is used when available (roughly 10x faster), fractions.Fraction otherwise.

Residuals throughout the package are reported in the max-norm: the largest
absolute entry of a matrix or stacked vector.
"""

from __future__ import annotations

import numpy as np

try:
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as RAT

DEFAULT_RANK_TOL = 1e-10


# ---------------------------------------------------------------------------
# complex matrices


def max_abs(a) -> float:
    """Largest absolute entry; 0.0 for empty input."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def kron(a, b):
    """Kronecker product, kron(a, b)[i*p + k, j*q + l] = a[i, j] * b[k, l].

    Works for complex arrays and for exact object arrays alike.
    """
    return np.kron(a, b)


def nullspace_basis(a, tol: float = DEFAULT_RANK_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the right null space of ``a``.

    Singular values <= tol * s_max are treated as zero.  Returns a list of
    1-d vectors (empty when ``a`` has full column rank); deterministic for
    a fixed input.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2:
        raise ValueError("expected a 2-d array")
    n = a.shape[1]
    if n == 0:
        return []
    if a.shape[0] == 0:
        return [np.eye(n, dtype=complex)[i] for i in range(n)]
    _, s, vh = np.linalg.svd(a)
    cutoff = tol * (s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    return [vh[i].conj() for i in range(rank, n)]


def least_squares_min_norm(a, b, tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Minimum-norm x minimizing ||a x - b||_2.

    Pseudoinverse solution; singular values below tol * s_max are dropped.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape[1] == 0:
        return np.zeros((0,) + b.shape[1:], dtype=complex)
    if a.shape[0] == 0:
        return np.zeros((a.shape[1],) + b.shape[1:], dtype=complex)
    x, _, _, _ = np.linalg.lstsq(a, b, rcond=tol)
    return x


def commutant_dimension(mats, tol: float = 1e-8) -> int:
    """Dimension of the joint commutant of a list of d x d matrices.

    Solves [A, Z] = 0 for all A as a stacked linear system on vec(Z);
    dimension 1 certifies irreducibility of the generated algebra.
    """
    mats = [np.asarray(m, dtype=complex) for m in mats]
    d = mats[0].shape[0]
    eye = np.eye(d)
    rows = [np.kron(m, eye) - np.kron(eye, m.T) for m in mats]
    return len(nullspace_basis(np.vstack(rows), tol))


# ---------------------------------------------------------------------------
# exact rational matrices (numpy object arrays of RAT entries)


def rat(p, q=1):
    return RAT(p, q)


def rat_zeros(rows: int, cols: int) -> np.ndarray:
    m = np.empty((rows, cols), dtype=object)
    m[:] = RAT(0)
    return m


def rat_eye(n: int) -> np.ndarray:
    m = rat_zeros(n, n)
    for i in range(n):
        m[i, i] = RAT(1)
    return m


def rat_equal(a, b) -> bool:
    """Exact entrywise equality of two object arrays."""
    return a.shape == b.shape and bool(np.equal(a, b).all())


def to_complex(a) -> np.ndarray:
    """Convert an exact object array to complex128."""
    out = np.empty(a.shape, dtype=complex)
    for idx in np.ndindex(a.shape):
        out[idx] = float(a[idx])
    return out


def exact_scalar(a):
    """Test whether a square object array is exactly scalar.

    Returns (value, None) when a == value * identity, otherwise
    (None, (i, j, entry)) with a witness entry violating scalarity.
    """
    n = a.shape[0]
    d0 = a[0, 0]
    for i in range(n):
        for j in range(n):
            if i == j:
                if a[i, i] != d0:
                    return None, (i, i, a[i, i])
            elif a[i, j] != 0:
                return None, (i, j, a[i, j])
    return d0, None
