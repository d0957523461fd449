# utils/matrix.py
import numpy as np


def integer_matrix(rows) -> np.ndarray:
    """Integer array from nested rows of exact integers."""
    return np.array([[int(v) for v in row] for row in rows], dtype=np.int64)


def is_permutation_matrix(M: np.ndarray) -> bool:
    """Square 0/1 matrix with exactly one 1 in every row and column."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return False
    if not np.isin(M, (0, 1)).all():
        return False
    ones = (M == 1)
    return bool((ones.sum(axis=0) == 1).all() and (ones.sum(axis=1) == 1).all())


def permutation_of(M: np.ndarray) -> list[int]:
    """For a permutation matrix, the column holding the 1 of each row."""
    return [int(j) for j in np.argmax(np.asarray(M) == 1, axis=1)]


def sum_of_squared_column_sums(M: np.ndarray) -> int:
    """Σ_μ (Σ_λ M[λ, μ])²: the dimension of an algebra from its decomposition matrix at q = 1."""
    cols = np.asarray(M).sum(axis=0)
    return int(sum(int(c) ** 2 for c in cols))
