from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Tuple

import numpy as np

from ..errors import InputError

EPS = np.finfo(float).eps

# reconstruction bound ||m - V diag(w) V^T|| <= RECONSTRUCTION_CONSTANT * n * eps * ||m||
RECONSTRUCTION_CONSTANT = 8.0

MAX_SWEEPS = 60


def as_finite_array(m, ndim: int = 2) -> np.ndarray:
    """Convert input to a float array and reject NaN/inf entries."""
    try:
        arr = np.array(m, dtype=float)
    except (TypeError, ValueError) as e:
        raise InputError(f"Matrix entries are not real numbers: {e}")
    if arr.ndim != ndim:
        raise InputError(f"Expected a {ndim}-dimensional array, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputError("Matrix has non-finite entries")
    return arr


def spectral_norm(m: np.ndarray) -> float:
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """
    A real symmetric n x n matrix. Entries are symmetrized on construction and
    then frozen.
    """
    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = as_finite_array(self.entries)
        if arr.shape[0] != arr.shape[1]:
            raise InputError(f"Symmetric matrix must be square, got shape {arr.shape}")
        arr = 0.5 * (arr + arr.T)
        arr.setflags(write=False)
        object.__setattr__(self, 'entries', arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def norm(self) -> float:
        return spectral_norm(self.entries)

    @classmethod
    def zeros(cls, n: int) -> "SymMatrix":
        return cls(np.zeros((n, n)))

    def __repr__(self) -> str:
        return f"SymMatrix(dim={self.dim})"


class Eigensystem(NamedTuple):
    values: np.ndarray
    vectors: np.ndarray

    def pairs(self) -> Iterator[Tuple[float, np.ndarray]]:
        for k, value in enumerate(self.values):
            yield float(value), self.vectors[:, k]


@lru_cache(maxsize=64)
def _round_robin(n: int) -> Tuple[Tuple[np.ndarray, np.ndarray], ...]:
    """
    Tournament ordering of all index pairs: each round is a set of disjoint
    pairs, so its rotations commute and can be applied as one orthogonal matrix.
    """
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        if pairs:
            p_idx = np.array([p for p, _ in pairs], dtype=int)
            q_idx = np.array([q for _, q in pairs], dtype=int)
            rounds.append((p_idx, q_idx))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _jacobi(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    n = a.shape[0]
    v = np.eye(n)
    scale = float(np.linalg.norm(a))
    if n < 2 or scale == 0.0:
        return np.diag(a).copy(), v

    rounds = _round_robin(n)
    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= EPS * scale:
            break
        rotated = False
        for p, q in rounds:
            apq = a[p, q]
            active = np.abs(apq) > EPS * EPS * scale
            if not np.any(active):
                continue
            rotated = True
            with np.errstate(divide='ignore', invalid='ignore', over='ignore'):
                tau = np.where(active, (a[q, q] - a[p, p]) / (2.0 * np.where(active, apq, 1.0)), 0.0)
                t = np.where(tau >= 0, 1.0, -1.0) / (np.abs(tau) + np.sqrt(1.0 + tau * tau))
            t = np.where(active & np.isfinite(t), t, 0.0)
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c

            rot = np.eye(n)
            rot[p, p] = c
            rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            # rotated pairs vanish in exact arithmetic
            a[p[active], q[active]] = 0.0
            a[q[active], p[active]] = 0.0
            v = v @ rot
        a = 0.5 * (a + a.T)
        if not rotated:
            break
    else:
        raise InputError(f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps")

    return np.diag(a).copy(), v


def eigh(m: SymMatrix) -> Eigensystem:
    """
    Eigen-decomposition of a symmetric matrix by parallel-ordered cyclic Jacobi rotations.

    Eigenvalues come back ascending with orthonormal eigenvectors as columns;
    the reconstruction residual stays below RECONSTRUCTION_CONSTANT * n * eps * ||m||.
    """
    if not isinstance(m, SymMatrix):
        m = SymMatrix(m)
    values, vectors = _jacobi(np.array(m.entries, dtype=float))
    order = np.argsort(values, kind='stable')
    return Eigensystem(values[order], vectors[:, order])


def eigvalsh(m: SymMatrix) -> np.ndarray:
    return eigh(m).values


def eigenpairs(m: SymMatrix) -> List[Tuple[float, np.ndarray]]:
    """The eigen-decomposition as an ascending list of (eigenvalue, unit eigenvector)."""
    return list(eigh(m).pairs())
