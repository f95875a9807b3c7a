r"""Root combinatorics for the A_l series.

Weights are stored in the fundamental-weight basis throughout: a weight of
rank l is a tuple of l integers (n_1, ..., n_l).  A positive root is an
index pair (i, j) with 1 <= i < j <= l+1 and stands for the sum of the
simple roots alpha_i + ... + alpha_{j-1}.  The bilinear form is normalised
so that every root has squared length 2; with that normalisation
(omega_i, alpha_j) = delta_ij, which makes pairings against roots pure
integer coordinate sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import DomainError

__all__ = [
    "PositiveRoot",
    "RootSystem",
    "positive_roots",
    "cartan_matrix",
    "simple_root_as_weight",
    "root_as_weight",
    "pair_weight_root",
    "rho_pairing",
    "rho_weight",
    "two_rho_pairing",
    "dual_weight",
    "is_dominant",
    "weight_add",
    "weight_sub",
    "weight_scale",
    "fundamental_gram",
    "weight_dot",
    "check_rank",
]


class PositiveRoot(NamedTuple):
    i: int
    j: int


def check_rank(ell: int) -> int:
    if not isinstance(ell, int) or isinstance(ell, bool) or ell < 1:
        raise DomainError(f"rank must be a positive integer, got {ell!r}")
    return ell


def _check_root(ell: int, root) -> PositiveRoot:
    i, j = root
    if not (1 <= i < j <= ell + 1):
        raise DomainError(f"not a positive root for rank {ell}: ({i}, {j})")
    return PositiveRoot(i, j)


def _check_weight(ell: int, weight) -> tuple:
    w = tuple(weight)
    if len(w) != ell:
        raise DomainError(f"weight {w} has length {len(w)}, expected rank {ell}")
    if not all(isinstance(c, int) and not isinstance(c, bool) for c in w):
        raise DomainError(f"weight coordinates must be integers: {w}")
    return w


@lru_cache(maxsize=None)
def positive_roots(ell: int) -> tuple:
    """All positive roots (i, j), 1 <= i < j <= l+1, in lexicographic order."""
    check_rank(ell)
    return tuple(
        PositiveRoot(i, j)
        for i in range(1, ell + 1)
        for j in range(i + 1, ell + 2)
    )


@lru_cache(maxsize=None)
def cartan_matrix(ell: int) -> tuple:
    """Cartan matrix of A_l: 2 on the diagonal, -1 on the off-diagonals."""
    check_rank(ell)
    rows = []
    for i in range(1, ell + 1):
        row = [0] * ell
        row[i - 1] = 2
        if i > 1:
            row[i - 2] = -1
        if i < ell:
            row[i] = -1
        rows.append(tuple(row))
    return tuple(rows)


def simple_root_as_weight(ell: int, i: int) -> tuple:
    """Simple root alpha_i written in fundamental coordinates (Cartan row i)."""
    check_rank(ell)
    if not 1 <= i <= ell:
        raise DomainError(f"simple root index {i} out of range for rank {ell}")
    return cartan_matrix(ell)[i - 1]


def root_as_weight(ell: int, root) -> tuple:
    """Positive root (i, j) in fundamental coordinates."""
    r = _check_root(ell, root)
    coords = [0] * ell
    for k in range(r.i, r.j):
        row = cartan_matrix(ell)[k - 1]
        for c in range(ell):
            coords[c] += row[c]
    return tuple(coords)


def pair_weight_root(weight, root) -> int:
    """Pairing (weight, alpha_ij) = sum of coordinates i..j-1.

    Valid because (omega_k, alpha_ij) is 1 exactly when i <= k <= j-1.
    """
    w = tuple(weight)
    ell = len(w)
    r = _check_root(ell, root)
    return sum(w[k] for k in range(r.i - 1, r.j - 1))


def rho_pairing(root) -> int:
    """(rho, alpha_ij) = j - i, the height of the root."""
    i, j = root
    if not (1 <= i < j):
        raise DomainError(f"not a positive root: ({i}, {j})")
    return j - i


def rho_weight(ell: int) -> tuple:
    """The Weyl vector rho = (1, ..., 1) in fundamental coordinates."""
    check_rank(ell)
    return (1,) * ell


def two_rho_pairing(weight) -> int:
    """Pairing (2 rho, weight) = sum_j j (l + 1 - j) n_j.

    The closed coefficient j(l+1-j) equals twice the column sum of the
    inverse Cartan matrix; a test rederives it from the Gram matrix.
    """
    w = tuple(weight)
    ell = len(w)
    check_rank(ell)
    return sum(j * (ell + 1 - j) * w[j - 1] for j in range(1, ell + 1))


def dual_weight(weight) -> tuple:
    """Highest weight of the dual representation: reverse the coordinates."""
    w = tuple(weight)
    check_rank(len(w))
    return tuple(reversed(w))


def is_dominant(weight) -> bool:
    return all(c >= 0 for c in weight)


def weight_add(u, v) -> tuple:
    if len(u) != len(v):
        raise DomainError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def weight_sub(u, v) -> tuple:
    if len(u) != len(v):
        raise DomainError(f"rank mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def weight_scale(c: int, u) -> tuple:
    return tuple(c * a for a in u)


@lru_cache(maxsize=None)
def fundamental_gram(ell: int) -> tuple:
    """Gram matrix of the fundamental weights, G_ij = min(i,j)(l+1-max(i,j))/(l+1).

    Equals the inverse Cartan matrix in this normalisation.  Entries are
    exact Fractions.
    """
    check_rank(ell)
    n = ell + 1
    return tuple(
        tuple(Fraction(min(i, j) * (n - max(i, j)), n) for j in range(1, n))
        for i in range(1, n)
    )


def weight_dot(u, v) -> Fraction:
    """Exact inner product of two weights in fundamental coordinates."""
    u = tuple(u)
    v = tuple(v)
    if len(u) != len(v):
        raise DomainError(f"rank mismatch: {len(u)} vs {len(v)}")
    gram = fundamental_gram(len(u))
    total = Fraction(0)
    for i, a in enumerate(u):
        if a == 0:
            continue
        row = gram[i]
        total += a * sum(row[j] * b for j, b in enumerate(v) if b != 0)
    return total


@dataclass(frozen=True)
class RootSystem:
    """Thin wrapper fixing the rank and exposing the A_l data above."""

    rank: int

    def __post_init__(self):
        check_rank(self.rank)

    @property
    def num_positive_roots(self) -> int:
        return self.rank * (self.rank + 1) // 2

    def positive_roots(self) -> tuple:
        return positive_roots(self.rank)

    def cartan_matrix(self) -> tuple:
        return cartan_matrix(self.rank)
