r"""Quantum and classical Weyl dimension formulas for A_l highest weights.

For a dominant weight L the quantum dimension is the exact Laurent
polynomial

    prod_{alpha > 0} [(L + rho, alpha)] / [(rho, alpha)]

with [x] the symmetric q-integer; its value at q = 1 is the classical
Weyl dimension.  Linear one-parameter families L(m) = base + m*direction
have purely exponential quantum-dimension growth: the trailing exponent
drops by (2 rho, direction) per step, which is 2l for the direction
omega_1 + omega_l used by the projective-space spectrum towers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .qpoly import LaurentPoly, QPoint, exact_div, qnum
from .roots import (
    check_rank,
    is_dominant,
    pair_weight_root,
    positive_roots,
    rho_pairing,
    two_rho_pairing,
    weight_add,
    weight_scale,
)

__all__ = [
    "HighestWeightFamily",
    "QuantumDimension",
    "quantum_dim",
    "classical_dim",
    "quantum_dim_numeric",
    "log_quantum_dim",
    "trailing_exponent_formula",
    "family_slope",
    "si_slope",
]


def _check_dominant(ell: int, lam) -> tuple:
    check_rank(ell)
    w = tuple(lam)
    if len(w) != ell:
        raise DomainError(f"weight {w} has length {len(w)}, expected rank {ell}")
    if not all(isinstance(c, int) and not isinstance(c, bool) for c in w):
        raise DomainError(f"weight coordinates must be integers: {w}")
    if not is_dominant(w):
        raise DomainError(f"weight must be dominant: {w}")
    return w


@dataclass(frozen=True)
class HighestWeightFamily:
    """Linear family of dominant weights m -> base + m * direction."""

    base: tuple
    direction: tuple

    def __post_init__(self):
        base = tuple(self.base)
        direction = tuple(self.direction)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "direction", direction)
        if len(base) != len(direction):
            raise DomainError("base and direction must have the same rank")
        check_rank(len(base))
        if not is_dominant(base):
            raise DomainError(f"family base must be dominant: {base}")
        if not is_dominant(direction) or not any(direction):
            raise DomainError(f"family direction must be dominant and nonzero: {direction}")

    @property
    def rank(self) -> int:
        return len(self.base)

    def weight_at(self, m: int) -> tuple:
        if m < 0:
            raise DomainError(f"family parameter must be nonnegative: {m}")
        return weight_add(self.base, weight_scale(m, self.direction))


@dataclass(frozen=True)
class QuantumDimension:
    exact: LaurentPoly
    classical_value: int


def _root_pairings(ell: int, lam):
    """(x, y) = ((lam+rho, alpha), (rho, alpha)) over the positive roots."""
    for r in positive_roots(ell):
        y = rho_pairing(r)
        yield pair_weight_root(lam, r) + y, y


def quantum_dim(ell: int, lam) -> QuantumDimension:
    """Exact quantum dimension together with its classical specialisation."""
    w = _check_dominant(ell, lam)
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for x, y in _root_pairings(ell, w):
        num = num * qnum(x)
        den = den * qnum(y)
    exact = exact_div(num, den)
    return QuantumDimension(exact=exact, classical_value=classical_dim(ell, w))


def classical_dim(ell: int, lam) -> int:
    """Classical Weyl dimension by one exact integer division."""
    w = _check_dominant(ell, lam)
    num = 1
    den = 1
    for x, y in _root_pairings(ell, w):
        num *= x
        den *= y
    quot, rem = divmod(num, den)
    if rem:
        raise AssertionError(f"Weyl quotient not integral for {w}")
    return quot


def quantum_dim_numeric(ell: int, lam, q) -> float:
    """Quantum dimension at a numeric q as a product of paired factor ratios.

    Each positive root contributes q^(y-x) (1 - q^(2x)) / (1 - q^(2y));
    pairing numerator against denominator keeps every factor finite until
    the full product itself leaves the float range.
    """
    w = _check_dominant(ell, lam)
    qv = q.q if isinstance(q, QPoint) else float(q)
    if not (0.0 < qv < 1.0):
        raise DomainError(f"q must satisfy 0 < q < 1, got {qv}")
    out = 1.0
    for x, y in _root_pairings(ell, w):
        out *= qv ** (y - x) * (1.0 - qv ** (2 * x)) / (1.0 - qv ** (2 * y))
    return out


def log_quantum_dim(ell: int, lam, q, inverse: bool = False) -> float:
    """Natural log of the quantum dimension at numeric q.

    Overflow-free for arbitrarily large weights.  With inverse=True the
    computation runs through the substitution q -> 1/q (a distinct
    floating path); by bar invariance the value is the same.
    """
    w = _check_dominant(ell, lam)
    qv = q.q if isinstance(q, QPoint) else float(q)
    if not (0.0 < qv < 1.0):
        raise DomainError(f"q must satisfy 0 < q < 1, got {qv}")
    total = 0.0
    if inverse:
        big = 1.0 / qv
        lnbig = math.log(big)
        for x, y in _root_pairings(ell, w):
            total += (x - y) * lnbig
            total += math.log1p(-math.exp(-2 * x * lnbig))
            total -= math.log1p(-math.exp(-2 * y * lnbig))
    else:
        lnq = math.log(qv)
        for x, y in _root_pairings(ell, w):
            total += (y - x) * lnq
            total += math.log1p(-(qv ** (2 * x)))
            total -= math.log1p(-(qv ** (2 * y)))
    return total


def trailing_exponent_formula(ell: int, lam) -> int:
    """Lowest exponent of the quantum dimension: -(2 rho, lam).

    Follows from [x] having trailing exponent -(x-1) and the positive
    roots summing to 2 rho.
    """
    w = _check_dominant(ell, lam)
    return -two_rho_pairing(w)


def family_slope(ell: int, family: HighestWeightFamily) -> int:
    """Per-step drop of the trailing exponent along the family.

    Equals -(2 rho, direction); for direction omega_1 + omega_l this is
    -2l, the exponential growth rate q^(-2l m) of the quantum dimension.
    """
    check_rank(ell)
    if family.rank != ell:
        raise DomainError(f"family rank {family.rank} != {ell}")
    return -two_rho_pairing(family.direction)


def _check_tower_family(ell: int, family: HighestWeightFamily) -> None:
    if ell < 2:
        raise DomainError("slope factorisation needs rank >= 2 (distinct end nodes)")
    if family.rank != ell:
        raise DomainError(f"family rank {family.rank} != {ell}")
    expected = tuple(1 if k in (0, ell - 1) else 0 for k in range(ell))
    if family.direction != expected:
        raise DomainError(
            f"direction must be omega_1 + omega_l = {expected}, got {family.direction}"
        )
    interior = family.base[1:-1]
    if sum(1 for c in interior if c) > 1 or any(c not in (0, 1) for c in interior):
        raise DomainError(
            "base must have at most one interior coordinate, equal to 1: "
            f"{family.base}"
        )


def si_slope(ell: int, family: HighestWeightFamily, i: int) -> int:
    """Per-step exponent slope of the partial product over roots (i, j), j > i.

    For direction omega_1 + omega_l the slope is -(l+1) at i = 1 and -1
    for every 2 <= i <= l; the slopes sum to the total -2l.
    """
    _check_tower_family(ell, family)
    if not 1 <= i <= ell:
        raise DomainError(f"row index {i} out of range 1..{ell}")
    return -sum(
        pair_weight_root(family.direction, (i, j)) for j in range(i + 1, ell + 2)
    )
