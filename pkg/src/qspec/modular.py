r"""Finite-dimensional harness for twisted traces and commutator splitting.

Everything here is dense numpy linear algebra on an M-dimensional
truncation: a diagonal operator D with geometric spectrum q^-m, a modular
weight Delta with entries q^(-p m), and an adjoint pair of weighted shift
operators a = b^T used as test elements.

Two statements are exercised:

* an exact telescoping identity splitting [(D^2+1)^(-s/2), b] into k
  factors, each carrying a fractional power r = s/k < 1, with Hoelder
  conjugate exponent bookkeeping 1/p_j + 1/q_j = 1;

* the vanishing, as s decreases to the abscissa p, of the twisted-trace
  defect (s - p) Tr(Delta a [(D^2+1)^(-s/2), b]), which is what lets the
  residue functional ignore commutator corrections.

The default shift weights decay like q^m.  That keeps [D, b] bounded
(entrywise it is the constant (1/q - 1)), which is the standing
assumption behind the defect decay; unit-weight shifts violate it and
their defect tends to a nonzero constant instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

__all__ = [
    "DiagonalOperator",
    "DenseOperator",
    "ModularModel",
    "shift_model",
    "commutator_split_defect",
    "holder_exponents",
    "twisted_defect_scan",
    "twisted_trace_check",
]


@dataclass(frozen=True)
class DiagonalOperator:
    """Strictly positive diagonal operator stored as a 1-d array."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", v)
        if v.ndim != 1 or v.size == 0:
            raise DomainError("diagonal operator needs a nonempty 1-d array")
        if not np.all(np.isfinite(v)) or not np.all(v > 0):
            raise DomainError("diagonal entries must be finite and positive")

    @property
    def size(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class DenseOperator:
    """Square dense operator with finite entries."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        object.__setattr__(self, "matrix", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.size == 0:
            raise DomainError("dense operator must be a nonempty square matrix")
        if not np.all(np.isfinite(m)):
            raise DomainError("dense operator entries must be finite")

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class ModularModel:
    """Truncated model (D, Delta, a, b) at parameters (M, q, p)."""

    size: int
    q: float
    p: float
    D: DiagonalOperator
    delta: DiagonalOperator
    a: DenseOperator
    b: DenseOperator

    def __post_init__(self):
        if self.size < 3:
            raise DomainError(f"model size must be at least 3: {self.size}")
        if not (0.0 < self.q < 1.0):
            raise DomainError(f"q must satisfy 0 < q < 1: {self.q}")
        if self.p <= 0:
            raise DomainError(f"abscissa p must be positive: {self.p}")
        for op in (self.D, self.delta):
            if op.size != self.size:
                raise DomainError("diagonal operator size mismatch")
        for op in (self.a, self.b):
            if op.size != self.size:
                raise DomainError("dense operator size mismatch")
        # conjugation by the modular weight must stay bounded; overflow
        # here is the condition being detected, not an error to warn about
        dv = self.delta.values
        with np.errstate(over="ignore", invalid="ignore"):
            for mat in (self.a.matrix, self.b.matrix):
                conj = dv[:, None] * mat / dv[None, :]
                if not np.all(np.isfinite(conj)):
                    raise DomainError("modular conjugation of a test element overflowed")


def shift_model(size: int, q: float, p: float, weights=None) -> ModularModel:
    """Adjoint-pair weighted shift model on indices m = 1..M.

    b raises the index with weights w_m (default w_m = q^m, which keeps
    [D, b] bounded), a is its transpose, D_m = q^-m and Delta_m = q^(-p m).
    """
    if size < 3:
        raise DomainError(f"model size must be at least 3: {size}")
    if not (0.0 < q < 1.0):
        raise DomainError(f"q must satisfy 0 < q < 1: {q}")
    if p <= 0:
        raise DomainError(f"abscissa p must be positive: {p}")
    m = np.arange(1, size + 1, dtype=float)
    with np.errstate(over="raise"):
        try:
            d = q ** (-m)
            delta = q ** (-p * m)
        except FloatingPointError as exc:
            raise DomainError(
                f"size {size} at q={q}, p={p} overflows the float range"
            ) from exc
    if weights is None:
        w = q ** m[:-1]
    else:
        w = np.asarray(weights, dtype=float)
        if w.shape != (size - 1,):
            raise DomainError(f"need {size - 1} shift weights, got shape {w.shape}")
    b = np.zeros((size, size))
    idx = np.arange(size - 1)
    b[idx + 1, idx] = w
    return ModularModel(
        size=size,
        q=float(q),
        p=float(p),
        D=DiagonalOperator(d),
        delta=DiagonalOperator(delta),
        a=DenseOperator(b.T.copy()),
        b=DenseOperator(b),
    )


def _log_shifted(dvals: np.ndarray) -> np.ndarray:
    """log(d^2 + 1) computed stably for huge d."""
    logs = 2.0 * np.log(dvals)
    correction = np.log1p(np.exp(-np.abs(logs)))
    return np.maximum(logs, 0.0) + correction


def commutator_split_defect(D: DiagonalOperator, b: DenseOperator, s: float, k: int) -> float:
    """Relative defect of the telescoping commutator splitting.

    Compares [(D^2+1)^(-s/2), b] against

        - sum_{j=1}^{k} (D^2+1)^(-j r/2) [(D^2+1)^(r/2), b] (D^2+1)^(-(k-j+1) r/2)

    with r = s/k, which must lie in (0, 1).  Returns the maximum absolute
    entry of the difference divided by that of the left side; both sides
    agree up to floating rounding.
    """
    if D.size != b.size:
        raise DomainError("operator size mismatch")
    if not (isinstance(k, int) and k >= 1):
        raise DomainError(f"splitting order k must be a positive integer: {k!r}")
    if not (s > 0):
        raise DomainError(f"s must be positive: {s!r}")
    r = s / k
    if not (0.0 < r < 1.0):
        raise DomainError(f"fractional power r = s/k must lie in (0, 1): {r}")
    logs = _log_shifted(D.values)
    B = b.matrix

    kern = np.exp(-0.5 * s * logs)
    lhs = kern[:, None] * B - B * kern[None, :]

    half = np.exp(0.5 * r * logs)
    inner = half[:, None] * B - B * half[None, :]
    rhs = np.zeros_like(B)
    for j in range(1, k + 1):
        left = np.exp(-0.5 * j * r * logs)
        right = np.exp(-0.5 * (k - j + 1) * r * logs)
        rhs -= left[:, None] * inner * right[None, :]

    scale = np.max(np.abs(lhs))
    diff = np.max(np.abs(lhs - rhs))
    if scale == 0.0:
        return float(diff)
    return float(diff / scale)


def holder_exponents(s, k: int) -> list:
    """Hoelder conjugate pairs (p_j, q_j) for the k-fold splitting at s.

    p_j = s / (r (j - 1/2)) and q_j = s / (r (k - j + 1/2)) with r = s/k.
    Computed as exact fractions so 1/p_j + 1/q_j == 1 holds on the nose.
    """
    if not (isinstance(k, int) and k >= 1):
        raise DomainError(f"splitting order k must be a positive integer: {k!r}")
    s_frac = Fraction(s) if not isinstance(s, Fraction) else s
    if s_frac <= 0:
        raise DomainError(f"s must be positive: {s!r}")
    r = s_frac / k
    pairs = []
    for j in range(1, k + 1):
        pj = s_frac / (r * (Fraction(2 * j - 1, 2)))
        qj = s_frac / (r * (Fraction(2 * (k - j) + 1, 2)))
        pairs.append((pj, qj))
    return pairs


def _commutator_with_kernel(model: ModularModel, s: float) -> np.ndarray:
    kern = np.exp(-0.5 * s * _log_shifted(model.D.values))
    B = model.b.matrix
    return kern[:, None] * B - B * kern[None, :]


def twisted_defect_scan(model: ModularModel, s_values) -> list:
    """[(s, |(s - p) Tr(Delta a [(D^2+1)^(-s/2), b])|)] for each s.

    For test elements with bounded [D, b] the defect decays linearly in
    s - p as s approaches the abscissa from above.
    """
    out = []
    dv = model.delta.values
    A = model.a.matrix
    for s in s_values:
        s = float(s)
        if s <= model.p:
            raise DomainError(f"scan requires s > p = {model.p}: got {s}")
        comm = _commutator_with_kernel(model, s)
        trace = np.einsum("m,mx,xm->", dv, A, comm)
        out.append((s, float(abs((s - model.p) * trace))))
    return out


def twisted_trace_check(model: ModularModel, s: float) -> tuple:
    """Both sides of the twisted trace relation at s.

    lhs = (s - p) Tr(Delta a b K_s) pairs the functional with ab; rhs
    moves b through the trace with the modular conjugation, evaluated
    literally as (s - p) Tr(Delta Delta^-1 b Delta a K_s).  Their gap
    equals the twisted defect at s by cyclicity of the truncated trace.
    """
    s = float(s)
    if s <= model.p:
        raise DomainError(f"check requires s > p = {model.p}: got {s}")
    kern = np.exp(-0.5 * s * _log_shifted(model.D.values))
    dv = model.delta.values
    A = model.a.matrix
    B = model.b.matrix
    lhs = (s - model.p) * np.einsum("m,mx,xm,m->", dv, A, B, kern)
    big_delta = np.diag(dv)
    inv_delta = np.diag(1.0 / dv)
    composite = big_delta @ inv_delta @ B @ big_delta @ A @ np.diag(kern)
    rhs = (s - model.p) * np.trace(composite)
    return float(lhs), float(rhs)
