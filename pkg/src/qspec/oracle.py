r"""Weight multiplicities by two independent routes.

The primary oracle enumerates Gelfand-Tsetlin patterns: triangular arrays
whose top row is the partition of the highest weight and whose consecutive
rows interlace.  Each pattern contributes 1 to the multiplicity of the
weight read off its row sums, and the number of patterns is exactly the
classical dimension.

The second route is Freudenthal's recursion over the dominant chamber,
extended to the full weight system by Weyl symmetry.  It never touches
patterns, so agreement between the two is a strong correctness check for
everything downstream.

Pattern enumeration is capped; the cap can be overridden with the
QSPEC_MAX_PATTERNS environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, ResourceLimitError
from .qdim import classical_dim, _check_dominant
from .qpoly import LaurentPoly
from .roots import (
    cartan_matrix,
    dual_weight,
    fundamental_gram,
    is_dominant,
    positive_roots,
    rho_weight,
    root_as_weight,
    two_rho_pairing,
    weight_add,
    weight_scale,
    weight_sub,
    weight_dot,
)

__all__ = [
    "DEFAULT_PATTERN_CAP",
    "WeightMultiplicityTable",
    "to_partition",
    "gt_patterns",
    "pattern_weight",
    "multiplicities_gt",
    "multiplicities_freudenthal",
    "char_at_k2rho",
    "dominant_representative",
    "weyl_orbit",
    "resolve_pattern_cap",
]

DEFAULT_PATTERN_CAP = 10 ** 6

_ENV_CAP = "QSPEC_MAX_PATTERNS"


def resolve_pattern_cap(cap=None) -> int:
    """Explicit cap, else QSPEC_MAX_PATTERNS, else the default of 10^6."""
    if cap is not None:
        if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
            raise DomainError(f"pattern cap must be a positive integer: {cap!r}")
        return cap
    raw = os.environ.get(_ENV_CAP)
    if raw is not None:
        try:
            val = int(raw)
        except ValueError as exc:
            raise DomainError(f"{_ENV_CAP} must be an integer: {raw!r}") from exc
        if val < 1:
            raise DomainError(f"{_ENV_CAP} must be positive: {val}")
        return val
    return DEFAULT_PATTERN_CAP


@dataclass
class WeightMultiplicityTable:
    """Multiplicity map of a finite-dimensional highest weight module."""

    highest: tuple
    entries: dict = field(default_factory=dict)

    def multiplicity(self, mu) -> int:
        return self.entries.get(tuple(mu), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def sorted_items(self) -> list:
        return sorted(self.entries.items())

    def to_json_dict(self) -> dict:
        return {
            "highest": list(self.highest),
            "entries": [[list(mu), mult] for mu, mult in self.sorted_items()],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "WeightMultiplicityTable":
        try:
            highest = tuple(int(c) for c in d["highest"])
            entries = {}
            for mu, mult in d["entries"]:
                entries[tuple(int(c) for c in mu)] = int(mult)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed multiplicity table payload: {d!r}") from exc
        return cls(highest=highest, entries=entries)

    def __eq__(self, other):
        if not isinstance(other, WeightMultiplicityTable):
            return NotImplemented
        return self.highest == other.highest and self.entries == other.entries


def to_partition(ell: int, lam) -> tuple:
    """Partition (p_1 >= ... >= p_l >= p_{l+1} = 0) with p_i = n_i + ... + n_l."""
    w = _check_dominant(ell, lam)
    parts = []
    running = 0
    for c in reversed(w):
        running += c
        parts.append(running)
    parts.reverse()
    parts.append(0)
    return tuple(parts)


def gt_patterns(ell: int, lam, cap=None):
    """Yield all Gelfand-Tsetlin patterns with top row to_partition(lam).

    A pattern is a tuple of rows of lengths l+1, l, ..., 1; consecutive
    rows interlace:  row[c] >= next[c] >= row[c+1].  The total count is
    bounded first by the classical dimension, which must not exceed the
    pattern cap.
    """
    w = _check_dominant(ell, lam)
    limit = resolve_pattern_cap(cap)
    expected = classical_dim(ell, w)
    if expected > limit:
        raise ResourceLimitError(
            f"pattern count {expected} exceeds cap {limit} for weight {w}"
        )
    top = to_partition(ell, w)

    def extend(rows):
        prev = rows[-1]
        if len(prev) == 1:
            yield tuple(rows)
            return
        choices = [range(prev[c + 1], prev[c] + 1) for c in range(len(prev) - 1)]

        # depth-first over the independent per-entry intervals
        def rec(idx, current):
            if idx == len(choices):
                yield from extend(rows + [tuple(current)])
                return
            for v in choices[idx]:
                current.append(v)
                yield from rec(idx + 1, current)
                current.pop()

        yield from rec(0, [])

    yield from extend([top])


def pattern_weight(pattern) -> tuple:
    """Weight of a pattern in fundamental coordinates.

    Row sums taken from the bottom give the torus weight: the component
    for k basis letters is S_k - S_{k-1} where S_k sums the row with k
    entries; fundamental coordinates are consecutive differences.  With
    this convention the unique maximal pattern carries the highest weight
    itself.
    """
    sums = {len(row): sum(row) for row in pattern}
    n = len(pattern[0])
    glw = [sums[k] - sums.get(k - 1, 0) for k in range(1, n + 1)]
    return tuple(glw[j] - glw[j + 1] for j in range(n - 1))


def multiplicities_gt(ell: int, lam, cap=None) -> WeightMultiplicityTable:
    """Multiplicity table by direct Gelfand-Tsetlin enumeration."""
    w = _check_dominant(ell, lam)
    entries = {}
    for pat in gt_patterns(ell, w, cap=cap):
        mu = pattern_weight(pat)
        entries[mu] = entries.get(mu, 0) + 1
    return WeightMultiplicityTable(highest=w, entries=entries)


def dominant_representative(weight) -> tuple:
    """Weyl-chamber representative via simple reflections."""
    w = list(weight)
    ell = len(w)
    cartan = cartan_matrix(ell)
    while True:
        for i in range(ell):
            if w[i] < 0:
                ci = w[i]
                row = cartan[i]
                for j in range(ell):
                    w[j] -= ci * row[j]
                break
        else:
            return tuple(w)


def weyl_orbit(weight) -> set:
    """Full Weyl orbit of a weight (BFS over simple reflections)."""
    start = tuple(weight)
    ell = len(start)
    cartan = cartan_matrix(ell)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(ell):
                ci = w[i]
                if ci == 0:
                    continue
                refl = tuple(w[j] - ci * cartan[i][j] for j in range(ell))
                if refl not in seen:
                    seen.add(refl)
                    nxt.append(refl)
        frontier = nxt
    return seen


def _root_coordinates(ell: int, diff) -> tuple | None:
    """Write a weight-lattice vector as sum k_i alpha_i, or None.

    Uses the exact inverse Cartan matrix; returns integer coordinates only
    when the vector lies in the root lattice.
    """
    gram = fundamental_gram(ell)
    ks = []
    for i in range(ell):
        val = sum(gram[i][j] * diff[j] for j in range(ell))
        if val.denominator != 1:
            return None
        ks.append(int(val))
    return tuple(ks)


def multiplicities_freudenthal(ell: int, lam) -> WeightMultiplicityTable:
    """Multiplicity table by Freudenthal's recursion.

    Dominant weights below the highest weight are processed in increasing
    depth; each multiplicity comes from

        ((L+rho, L+rho) - (mu+rho, mu+rho)) m(mu)
            = 2 sum_{alpha>0} sum_{t>=1} m(mu + t alpha) (mu + t alpha, alpha)

    with exact rational inner products, then the table is closed under the
    Weyl group.
    """
    w = _check_dominant(ell, lam)
    rho = rho_weight(ell)
    lowest = tuple(-c for c in dual_weight(w))
    kmax = _root_coordinates(ell, weight_sub(w, lowest))
    if kmax is None:
        raise AssertionError("highest minus lowest weight must lie in the root lattice")

    roots = positive_roots(ell)
    root_vecs = [root_as_weight(ell, r) for r in roots]

    # dominant candidates mu = lam - sum k_i alpha_i inside the coordinate box
    candidates = []

    def scan(idx, ks):
        if idx == ell:
            mu = weight_sub(w, _cartan_combo(ell, ks))
            if is_dominant(mu):
                candidates.append((sum(ks), tuple(ks), mu))
            return
        for v in range(kmax[idx] + 1):
            ks.append(v)
            scan(idx + 1, ks)
            ks.pop()

    scan(0, [])
    candidates.sort()

    lam_rho = weight_add(w, rho)
    lam_norm = weight_dot(lam_rho, lam_rho)
    mult: dict = {}
    for level, ks, mu in candidates:
        if level == 0:
            mult[mu] = 1
            continue
        mu_rho = weight_add(mu, rho)
        denom = lam_norm - weight_dot(mu_rho, mu_rho)
        acc = Fraction(0)
        for vec, root_ks in zip(root_vecs, _root_k_supports(roots)):
            tcap = min(ks[c] for c in root_ks)
            nu = mu
            for t in range(1, tcap + 1):
                nu = weight_add(nu, vec)
                m_nu = mult.get(dominant_representative(nu), 0)
                if m_nu:
                    acc += m_nu * weight_dot(nu, vec)
        if acc == 0:
            continue
        value = 2 * acc / denom
        if value.denominator != 1 or value < 0:
            raise AssertionError(f"non-integral multiplicity at {mu}: {value}")
        if value:
            mult[mu] = int(value)

    entries = {}
    for mu, m in mult.items():
        for orb in weyl_orbit(mu):
            entries[orb] = m
    return WeightMultiplicityTable(highest=w, entries=entries)


def _cartan_combo(ell: int, ks) -> tuple:
    """sum_i k_i alpha_i in fundamental coordinates."""
    out = [0] * ell
    cartan = cartan_matrix(ell)
    for i, k in enumerate(ks):
        if k:
            row = cartan[i]
            for j in range(ell):
                out[j] += k * row[j]
    return tuple(out)


def _root_k_supports(roots):
    """Indices i .. j-1 of the simple roots inside each positive root."""
    return [tuple(range(r.i - 1, r.j - 1)) for r in roots]


def char_at_k2rho(ell: int, lam, sign: int = 1, cap=None) -> LaurentPoly:
    """Character evaluated on the group-like weight element.

    Sums mult(mu) q^(sign * (2 rho, mu)) over the Gelfand-Tsetlin table;
    with sign +1 this reproduces the quantum dimension, and sign -1 gives
    the inverse-weight trace.
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    table = multiplicities_gt(ell, lam, cap=cap)
    data = {}
    for mu, m in table.entries.items():
        e = sign * two_rho_pairing(mu)
        data[e] = data.get(e, 0) + m
    return LaurentPoly(data)
