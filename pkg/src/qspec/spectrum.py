r"""Spectral model for the Dolbeault-type operator on quantum projective space.

The antiholomorphic forms on the rank-l quantum projective space split into
2l linear towers of irreducible modules: one for degree 0, two for each
intermediate degree, one for the top degree.  Tower step m carries the
module of highest weight base + m * (omega_1 + omega_l), and the operator
eigenvalue grows like q^-m (modelled either as a symmetric q-integer
[m + t] or as the pure exponential q^-(m+t)).

Weighted zeta functions over such a model,

    zeta(s) = sum_towers sum_m  w(m) * kernel(eigenvalue_m, s),

are geometric up to exponentially small corrections, so partial sums are
finished off by geometric tail extrapolation once consecutive-term ratios
stabilize.  The quantum-dimension weight gives abscissa 2l (the spectral
dimension); the plain-dimension weight gives abscissa 0.

All per-term magnitudes are handled in log space: the weights grow like
q^(-2l m) and the kernels shrink like q^(s m), either of which would
overflow floats long before their product does.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import DomainError, EstimationError
from .qdim import HighestWeightFamily, classical_dim, log_quantum_dim
from .qpoly import QPoint
from .roots import check_rank

__all__ = [
    "WEIGHTS",
    "KERNELS",
    "TowerSpec",
    "SpectrumModel",
    "ZetaResult",
    "ResidueResult",
    "default_model",
    "model_from_config",
    "model_to_config",
    "tower_log_terms",
    "zeta",
    "spectral_dimension_estimate",
    "residue_limit",
    "toy_model",
    "toy_weight",
    "toy_zeta_closed_form",
]

WEIGHTS = ("qdim", "qdim-inverse", "classical", "count")
KERNELS = ("shifted", "pure")

# four consecutive term ratios within this relative spread count as stable
RATIO_SPREAD = 1e-9
_WINDOW = 4


@dataclass(frozen=True)
class TowerSpec:
    """One linear tower of the spectrum.

    k is the form degree the tower came from (metadata), family gives the
    highest weight at each step, and the eigenvalue at step m is either
    the symmetric q-integer [m + offset] or the pure power q^-(m + offset).
    """

    k: int
    family: HighestWeightFamily
    eig_model: str = "qnumber"
    eig_offset: int = 1
    m_start: int = 1

    def __post_init__(self):
        if self.eig_model not in ("qnumber", "pure"):
            raise DomainError(f"unknown eigenvalue model: {self.eig_model!r}")
        if self.eig_offset < 0:
            raise DomainError(f"eigenvalue offset must be nonnegative: {self.eig_offset}")
        if self.m_start < 0:
            raise DomainError(f"m_start must be nonnegative: {self.m_start}")
        if self.eig_model == "qnumber" and self.m_start + self.eig_offset < 1:
            raise DomainError(
                "qnumber eigenvalues need m_start + offset >= 1 to stay positive"
            )

    def log_eigenvalue(self, q: float, m: int) -> float:
        x = m + self.eig_offset
        lnq = math.log(q)
        if self.eig_model == "pure":
            return -x * lnq
        # [x] = q^-x (1 - q^(2x)) / (q^-1 - q)
        return -x * lnq + math.log1p(-(q ** (2 * x))) - math.log(1.0 / q - q)


@dataclass(frozen=True)
class SpectrumModel:
    """Tower collection over a fixed rank, projective-space parameter N and q.

    The canonical form decomposition carries exactly 2l towers (see
    default_model); the raw constructor accepts any nonempty tower tuple
    so reduced models such as the single geometric toy tower can reuse
    the same summation machinery.
    """

    ell: int
    N: int
    q: QPoint
    towers: tuple

    def __post_init__(self):
        check_rank(self.ell)
        object.__setattr__(self, "towers", tuple(self.towers))
        if not self.towers:
            raise DomainError("model needs at least one tower")
        for t in self.towers:
            if not isinstance(t, TowerSpec):
                raise DomainError("towers must be TowerSpec instances")
            if not 0 <= t.k <= self.ell:
                raise DomainError(f"form degree {t.k} out of range 0..{self.ell}")
            if t.family.rank != self.ell:
                raise DomainError("tower family rank must match the model rank")


def _interior_base(ell: int, position: int, c_left: int, c_right: int) -> tuple:
    """Base weight c_left*omega_1 + omega_position + c_right*omega_l.

    The unit shift of a degree-k tower lands on fundamental coordinate k
    or k+1; shifts on the end nodes are absorbed into the c offsets.
    """
    base = [0] * ell
    base[0] += c_left
    base[ell - 1] += c_right
    if position is not None:
        base[position - 1] += 1
    return tuple(base)


def _tower_direction(ell: int) -> tuple:
    d = [0] * ell
    d[0] += 1
    d[ell - 1] += 1
    return tuple(d)


def default_model(
    ell: int,
    N: int = 0,
    q: float | QPoint = 0.5,
    *,
    c_left: int = 0,
    c_right: int = 0,
    eig_model: str = "qnumber",
    eig_offset: int = 1,
    m_start: int = 1,
) -> SpectrumModel:
    """The 2l-tower model with uniform offsets.

    Degree 0 and degree l contribute one unshifted tower each; every
    intermediate degree k contributes two towers whose bases are bumped
    by the unit fundamental weight at positions k and k+1.
    """
    check_rank(ell)
    qpt = q if isinstance(q, QPoint) else QPoint(float(q))
    direction = _tower_direction(ell)

    def tower(k, position):
        base = _interior_base(ell, position, c_left, c_right)
        fam = HighestWeightFamily(base=base, direction=direction)
        return TowerSpec(
            k=k,
            family=fam,
            eig_model=eig_model,
            eig_offset=eig_offset,
            m_start=m_start,
        )

    towers = [tower(0, None)]
    for k in range(1, ell):
        towers.append(tower(k, k if 2 <= k else None))
        towers.append(tower(k, k + 1 if k + 1 <= ell - 1 else None))
    towers.append(tower(ell, None))
    model = SpectrumModel(ell=ell, N=N, q=qpt, towers=tuple(towers))
    if len(model.towers) != 2 * ell:
        raise AssertionError("canonical model must have 2l towers")
    return model


def model_from_config(config: dict) -> SpectrumModel:
    """Build a model from the JSON wire form.

    Schema: {"ell": int, "N": int, "q": float, "towers": [tower...]} with
    tower = {"k", "base", "eig_model", "eig_offset", "m_start"}.  When
    "towers" is absent the default towers for the rank are used.
    """
    if not isinstance(config, dict):
        raise DomainError("model config must be a JSON object")
    try:
        ell = int(config["ell"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"model config needs an integer 'ell': {config!r}") from exc
    N = int(config.get("N", 0))
    qv = float(config.get("q", 0.5))
    qpt = QPoint(qv)
    if "towers" not in config:
        return default_model(ell, N=N, q=qpt)
    towers = []
    direction = _tower_direction(ell)
    for entry in config["towers"]:
        if not isinstance(entry, dict):
            raise DomainError(f"tower entry must be an object: {entry!r}")
        base = tuple(int(c) for c in entry.get("base", (0,) * ell))
        fam = HighestWeightFamily(base=base, direction=direction)
        towers.append(
            TowerSpec(
                k=int(entry.get("k", 0)),
                family=fam,
                eig_model=str(entry.get("eig_model", "qnumber")),
                eig_offset=int(entry.get("eig_offset", 1)),
                m_start=int(entry.get("m_start", 1)),
            )
        )
    if len(towers) != 2 * ell:
        raise DomainError(
            f"canonical model config needs {2 * ell} towers for rank {ell}, "
            f"got {len(towers)}"
        )
    return SpectrumModel(ell=ell, N=N, q=qpt, towers=tuple(towers))


def model_to_config(model: SpectrumModel) -> dict:
    return {
        "ell": model.ell,
        "N": model.N,
        "q": model.q.q,
        "towers": [
            {
                "k": t.k,
                "base": list(t.family.base),
                "eig_model": t.eig_model,
                "eig_offset": t.eig_offset,
                "m_start": t.m_start,
            }
            for t in model.towers
        ],
    }


# -- term streams ------------------------------------------------------


def _log_weight_fn(model: SpectrumModel, weight):
    """Resolve a weight selector to a callable (tower, m) -> log weight."""
    if callable(weight):
        return weight
    q = model.q.q
    ell = model.ell
    if weight == "qdim":
        return lambda t, m: log_quantum_dim(ell, t.family.weight_at(m), q)
    if weight == "qdim-inverse":
        return lambda t, m: log_quantum_dim(ell, t.family.weight_at(m), q, inverse=True)
    if weight == "classical":
        return lambda t, m: math.log(classical_dim(ell, t.family.weight_at(m)))
    if weight == "count":
        return lambda t, m: 0.0
    raise DomainError(f"unknown weight {weight!r}; expected one of {WEIGHTS}")


def _log_kernel(log_lam: float, s: float, kernel: str) -> float:
    if kernel == "pure":
        return -s * log_lam
    if kernel == "shifted":
        # log (lam^2 + 1) without forming lam^2
        if log_lam > 0:
            log_sq = 2.0 * log_lam + math.log1p(math.exp(-2.0 * log_lam))
        else:
            log_sq = math.log1p(math.exp(2.0 * log_lam))
        return -0.5 * s * log_sq
    raise DomainError(f"unknown kernel {kernel!r}; expected one of {KERNELS}")


def tower_log_terms(model: SpectrumModel, tower: TowerSpec, s: float, weight, kernel):
    """Yield (m, log term) for one tower, m from m_start upward."""
    logw = _log_weight_fn(model, weight)
    q = model.q.q
    m = tower.m_start
    while True:
        log_lam = tower.log_eigenvalue(q, m)
        yield m, logw(tower, m) + _log_kernel(log_lam, s, kernel)
        m += 1


# -- zeta --------------------------------------------------------------


@dataclass
class ZetaResult:
    value: float
    terms_used: int
    tail_estimate: float
    converged: bool
    per_tower_ratio: tuple = field(default_factory=tuple)

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "terms_used": self.terms_used,
            "tail_estimate": self.tail_estimate,
            "converged": self.converged,
            "per_tower_ratio": list(self.per_tower_ratio),
        }


def _check_zeta_args(s, tol, max_terms):
    if not (isinstance(s, (int, float)) and math.isfinite(s) and s > 0):
        raise DomainError(f"s must be a positive finite number: {s!r}")
    if not (tol > 0):
        raise DomainError(f"tolerance must be positive: {tol!r}")
    if not (isinstance(max_terms, int) and max_terms >= _WINDOW + 2):
        raise DomainError(f"max_terms too small: {max_terms!r}")


def zeta(
    model: SpectrumModel,
    s: float,
    weight="qdim",
    kernel: str = "shifted",
    tol: float = 1e-10,
    max_terms: int = 200_000,
) -> ZetaResult:
    """Weighted spectral zeta value at s.

    Each tower is summed until its consecutive-term ratios stabilize below
    one and the geometric tail bound drops under the (per tower) tolerance;
    the extrapolated tail is added to the reported value.  Ratios pinned at
    or above one signal s at or below the abscissa: the tower is reported
    non-convergent.  Terms whose ratios shrink below one without meeting
    the strict stability window still finish once a conservative tail
    bound (worst ratio of the last window) clears the tolerance.
    """
    _check_zeta_args(s, tol, max_terms)
    tol_tower = tol / len(model.towers)
    total = 0.0
    tail_total = 0.0
    used = 0
    converged = True
    last_ratios = []
    for tower in model.towers:
        partial = 0.0
        tail = 0.0
        ok = False
        prev_log = None
        window: deque = deque(maxlen=_WINDOW)
        ratio = math.nan
        for m, lt in tower_log_terms(model, tower, s, weight, kernel):
            used += 1
            term = math.exp(lt) if lt <= 700.0 else math.inf
            partial += term
            if prev_log is not None:
                window.append(math.exp(lt - prev_log))
            prev_log = lt
            if len(window) == _WINDOW:
                ratio = window[-1]
                rmax = max(window)
                rmin = min(window)
                stable = (rmax - rmin) <= RATIO_SPREAD * rmax
                if stable and ratio >= 1.0 - RATIO_SPREAD:
                    ok = False
                    break
                if rmax < 1.0 - RATIO_SPREAD:
                    sharp = stable and term / (1.0 - ratio) < tol_tower
                    safe = term * rmax / (1.0 - rmax) < tol_tower
                    if sharp or safe:
                        tail = term * ratio / (1.0 - ratio)
                        partial += tail
                        ok = True
                        break
            if m - tower.m_start + 1 >= max_terms:
                ok = False
                break
        total += partial
        tail_total += tail
        converged = converged and ok
        last_ratios.append(ratio)
    return ZetaResult(
        value=total,
        terms_used=used,
        tail_estimate=tail_total,
        converged=converged,
        per_tower_ratio=tuple(last_ratios),
    )


# -- spectral dimension estimate ----------------------------------------


def _stabilized_ratio(model, tower, s0, weight, kernel, max_terms):
    prev = None
    window: deque = deque(maxlen=_WINDOW)
    for m, lt in tower_log_terms(model, tower, s0, weight, kernel):
        if prev is not None:
            window.append(lt - prev)
            if len(window) == _WINDOW:
                rs = [math.exp(x) for x in window]
                rmax = max(rs)
                if rmax - min(rs) <= RATIO_SPREAD * rmax:
                    return math.fsum(rs) / _WINDOW
        prev = lt
        if m - tower.m_start + 1 >= max_terms:
            raise EstimationError(
                f"term ratios did not stabilize within {max_terms} terms "
                f"(tower k={tower.k}, probe s={s0})",
                diagnostics={
                    "tower_k": tower.k,
                    "probe_s": s0,
                    "last_ratios": [math.exp(x) for x in window],
                },
            )


def spectral_dimension_estimate(
    model: SpectrumModel,
    weight="qdim",
    kernel: str = "shifted",
    probe_s: float | None = None,
    max_terms: int = 200_000,
) -> float:
    """Estimate the abscissa of convergence from stabilized term ratios.

    At probe s0 every tower's consecutive-term ratio tends to q^(s0 - p)
    where p is the spectral dimension, so p = s0 - ln(r) / ln(q) with r
    the averaged stabilized ratio.  The default policy probes at s0 = 1,
    then refines once at s0 = (first estimate) + 1 so the final probe
    sits a unit above the abscissa.  Deterministic throughout.
    """
    lnq = math.log(model.q.q)

    def estimate_at(s0: float) -> float:
        ratios = [
            _stabilized_ratio(model, t, s0, weight, kernel, max_terms)
            for t in model.towers
        ]
        rbar = math.fsum(ratios) / len(ratios)
        return s0 - math.log(rbar) / lnq

    if probe_s is not None:
        if not (probe_s > 0):
            raise DomainError(f"probe s must be positive: {probe_s!r}")
        return estimate_at(float(probe_s))
    first = estimate_at(1.0)
    second_probe = first + 1.0 if first + 1.0 > 0 else 1.0
    return estimate_at(second_probe)


# -- residue -----------------------------------------------------------


@dataclass
class ResidueResult:
    value: float
    epsilons: tuple
    scaled_values: tuple
    richardson_diagonal: tuple

    def to_json_dict(self) -> dict:
        return {
            "value": self.value,
            "epsilons": list(self.epsilons),
            "scaled_values": list(self.scaled_values),
            "richardson_diagonal": list(self.richardson_diagonal),
        }


def residue_limit(
    model: SpectrumModel,
    p: float,
    weight="qdim",
    kernel: str = "shifted",
    epsilons=(0.2, 0.1, 0.05, 0.025, 0.0125),
    tol: float = 1e-12,
    max_terms: int = 200_000,
) -> ResidueResult:
    """Extrapolate eps * zeta(p + eps) to eps -> 0.

    The epsilon grid must halve at each step; Richardson elimination of
    the eps, eps^2, ... error terms is then exact on polynomial error
    models, so five levels leave a residual of order eps_min^5.  Any
    non-convergent zeta evaluation aborts the computation.
    """
    eps = tuple(float(e) for e in epsilons)
    if len(eps) < 2 or any(e <= 0 for e in eps):
        raise DomainError(f"need at least two positive epsilons: {eps}")
    for a, b in zip(eps, eps[1:]):
        if abs(a / b - 2.0) > 1e-12:
            raise DomainError(f"epsilons must halve at each step: {eps}")
    scaled = []
    for e in eps:
        res = zeta(model, p + e, weight=weight, kernel=kernel, tol=tol, max_terms=max_terms)
        if not res.converged:
            raise EstimationError(
                f"zeta did not converge at s = {p + e}",
                diagnostics={"s": p + e, "per_tower_ratio": res.per_tower_ratio},
            )
        scaled.append(e * res.value)
    rows = [[v] for v in scaled]
    for i in range(1, len(scaled)):
        for j in range(1, i + 1):
            factor = 2.0 ** j
            rows[i].append(
                (factor * rows[i][j - 1] - rows[i - 1][j - 1]) / (factor - 1.0)
            )
    diagonal = tuple(rows[i][i] for i in range(len(scaled)))
    return ResidueResult(
        value=diagonal[-1],
        epsilons=eps,
        scaled_values=tuple(scaled),
        richardson_diagonal=diagonal,
    )


# -- toy geometric tower -------------------------------------------------


def toy_model(ell: int, q: float | QPoint) -> SpectrumModel:
    """Single pure-exponential tower with eigenvalue exactly q^-m from m = 1.

    Used with toy_weight it reproduces the exactly geometric trace
    sum_m q^((s - 2l) m) whose closed form and residue are known.
    """
    check_rank(ell)
    qpt = q if isinstance(q, QPoint) else QPoint(float(q))
    direction = _tower_direction(ell)
    fam = HighestWeightFamily(base=(0,) * ell, direction=direction)
    tower = TowerSpec(k=0, family=fam, eig_model="pure", eig_offset=0, m_start=1)
    return SpectrumModel(ell=ell, N=0, q=qpt, towers=(tower,))


def toy_weight(ell: int, q: float | QPoint):
    """Exact exponential weight q^(-2 l m) as a log-space callable."""
    qv = q.q if isinstance(q, QPoint) else float(q)
    lnq = math.log(qv)
    slope = -2 * ell

    def logw(tower, m):
        return slope * m * lnq

    return logw


def toy_zeta_closed_form(ell: int, q: float, s: float) -> float:
    """Closed form q^(s - 2l) / (1 - q^(s - 2l)) of the toy trace."""
    r = float(q) ** (s - 2 * ell)
    if r >= 1.0:
        raise DomainError(f"toy zeta diverges at s = {s} for rank {ell}")
    return r / (1.0 - r)
