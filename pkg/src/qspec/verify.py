r"""Named self-verification checks behind `qspec verify`.

Each check returns (ok, detail) and is fully deterministic: fixed
lattices, fixed parameter grids, seeded generators, no timing output.
The quick profile trims the grids; the full profile runs the
acceptance-grade versions.  A crash inside a check is reported as a
failure of that check rather than aborting the run.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .modular import (
    DenseOperator,
    DiagonalOperator,
    commutator_split_defect,
    holder_exponents,
    shift_model,
    twisted_defect_scan,
    twisted_trace_check,
)
from .oracle import char_at_k2rho, multiplicities_freudenthal, multiplicities_gt
from .qdim import (
    HighestWeightFamily,
    classical_dim,
    family_slope,
    quantum_dim,
    quantum_dim_numeric,
    si_slope,
)
from .qpoly import LaurentPoly, exact_div, qnum
from .roots import (
    positive_roots,
    rho_weight,
    simple_root_as_weight,
    two_rho_pairing,
    weight_dot,
)
from .spectrum import (
    default_model,
    residue_limit,
    spectral_dimension_estimate,
    toy_model,
    toy_weight,
    toy_zeta_closed_form,
    zeta,
)

__all__ = ["run_profile", "PROFILES", "check_names"]

PROFILES = ("quick", "full")


def _rel(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


def _lattice(profile):
    ells = (1, 2) if profile == "quick" else (1, 2, 3)
    for ell in ells:
        for coords in itertools.product(range(3), repeat=ell):
            yield ell, coords


# -- exact layer ---------------------------------------------------------


def check_root_pairings(profile):
    for ell in range(1, 7):
        if len(positive_roots(ell)) != ell * (ell + 1) // 2:
            return False, f"positive root count wrong at rank {ell}"
        for i in range(1, ell + 1):
            if two_rho_pairing(simple_root_as_weight(ell, i)) != 2:
                return False, f"(2rho, alpha_{i}) != 2 at rank {ell}"
    # closed coefficient formula against the exact Gram matrix
    for ell in (1, 2, 3, 4):
        rho = rho_weight(ell)
        samples = [rho, tuple(2 if j == 0 else 0 for j in range(ell)),
                   tuple(3 if j == ell - 1 else 1 for j in range(ell))]
        for mu in samples:
            if Fraction(two_rho_pairing(mu)) != 2 * weight_dot(rho, mu):
                return False, f"Gram mismatch at rank {ell} weight {mu}"
    return True, "ranks 1..6"


def check_qnum_closed_form(profile):
    worst = 0.0
    for q in (0.2, 0.55, 0.9):
        for x in (0, 1, 2, 3, 5, 8, 13, 21, 34, 55):
            val = qnum(x).evaluate(q)
            ref = 0.0 if x == 0 else (q ** -x - q ** x) / (q ** -1 - q)
            worst = max(worst, abs(val - ref) if x == 0 else _rel(val, ref))
    return worst <= 1e-12, f"max_rel={worst:.3e}"


def check_laurent_roundtrip(profile):
    a = qnum(4) * qnum(3) + LaurentPoly.monomial(-1, -2)
    b = qnum(2) + LaurentPoly.one()
    for p in (a, b, a * b, LaurentPoly.zero()):
        if LaurentPoly.from_json_dict(p.to_json_dict()) != p:
            return False, "serialization round trip failed"
        if p.bar().bar() != p:
            return False, "bar involution is not an involution"
    if exact_div(a * b, b) != a:
        return False, "exact division round trip failed"
    if exact_div(qnum(4), qnum(2)) != LaurentPoly({-2: 1, 2: 1}):
        return False, "[4] / [2] != q^-2 + q^2"
    return True, "ok"


def check_oracle_equivalence(profile):
    count = 0
    for ell, lam in _lattice(profile):
        if quantum_dim(ell, lam).exact != char_at_k2rho(ell, lam, sign=1):
            return False, f"mismatch at rank {ell} weight {lam}"
        count += 1
    return True, f"{count} weights"


def check_multiplicity_methods(profile):
    count = 0
    for ell, lam in _lattice(profile):
        if multiplicities_gt(ell, lam) != multiplicities_freudenthal(ell, lam):
            return False, f"table mismatch at rank {ell} weight {lam}"
        count += 1
    return True, f"{count} weights"


def check_bar_invariance(profile):
    for ell, lam in _lattice(profile):
        exact = quantum_dim(ell, lam).exact
        if not exact.is_palindromic():
            return False, f"not palindromic at rank {ell} weight {lam}"
        if char_at_k2rho(ell, lam, sign=-1) != char_at_k2rho(ell, lam, sign=1):
            return False, f"inverse-weight trace differs at rank {ell} weight {lam}"
        if quantum_dim(ell, tuple(reversed(lam))).exact != exact:
            return False, f"dual weight differs at rank {ell} weight {lam}"
    return True, "palindromic, inverse-weight and dual all agree"


def check_classical_limit(profile):
    for ell, lam in _lattice(profile):
        qd = quantum_dim(ell, lam)
        total = multiplicities_gt(ell, lam).total()
        if not qd.exact.coefficient_sum() == qd.classical_value == total:
            return False, f"classical mismatch at rank {ell} weight {lam}"
    spots = [(1, (1,), 2), (1, (2,), 3), (2, (1, 0), 3), (2, (1, 1), 8)]
    if profile == "full":
        spots.append((3, (1, 0, 1), 15))
    for ell, lam, want in spots:
        if classical_dim(ell, lam) != want:
            return False, f"dim{lam} != {want}"
    return True, "coefficient sums match dimensions"


# -- growth slopes -------------------------------------------------------


def _prop_families(ell):
    """Two-ended linear families with at most one interior unit."""
    direction = tuple(1 if j in (0, ell - 1) else 0 for j in range(ell))
    bases = set()
    for c1, c2 in itertools.product((0, 1, 2), repeat=2):
        base = [0] * ell
        base[0], base[-1] = c1, c2
        bases.add(tuple(base))
        for a in range(2, ell):
            bumped = list(base)
            bumped[a - 1] += 1
            bases.add(tuple(bumped))
    return [HighestWeightFamily(base=b, direction=direction) for b in sorted(bases)]


def check_growth_slopes(profile):
    ells = (2, 3) if profile == "quick" else (2, 3, 4)
    q = 0.5
    lnq = math.log(q)
    worst = 0.0
    for ell in ells:
        families = _prop_families(ell)
        for fam in families:
            if family_slope(ell, fam) != -2 * ell:
                return False, f"family slope wrong at rank {ell} base {fam.base}"
            slopes = [si_slope(ell, fam, i) for i in range(1, ell + 1)]
            if slopes[0] != -(ell + 1) or any(s != -1 for s in slopes[1:]):
                return False, f"row slopes wrong at rank {ell} base {fam.base}"
            if sum(slopes) != -2 * ell:
                return False, f"row slopes do not sum at rank {ell}"
        numeric_fams = families if profile == "full" else families[:1]
        if profile == "quick" and ell == 3:
            numeric_fams = []
        for fam in numeric_fams:
            prev = quantum_dim_numeric(ell, fam.weight_at(30), q)
            for m in range(31, 36):
                cur = quantum_dim_numeric(ell, fam.weight_at(m), q)
                slope = math.log(cur / prev) / lnq
                worst = max(worst, abs(slope + 2 * ell))
                prev = cur
    return worst <= 1e-6, f"max_numeric_dev={worst:.3e}"


# -- spectral layer ------------------------------------------------------


def check_toy_zeta(profile):
    ell, q = 2, 0.5
    model = toy_model(ell, q)
    w = toy_weight(ell, q)
    gaps = (0.05, 1.0) if profile == "quick" else (0.05, 0.3, 1.0, 3.0)
    worst = 0.0
    for gap in gaps:
        s = 2 * ell + gap
        res = zeta(model, s, weight=w, kernel="pure", tol=1e-13)
        if not res.converged:
            return False, f"toy zeta did not converge at s={s}"
        worst = max(worst, _rel(res.value, toy_zeta_closed_form(ell, q, s)))
    return worst <= 1e-12, f"max_rel={worst:.3e}"


def check_toy_residue(profile):
    qs = (0.5,) if profile == "quick" else (0.3, 0.5, 0.8)
    ell = 2
    worst = 0.0
    for q in qs:
        rr = residue_limit(
            toy_model(ell, q), p=2 * ell, weight=toy_weight(ell, q),
            kernel="pure", tol=1e-13,
        )
        worst = max(worst, abs(rr.value - 1.0 / math.log(1.0 / q)))
    return worst <= 1e-8, f"max_abs={worst:.3e}"


def check_spectral_dimension(profile):
    if profile == "quick":
        combos = [(2, 0.5, "shifted", "qdim")]
    else:
        combos = [
            (ell, q, kern, w)
            for ell in (2, 3)
            for q in (0.3, 0.5, 0.8)
            for kern in ("shifted", "pure")
            for w in ("qdim", "qdim-inverse")
        ]
    worst = 0.0
    for ell, q, kern, w in combos:
        est = spectral_dimension_estimate(default_model(ell, 0, q), weight=w, kernel=kern)
        worst = max(worst, abs(est - 2 * ell))
    return worst <= 1e-3, f"max_dev={worst:.3e}"


def check_weight_symmetry(profile):
    combos = [(2, 0.5)] if profile == "quick" else [
        (ell, q) for ell in (2, 3) for q in (0.3, 0.5, 0.8)
    ]
    worst = 0.0
    for ell, q in combos:
        model = default_model(ell, 0, q)
        s = 2 * ell + 1.0
        za = zeta(model, s, weight="qdim")
        zb = zeta(model, s, weight="qdim-inverse")
        if not (za.converged and zb.converged):
            return False, f"zeta did not converge at rank {ell}, q={q}"
        worst = max(worst, _rel(za.value, zb.value))
    return worst <= 1e-10, f"max_rel={worst:.3e}"


def check_residue_limit(profile):
    if profile == "quick":
        configs = [(2, 0.5, "shifted")]
    else:
        configs = [
            (2, 0.5, "shifted"), (2, 0.5, "pure"),
            (3, 0.5, "shifted"), (3, 0.5, "pure"),
            (2, 0.3, "shifted"), (2, 0.8, "shifted"),
        ]
    worst_step = 0.0
    for ell, q, kern in configs:
        rr = residue_limit(default_model(ell, 0, q), p=2 * ell, weight="qdim", kernel=kern)
        if not rr.value > 0:
            return False, f"nonpositive residue at rank {ell}, q={q}, {kern}"
        step = _rel(rr.richardson_diagonal[-1], rr.richardson_diagonal[-2])
        worst_step = max(worst_step, step)
    return worst_step <= 1e-4, f"max_step={worst_step:.3e}"


def check_plain_trace_contrast(profile):
    model = default_model(2, 0, 0.5)
    res = zeta(model, 0.1, weight="classical", tol=1e-8)
    if not res.converged:
        return False, "plain-dimension zeta did not converge at s=0.1"
    est = spectral_dimension_estimate(model, weight="classical")
    return abs(est) < 0.05, f"estimate={est:.3e}"


# -- modular layer -------------------------------------------------------


def check_commutator_splitting(profile):
    n = 5 if profile == "quick" else 20
    worst = 0.0
    for i in range(n):
        rng = np.random.default_rng(7151 + i)
        size = int(rng.integers(50, 201))
        k = int(rng.integers(2, 5))
        s = float(k) * float(rng.uniform(0.05, 0.95))
        d = DiagonalOperator(0.5 ** -np.arange(1, size + 1, dtype=float))
        b = DenseOperator(rng.uniform(-1.0, 1.0, size=(size, size)))
        worst = max(worst, commutator_split_defect(d, b, s, k))
    return worst <= 1e-12, f"max_defect={worst:.3e}"


def check_holder_exponents(profile):
    for k in range(1, 7):
        for s in (Fraction(1, 3), Fraction(2 * k - 1, 2), Fraction(k, 2)):
            if not 0 < s / k < 1:
                continue
            for pj, qj in holder_exponents(s, k):
                if Fraction(1) / pj + Fraction(1) / qj != 1:
                    return False, f"conjugate identity fails at k={k}, s={s}"
    return True, "exact conjugate pairs up to k=6"


_SCAN_S = tuple(4.0 + 0.5 * 2 ** -i for i in range(4))


def check_twisted_defect_decay(profile):
    model = shift_model(120, 0.5, 4.0)
    scan = twisted_defect_scan(model, _SCAN_S)
    values = [v for _, v in scan]
    ok = all(a > b for a, b in zip(values, values[1:]))
    return ok, f"defects={','.join(format(v, '.3e') for v in values)}"


def check_twisted_trace_consistency(profile):
    model = shift_model(120, 0.5, 4.0)
    scan = dict(twisted_defect_scan(model, _SCAN_S))
    gaps = {}
    for s in _SCAN_S:
        lhs, rhs = twisted_trace_check(model, s)
        gaps[s] = abs(lhs - rhs)
        if _rel(gaps[s], scan[s]) > 1e-8:
            return False, f"gap and defect disagree at s={s}"
    if not gaps[_SCAN_S[-1]] < gaps[_SCAN_S[0]]:
        return False, "trace gap does not shrink toward the abscissa"
    return True, "gap matches defect and shrinks"


_CHECKS = (
    ("root-pairings", check_root_pairings, PROFILES),
    ("qnum-closed-form", check_qnum_closed_form, PROFILES),
    ("laurent-roundtrip", check_laurent_roundtrip, PROFILES),
    ("oracle-equivalence", check_oracle_equivalence, PROFILES),
    ("multiplicity-methods", check_multiplicity_methods, PROFILES),
    ("bar-invariance", check_bar_invariance, PROFILES),
    ("classical-limit", check_classical_limit, PROFILES),
    ("growth-slopes", check_growth_slopes, PROFILES),
    ("toy-zeta-closed-form", check_toy_zeta, PROFILES),
    ("toy-residue", check_toy_residue, PROFILES),
    ("spectral-dimension", check_spectral_dimension, PROFILES),
    ("weight-symmetry", check_weight_symmetry, PROFILES),
    ("residue-limit", check_residue_limit, PROFILES),
    ("plain-trace-contrast", check_plain_trace_contrast, ("full",)),
    ("commutator-splitting", check_commutator_splitting, PROFILES),
    ("holder-exponents", check_holder_exponents, PROFILES),
    ("twisted-defect-decay", check_twisted_defect_decay, PROFILES),
    ("twisted-trace-consistency", check_twisted_trace_consistency, PROFILES),
)


def check_names(profile: str) -> list:
    return [name for name, _, profs in _CHECKS if profile in profs]


def run_profile(profile: str) -> tuple:
    """Run every check in the profile; returns (report text, all passed)."""
    if profile not in PROFILES:
        raise DomainError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    lines = [f"profile: {profile}"]
    passed = 0
    names = []
    for name, fn, profs in _CHECKS:
        if profile not in profs:
            continue
        names.append(name)
        try:
            ok, detail = fn(profile)
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"exception: {type(exc).__name__}: {exc}"
        passed += ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    lines.append(f"RESULT {'PASS' if passed == len(names) else 'FAIL'} {passed}/{len(names)}")
    return "\n".join(lines) + "\n", passed == len(names)
