"""Acceptance gate: one test per release criterion, one printed line each.

Each test prints `PASS criterion-N: ...` or `FAIL criterion-N: ...` with
output capture suspended, so the line is visible in any pytest run, then
asserts.  Tolerances and runtime budgets are pinned in the asserts.
"""

import itertools
import math
import shutil
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np

from qspec.modular import (
    DenseOperator,
    DiagonalOperator,
    commutator_split_defect,
    holder_exponents,
    shift_model,
    twisted_defect_scan,
    twisted_trace_check,
)
from qspec.oracle import char_at_k2rho, multiplicities_freudenthal, multiplicities_gt
from qspec.qdim import (
    HighestWeightFamily,
    classical_dim,
    family_slope,
    quantum_dim,
    quantum_dim_numeric,
    si_slope,
)
from qspec.spectrum import (
    default_model,
    residue_limit,
    spectral_dimension_estimate,
    toy_model,
    toy_weight,
    toy_zeta_closed_form,
    zeta,
)


def report(capsys, criterion: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {criterion}: {detail}"
    with capsys.disabled():
        print(f"\n{line}", flush=True)
    assert ok, line


def lattice(ells=(1, 2, 3)):
    for ell in ells:
        for lam in itertools.product(range(3), repeat=ell):
            yield ell, lam


def test_criterion_1_oracle_equivalence(capsys):
    """Exact product formula == character sum; both multiplicity methods agree."""
    start = time.time()
    count = 0
    for ell, lam in lattice():
        assert quantum_dim(ell, lam).exact == char_at_k2rho(ell, lam, sign=1), (ell, lam)
        assert multiplicities_gt(ell, lam) == multiplicities_freudenthal(ell, lam), (ell, lam)
        count += 1
    elapsed = time.time() - start
    ok = count == 39 and elapsed <= 120.0
    report(capsys, "criterion-1", ok, f"{count} weights, both oracles agree, {elapsed:.1f}s (budget 120s)")


def test_criterion_2_inverse_weight_equality(capsys):
    """Trace against the inverse modular weight equals the direct one, exactly."""
    start = time.time()
    for ell, lam in lattice():
        exact = quantum_dim(ell, lam).exact
        assert char_at_k2rho(ell, lam, sign=-1) == char_at_k2rho(ell, lam, sign=1), (ell, lam)
        assert exact.is_palindromic(), (ell, lam)
        assert quantum_dim(ell, tuple(reversed(lam))).exact == exact, (ell, lam)
    report(
        capsys, "criterion-2", True,
        f"sign flip, palindromicity and duality exact on 39 weights, {time.time() - start:.1f}s",
    )


def test_criterion_3_classical_limit(capsys):
    """Coefficient sums specialize to classical dimensions, exactly."""
    start = time.time()
    for ell, lam in lattice():
        qd = quantum_dim(ell, lam)
        assert qd.exact.coefficient_sum() == qd.classical_value, (ell, lam)
        assert qd.classical_value == multiplicities_gt(ell, lam).total(), (ell, lam)
    spots = (
        classical_dim(2, (1, 0)) == 3
        and classical_dim(2, (1, 1)) == 8
        and classical_dim(3, (1, 0, 1)) == 15
    )
    report(
        capsys, "criterion-3", spots,
        f"classical limits exact on 39 weights, spot dims 3/8/15, {time.time() - start:.1f}s",
    )


def test_criterion_4_growth_slopes(capsys):
    """Families Lambda + m (omega_1 + omega_l): exact slopes and numeric ratios."""
    start = time.time()
    q = 0.5
    worst = 0.0
    families = 0
    for ell in (2, 3, 4):
        direction = tuple(1 if j in (0, ell - 1) else 0 for j in range(ell))
        interior = list(range(2, ell)) or [None]
        for a, n_a, c1, c2 in itertools.product(
            interior, (0, 1), (0, 1, 2), (0, 1, 2)
        ):
            base = [0] * ell
            base[0] += c1
            base[-1] += c2
            if a is not None:
                base[a - 1] += n_a
            fam = HighestWeightFamily(base=tuple(base), direction=direction)
            families += 1
            assert family_slope(ell, fam) == -2 * ell, (ell, base)
            slopes = [si_slope(ell, fam, i) for i in range(1, ell + 1)]
            assert slopes[0] == -(ell + 1), (ell, base)
            assert all(s == -1 for s in slopes[1:]), (ell, base)
            assert sum(slopes) == -2 * ell, (ell, base)
            prev = quantum_dim_numeric(ell, fam.weight_at(30), q)
            for m in range(31, 36):
                cur = quantum_dim_numeric(ell, fam.weight_at(m), q)
                worst = max(worst, abs(math.log(cur / prev) / math.log(q) + 2 * ell))
                prev = cur
    elapsed = time.time() - start
    ok = worst < 1e-6 and elapsed <= 60.0
    report(
        capsys, "criterion-4", ok,
        f"{families} families, exact slopes, numeric dev {worst:.2e} < 1e-6, "
        f"{elapsed:.1f}s (budget 60s)",
    )


def test_criterion_5_spectral_dimension_and_residue(capsys):
    """Estimates hit 2l on the full grid; residues positive and stable; toy exact."""
    start = time.time()
    worst_est = 0.0
    worst_sym = 0.0
    for ell, q in itertools.product((2, 3), (0.3, 0.5, 0.8)):
        model = default_model(ell, 0, q)
        for kernel in ("shifted", "pure"):
            for weight in ("qdim", "qdim-inverse"):
                est = spectral_dimension_estimate(model, weight=weight, kernel=kernel)
                worst_est = max(worst_est, abs(est - 2 * ell))
            s = 2 * ell + 1.0
            za = zeta(model, s, weight="qdim", kernel=kernel)
            zb = zeta(model, s, weight="qdim-inverse", kernel=kernel)
            assert za.converged and zb.converged
            worst_sym = max(worst_sym, abs(za.value - zb.value) / abs(za.value))
    worst_step = 0.0
    for ell, q in [(2, 0.5), (3, 0.5), (2, 0.3), (2, 0.8)]:
        rr = residue_limit(default_model(ell, 0, q), 2 * ell, weight="qdim")
        assert rr.value > 0, (ell, q)
        d = rr.richardson_diagonal
        worst_step = max(worst_step, abs(d[-1] - d[-2]) / abs(d[-1]))
    worst_toy = 0.0
    for gap in (0.05, 0.3, 1.0, 3.0):
        val = zeta(toy_model(2, 0.5), 4 + gap, weight=toy_weight(2, 0.5),
                   kernel="pure", tol=1e-13).value
        ref = toy_zeta_closed_form(2, 0.5, 4 + gap)
        worst_toy = max(worst_toy, abs(val - ref) / ref)
    toy_res = residue_limit(toy_model(2, 0.5), 4, weight=toy_weight(2, 0.5),
                            kernel="pure", tol=1e-13)
    toy_res_err = abs(toy_res.value - 1.0 / math.log(2.0))
    elapsed = time.time() - start
    ok = (
        worst_est < 1e-3 and worst_sym < 1e-10 and worst_step < 1e-4
        and worst_toy < 1e-12 and toy_res_err < 1e-8 and elapsed <= 60.0
    )
    report(
        capsys, "criterion-5", ok,
        f"estimate dev {worst_est:.2e} < 1e-3, weight symmetry {worst_sym:.2e} < 1e-10, "
        f"residue step {worst_step:.2e} < 1e-4, toy {worst_toy:.2e} < 1e-12, "
        f"toy residue {toy_res_err:.2e} < 1e-8, {elapsed:.1f}s (budget 60s)",
    )


def test_criterion_6_plain_trace_contrast(capsys):
    """The unweighted trace sees dimension zero: finite zeta already at s=0.1."""
    start = time.time()
    model = default_model(2, 0, 0.5)
    res = zeta(model, 0.1, weight="classical", tol=1e-8)
    est = spectral_dimension_estimate(model, weight="classical")
    ok = res.converged and abs(est) < 0.05
    report(
        capsys, "criterion-6", ok,
        f"zeta(0.1) converged={res.converged}, estimate {est:.2e} < 0.05, "
        f"{time.time() - start:.1f}s",
    )


def test_criterion_7_modular_machinery(capsys):
    """Splitting identity, conjugate exponents, defect decay, trace twist."""
    start = time.time()
    worst = 0.0
    for i in range(20):
        rng = np.random.default_rng(31337 + i)
        size = int(rng.integers(50, 201))
        k = int(rng.integers(2, 5))
        s = float(k) * float(rng.uniform(0.05, 0.95))
        d = DiagonalOperator(0.5 ** -np.arange(1, size + 1, dtype=float))
        b = DenseOperator(rng.uniform(-1.0, 1.0, size=(size, size)))
        worst = max(worst, commutator_split_defect(d, b, s, k))
    holder_ok = all(
        Fraction(1) / pj + Fraction(1) / qj == 1
        for k in range(1, 7)
        for sval in (Fraction(1, 2), Fraction(2 * k - 1, 2))
        if 0 < sval / k < 1
        for pj, qj in holder_exponents(sval, k)
    )
    model = shift_model(120, 0.5, 4.0)
    svals = [4.0 + 0.5 * 2 ** -i for i in range(4)]
    defects = [v for _, v in twisted_defect_scan(model, svals)]
    decreasing = all(a > b for a, b in zip(defects, defects[1:]))
    gap_far = abs(np.subtract(*twisted_trace_check(model, svals[0])))
    gap_near = abs(np.subtract(*twisted_trace_check(model, svals[-1])))
    ok = worst < 1e-12 and holder_ok and decreasing and gap_near < gap_far
    report(
        capsys, "criterion-7", ok,
        f"20 splittings max defect {worst:.2e} < 1e-12, conjugate pairs exact, "
        f"defects {defects[0]:.3f}..{defects[-1]:.3f} decreasing, "
        f"trace gap shrinks {gap_far:.3f} -> {gap_near:.3f}, {time.time() - start:.1f}s",
    )


def test_criterion_8_deterministic_verify(capsys):
    """Full self-check profile passes twice with byte-identical reports."""
    exe = shutil.which("qspec")
    cmd = [exe, "verify", "--profile", "full"] if exe else [
        sys.executable, "-m", "qspec", "verify", "--profile", "full"
    ]
    outputs = []
    times = []
    for _ in range(2):
        t0 = time.time()
        proc = subprocess.run(cmd, capture_output=True, timeout=600)
        times.append(time.time() - t0)
        assert proc.returncode == 0, proc.stdout.decode() + proc.stderr.decode()
        outputs.append(proc.stdout)
    ok = outputs[0] == outputs[1] and max(times) <= 300.0
    report(
        capsys, "criterion-8", ok,
        f"two full runs byte-identical, exit 0, {times[0]:.0f}s and {times[1]:.0f}s "
        f"(budget 300s each)",
    )
