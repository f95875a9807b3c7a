"""qspec: exact quantum dimensions and spectral models on quantum flag spaces.

The package has three layers:

* exact combinatorics — root systems (:mod:`qspec.roots`), Laurent
  polynomials in one variable (:mod:`qspec.qpoly`), quantum Weyl
  dimension formulas (:mod:`qspec.qdim`) and two independent weight
  multiplicity oracles (:mod:`qspec.oracle`);
* numeric spectral models — eigenvalue towers, zeta sums, spectral
  dimension estimates and residue extrapolation (:mod:`qspec.spectrum`);
* finite modular models — commutator splitting and twisted trace
  checks for shift operators against growing diagonal weights
  (:mod:`qspec.modular`).

The ``qspec`` command line tool (:mod:`qspec.cli`) exposes all of it,
including a deterministic self-verification suite (:mod:`qspec.verify`).
"""

from .errors import (
    DomainError,
    EstimationError,
    NonExactDivisionError,
    ResourceLimitError,
)
from .roots import (
    PositiveRoot,
    RootSystem,
    cartan_matrix,
    fundamental_gram,
    pair_weight_root,
    positive_roots,
    rho_pairing,
    root_as_weight,
    simple_root_as_weight,
    two_rho_pairing,
    weight_dot,
)
from .qpoly import LaurentPoly, QPoint, bar_involution, exact_div, qnum
from .qdim import (
    HighestWeightFamily,
    QuantumDimension,
    classical_dim,
    family_slope,
    log_quantum_dim,
    quantum_dim,
    quantum_dim_numeric,
    si_slope,
)
from .oracle import (
    WeightMultiplicityTable,
    char_at_k2rho,
    gt_patterns,
    multiplicities_freudenthal,
    multiplicities_gt,
    resolve_pattern_cap,
)
from .spectrum import (
    ResidueResult,
    SpectrumModel,
    TowerSpec,
    ZetaResult,
    default_model,
    model_from_config,
    model_to_config,
    residue_limit,
    spectral_dimension_estimate,
    toy_model,
    toy_weight,
    toy_zeta_closed_form,
    zeta,
)
from .modular import (
    DenseOperator,
    DiagonalOperator,
    ModularModel,
    commutator_split_defect,
    holder_exponents,
    shift_model,
    twisted_defect_scan,
    twisted_trace_check,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EstimationError",
    "NonExactDivisionError",
    "ResourceLimitError",
    "PositiveRoot",
    "RootSystem",
    "cartan_matrix",
    "fundamental_gram",
    "pair_weight_root",
    "positive_roots",
    "rho_pairing",
    "root_as_weight",
    "simple_root_as_weight",
    "two_rho_pairing",
    "weight_dot",
    "LaurentPoly",
    "QPoint",
    "bar_involution",
    "exact_div",
    "qnum",
    "HighestWeightFamily",
    "QuantumDimension",
    "classical_dim",
    "family_slope",
    "log_quantum_dim",
    "quantum_dim",
    "quantum_dim_numeric",
    "si_slope",
    "WeightMultiplicityTable",
    "char_at_k2rho",
    "gt_patterns",
    "multiplicities_freudenthal",
    "multiplicities_gt",
    "resolve_pattern_cap",
    "ResidueResult",
    "SpectrumModel",
    "TowerSpec",
    "ZetaResult",
    "default_model",
    "model_from_config",
    "model_to_config",
    "residue_limit",
    "spectral_dimension_estimate",
    "toy_model",
    "toy_weight",
    "toy_zeta_closed_form",
    "zeta",
    "DenseOperator",
    "DiagonalOperator",
    "ModularModel",
    "commutator_split_defect",
    "holder_exponents",
    "shift_model",
    "twisted_defect_scan",
    "twisted_trace_check",
    "__version__",
]
