"""Numerical tools for heunlame"""

from .specfun import (
    gamma,
    hyp2f1,
    hyp2f1_regularized,
    closed_form_F,
    elliptic_K,
    jacobi,
)

from .heun import (
    HeunParams,
    Prefactor,
    SeriesGroup,
    homotopy,
    moebius,
    heun_ode_residual,
    reduce_to_hypergeometric,
)

from .recurrence import (
    ThreeTermCoeffs,
    forward_solve,
    detect_truncation,
    characteristic_roots,
    continued_fraction,
    backward_minimal_solve,
    antidiagonal_similarity_check,
)

from .expansions import (
    SeriesExpansion,
    group_coefficients,
    evaluate,
    evaluate_jet,
    convergence_region,
)

from .darboux import (
    LameProblem,
    Potential,
    EigenfunctionSpec,
    heun_to_darboux,
    darboux_to_heun,
    potential_to_heun,
    classify_finite_series,
    spectrum,
    eigenfunction,
    infinite_eigenfunction,
    degeneracy_pairs,
    degenerate_indices,
    two_term_energies,
    lame_power_table,
    generation_gap,
    symmetry_map,
    parity_period_verify,
    scale_energy,
)

from .verify import run_suites

__all__ = [
    'gamma',
    'hyp2f1',
    'hyp2f1_regularized',
    'closed_form_F',
    'elliptic_K',
    'jacobi',
    'HeunParams',
    'Prefactor',
    'SeriesGroup',
    'homotopy',
    'moebius',
    'heun_ode_residual',
    'reduce_to_hypergeometric',
    'ThreeTermCoeffs',
    'forward_solve',
    'detect_truncation',
    'characteristic_roots',
    'continued_fraction',
    'backward_minimal_solve',
    'antidiagonal_similarity_check',
    'SeriesExpansion',
    'group_coefficients',
    'evaluate',
    'evaluate_jet',
    'convergence_region',
    'LameProblem',
    'Potential',
    'EigenfunctionSpec',
    'heun_to_darboux',
    'darboux_to_heun',
    'potential_to_heun',
    'classify_finite_series',
    'spectrum',
    'eigenfunction',
    'infinite_eigenfunction',
    'degeneracy_pairs',
    'degenerate_indices',
    'two_term_energies',
    'lame_power_table',
    'generation_gap',
    'symmetry_map',
    'parity_period_verify',
    'scale_energy',
    'run_suites',
]
