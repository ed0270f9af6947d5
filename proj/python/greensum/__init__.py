"""Green's functions, eigenvalue sum rules and SUSY partner potentials for
1-D Schrodinger operators."""

from ._greensum import (
    bessel_i,
    bessel_i_scaled,
    bessel_identity,
    bessel_k,
    bessel_k_scaled,
    box_alternating_f1,
    box_eigenfunction,
    box_g,
    box_gamma,
    box_greens,
    box_identity_residual,
    box_series,
    check_ids,
    dawson,
    erfc,
    erfcx,
    figure_data,
    gamma,
    integrate,
    integrate_to_infinity,
    lax_diag,
    lax_integral,
    oscillator_suite,
    partner_ground_state,
    partner_potential,
    powerlaw_eigenvalue_sums,
    powerlaw_greens_even,
    powerlaw_greens_odd,
    run_check,
    run_checks,
    separable_double_integral,
    soliton_potential,
    solve_spectrum,
    spherical_j1,
    sum_alternating,
    sum_even,
    sum_odd,
    wkb_eigenvalue,
)

__version__ = "0.1.0"
