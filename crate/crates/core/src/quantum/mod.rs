//! Quantum anharmonic oscillators and gases of anharmonic modes: exact
//! ladder matrix elements, perturbative and diagonalized level shifts, the
//! quadratic level formula, single-mode sums with positivity windows, and
//! massless/massive energy densities including their termwise solution.

mod energy;
mod ladder;
mod modes;
mod perturbation;
mod series;
mod spectrum;

pub use energy::{
    denominator_replaced_integrand, energy_density_massive, energy_density_massive_corrected,
    energy_density_massless, massive_integral, massless_integral, massless_integrand, stefan_boltzmann,
    stefan_boltzmann_report, CutoffConvention, EnergyDensityOptions, Radicand, ENERGY_DENSITY_THRESHOLD,
};
pub use ladder::{position_power_matrix, LadderBasisOperator};
pub use modes::{
    dimensionless_couplings, heaviside, mode_energy_numerator, mode_mean_occupancy_energy, mode_partition_sum,
    DimensionlessCouplings,
};
pub use perturbation::{
    diagonalized_levels, generic_rspt_shifts, hamiltonian_matrix, interaction_matrix, paper_literal_shifts,
    perturbative_shift, reduced_couplings, second_order_levels, shift_value, with_reduced_couplings, Order,
    PerturbationMode, PerturbationOrder, Shifts, BASIS_MARGIN, SHIFT_THRESHOLD,
};
pub use series::{
    denominator_replaced_quadrature, series_energy_density, series_lower_limit, series_report, series_sum,
    series_term, series_term_reports, whittaker_series_term, SeriesSum, SeriesTerm, TermForm, MAX_SERIES_A_B,
    SERIES_THRESHOLD, TERM_THRESHOLD,
};
pub use spectrum::{spectrum_coeffs, SpectrumCoeffs};
