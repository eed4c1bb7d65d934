//! Graph similarity measurements and degree-law predictions.

mod compare;
mod ks;
mod msd;
mod powerlaw;
mod spectrum;
mod theory;

pub use compare::{compare, compare_restricted, restrict_to_new_nodes, MetricsReport};
pub use ks::{ks_statistic, DegreeCdf};
pub use msd::msd_sorted;
pub use powerlaw::{fit_powerlaw_exponent, fit_shifted_powerlaw_exponent, DEFAULT_K_MIN, MIN_TAIL};
pub use spectrum::{eigenvalues, spectral_distance, spectrum};
pub use theory::{theoretical_exponents, TheoreticalExponents};
