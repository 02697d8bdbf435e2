//! Betti numbers and Poincaré series.
//!
//! Squarefree monomial ideals are handled by Hochster's formula (after
//! polarization when needed). Monomial ideals of a quadratic Stanley–Reisner
//! ring are resolved through its generalized Koszul complex, one multidegree
//! at a time. The Poincaré series of `R_Δ` combines both.

mod hochster;
mod koszul_dual;
mod poincare;
mod table;
mod tor;

pub use hochster::{
    check_terai_yanagawa, hochster_betti, linear_steps, monomial_ideal_betti, polarize, Polarization,
    TyCheck,
};
pub use koszul_dual::{gk_basis, gk_differential, Color, FlagRing, GkDifferential, GkEntry, WordClass};
pub use poincare::{
    first_nonlinear_step, koszul_verdict, poincare_from_hilbert, poincare_r_delta, KoszulVerdict,
    TruncatedSeries,
};
pub use table::BettiTable;
pub use tor::{module_betti_over_gamma, module_betti_over_gamma_with, tor_dimension, SweepOptions};
