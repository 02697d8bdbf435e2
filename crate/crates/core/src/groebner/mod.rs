//! Polynomials, term orders, Buchberger's algorithm, and the link between
//! quadratic Gröbner bases of `R_Δ` and shellings of `Δ`.

mod monomial;
pub mod buchberger;
pub mod order;
pub mod poly;
pub mod shelling;

pub use buchberger::{buchberger, hilbert_function_by_normal_forms, GbResult};
pub use monomial::Monomial;
pub use order::{compatible_term_order, TermOrder};
pub use poly::{reduce, s_polynomial, Polynomial};
pub use shelling::{
    find_shelling, has_quadratic_gb, is_shelling_order, quadratic_binomials, quadratic_gb_test,
    ShellingOutcome, Strategy,
};
