//! Gorenstein algebras built from flag simplicial complexes.
//!
//! Starting from a pure flag complex `Δ` on `n` vertices, this crate builds
//! the whiskered Bier ball `Γ`, the quadratic presentation of the Gorenstein
//! ring `R_Δ` in variables `x_i`, `y_i`, `z_F`, and tools to study it:
//! exact simplicial homology, Serre conditions, Gröbner bases under facet
//! compatible term orders, shelling search, Betti numbers via Hochster's
//! formula and a generalized Koszul complex, Poincaré series, and γ-vectors.

pub mod bier;
pub mod builtins;
pub mod complex;
pub mod error;
pub mod field;
pub mod gamma;
pub mod groebner;
pub mod homology;
pub mod par;
pub mod presentation;
pub mod resolutions;

pub use complex::{Face, SimplicialComplex};
pub use error::{Error, ErrorClass, Result};
pub use field::FieldSpec;
