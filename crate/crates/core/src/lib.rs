//! Exact spectra of Laplacians on equal-rank homogeneous spaces `G/H`.
//!
//! Everything is computed in exact rational arithmetic on explicit root
//! system coordinates:
//!
//! - [`rootsys`]: classical root systems (A, B, C, D, G2), subsystems, Weyl vectors;
//! - [`weyl`]: Weyl groups as rational matrices, dominance, the multiplet transversal `C`;
//! - [`reps`]: Weyl dimensions, Freudenthal characters, virtual characters, Casimirs;
//! - [`homspace`]: eigenvalues, lowest levels, half-spin modules and spectrum enumeration;
//! - [`gkrs`]: verification of the multiplet character identity
//!   `V_λ ⊗ S⁺ - V_λ ⊗ S⁻ = Σ_c (-1)^c U_{c•λ}`;
//! - [`cli`]: space specifications, command dispatch and report rendering.
//!
//! Normalization: long roots have `(α, α) = 2`, so the su(2) Casimir of
//! spin `j` is `2j(j+1)`. Absolute eigenvalues differ from Killing-form
//! normalized ones by a constant factor per simple factor; ratios and all
//! multiplicities do not.

pub mod cli;
pub mod error;
pub mod gkrs;
pub mod homspace;
pub mod reps;
pub mod rootsys;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use weight::{Weight, Q};
