//! One-orbit cyclic subspace codes over F_{q^n}.
//!
//! The crate builds the field tower F_p ⊂ F_q ⊂ F_{q^n}, represents F_q-linear
//! subspaces of F_{q^n} in canonical reduced row-echelon form, enumerates the
//! scalar orbit Orb(S) = {αS : α ∈ F_{q^n}^*}, computes weight distributions
//! exhaustively and from closed forms, classifies full-weight-spectrum (FWS)
//! and r-FWS codes, and tests Frobenius isometries between orbit codes.

pub mod cli;
pub mod constructions;
mod error;
pub mod formulas;
mod fppoly;
pub mod gfext;
pub mod isometry;
pub mod oracles;
pub mod orbit;
pub mod report;
pub mod subspace;
pub mod verify;

pub use error::{Error, Result};
pub use gfext::{build_field, FieldElement, FieldSpec};
pub use orbit::{rfws_index, weight_distribution, OrbitCode, RfwsVerdict, WeightDistribution};
pub use subspace::Subspace;
