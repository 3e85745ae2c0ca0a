//! One-dimensional square wells and the two-particle state built from them.
//!
//! Units are natural (`ħ = m = 1`) unless a [`WellSpec`] says otherwise.
//! Wavefunctions are real stationary states, so inner products are plain
//! real integrals.

mod eigen;
mod pair;
mod quadrature;
mod sweep;
mod well;

pub use eigen::{
    debroglie_wavelength, eigenstate, finite_well_bound_states, infinite_well_eigenstate,
    interference_term, overlap, uncertainty_product, Eigenstate,
};
pub use pair::{probability_decomposition_residual, Grid, Symmetry, TwoParticleState};
pub use quadrature::Quadrature;
pub use sweep::{separation_sweep, write_csv, SweepRow, CSV_HEADER};
pub use well::{Depth, WellSpec};
