//! Exact linear algebra over ℤ.

mod cohomology;
mod matrix;
mod snf;

pub use cohomology::{cohomology_at, cohomology_group, AbelianGroup, CohomologyData, Generator, Order};
pub use matrix::{add_scaled, axpy, IntMatrix, SparseVec};
pub use snf::{canonical_invariants, invariant_factors, rank, smith_normal_form, solve, solve_with, SnfResult};
