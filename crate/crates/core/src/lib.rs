//! Integral cohomology rings of moment-angle complexes `𝒵_K`, computed from the bigraded Koszul
//! model `R*(K)` and cross-checked against Hochster's formula and a cellular cochain model.

pub mod cellular;
pub mod cli;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod hochster;
pub mod json;
pub mod koszul;
pub mod linalg;
pub mod report;
pub mod simplicial;
pub mod verify;
pub mod vertex_set;

pub use engine::{betti_table, bigraded_cohomology, ring_presentation, BettiTable, EngineOptions, RingPresentation};
pub use simplicial::{parse_complex, SimplicialComplex};
