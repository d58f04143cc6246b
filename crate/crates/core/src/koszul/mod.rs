//! The Koszul differential graded algebra `Λ[u_1..u_m] ⊗ ℤ[K]` with `du_i = v_i`, and its finite
//! quotient `R*(K)`.

mod algebra;
mod chain;
mod homotopy;
mod monomial;

pub use algebra::{
    basis, basis_in, basis_with_support, differential, differential_monomial, differential_unchecked,
    homogeneous_bidegree, multiply, multiply_chains, restrict_to_subcomplex, Chain,
};
pub use chain::ChainElement;
pub use homotopy::{
    e_basis, e_differential, e_differential_monomial, e_monomial, e_multiply, e_multiply_chains, homotopy,
    homotopy_defect, homotopy_monomial, iota, rho, survives, EChain,
};
pub use monomial::{Bidegree, EMonomial, Monomial};
