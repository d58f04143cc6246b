//! Cohomology `ker(d_out) / im(d_in)` of a two-matrix fragment of a cochain complex.
//!
//! ```text
//!        d_in          d_out
//!  Z^p ---------> Z^n ---------> Z^q
//!
//!  ker(d_out) = V_out[:, r..n] Z^k        (r = rank d_out, k = n - r)
//!  im(d_in)   = V_out[:, r..n] A' Z^p     (A' = rows r..n of V_out^{-1} d_in)
//!  H          = Z^k / A' Z^p  ≅  ⊕ Z/d_i ⊕ Z^{k - s}   via SNF of A'
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{axpy, IntMatrix, SparseVec};
use super::snf::{canonical_invariants, invariant_factors, smith_normal_form};
use crate::error::LinalgError;

/// Finitely generated abelian group `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | ... | t_k`, `t_1 ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    #[serde(with = "crate::json::bigint_vec")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    /// Builds the canonical form from arbitrary cyclic orders (ones are dropped).
    pub fn new(rank: usize, orders: Vec<BigInt>) -> Self {
        let torsion = canonical_invariants(orders).into_iter().filter(|d| !d.is_one()).collect();
        AbelianGroup { rank, torsion }
    }

    pub fn zero() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        AbelianGroup::new(self.rank + other.rank, orders)
    }
}

impl std::iter::Sum for AbelianGroup {
    fn sum<I: Iterator<Item = AbelianGroup>>(iter: I) -> Self {
        let mut rank = 0;
        let mut orders = Vec::new();
        for g in iter {
            rank += g.rank;
            orders.extend(g.torsion);
        }
        AbelianGroup::new(rank, orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Additive order of a generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Infinite,
    Finite(BigInt),
}

impl Order {
    /// Reduces a coordinate into `[0, d)` for torsion generators.
    pub fn reduce(&self, c: BigInt) -> BigInt {
        match self {
            Order::Infinite => c,
            Order::Finite(d) => c.mod_floor(d),
        }
    }
}

/// One cyclic summand: a representative cocycle and the linear functional that reads off
/// its coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator<B: Ord = usize> {
    pub order: Order,
    pub representative: BTreeMap<B, BigInt>,
    pub functional: BTreeMap<B, BigInt>,
}

/// Cohomology group together with chosen generators.
///
/// The functional of generator `l` evaluates to `δ_{kl}` on representative `k` (mod the order) and
/// vanishes on coboundaries, so it expresses any cocycle in the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyData<B: Ord = usize> {
    pub group: AbelianGroup,
    pub generators: Vec<Generator<B>>,
}

impl<B: Ord + Clone> CohomologyData<B> {
    pub fn zero() -> Self {
        CohomologyData { group: AbelianGroup::zero(), generators: Vec::new() }
    }

    /// Coordinates of a cocycle; torsion coordinates are reduced mod their order.
    pub fn coordinates(&self, cocycle: &BTreeMap<B, BigInt>) -> Vec<BigInt> {
        self.generators
            .iter()
            .map(|g| {
                let mut acc = BigInt::zero();
                for (b, c) in cocycle {
                    if let Some(w) = g.functional.get(b) {
                        acc += w * c;
                    }
                }
                g.order.reduce(acc)
            })
            .collect()
    }

    pub fn map_basis<C: Ord, F: Fn(&B) -> C>(&self, f: F) -> CohomologyData<C> {
        let remap = |v: &BTreeMap<B, BigInt>| v.iter().map(|(b, c)| (f(b), c.clone())).collect();
        CohomologyData {
            group: self.group.clone(),
            generators: self
                .generators
                .iter()
                .map(|g| Generator {
                    order: g.order.clone(),
                    representative: remap(&g.representative),
                    functional: remap(&g.functional),
                })
                .collect(),
        }
    }
}

fn check_fragment(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<(), LinalgError> {
    if d_in.rows() != d_out.cols() {
        return Err(LinalgError::ShapeMismatch {
            left: (d_out.rows(), d_out.cols()),
            right: (d_in.rows(), d_in.cols()),
        });
    }
    if !d_out.mul(d_in).is_zero() {
        return Err(LinalgError::NotAComplex);
    }
    Ok(())
}

/// Group structure of `ker(d_out) / im(d_in)` without generators.
pub fn cohomology_group(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<AbelianGroup, LinalgError> {
    check_fragment(d_in, d_out)?;
    let n = d_in.rows();
    let r_out = invariant_factors(d_out).len();
    // ker(d_out) is a direct summand, so the torsion of Z^n / im(d_in) is the torsion of H
    let inv_in = invariant_factors(d_in);
    Ok(AbelianGroup::new(n - r_out - inv_in.len(), inv_in))
}

/// `ker(d_out) / im(d_in)` with representatives and coordinate functionals.
pub fn cohomology_at(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<CohomologyData, LinalgError> {
    check_fragment(d_in, d_out)?;
    let n = d_in.rows();
    let out = smith_normal_form(d_out);
    let r = out.rank();
    let k = n - r;

    let kernel = out.v.col_slice(r..n);
    let to_kernel = out.v_inv.row_slice(r..n);
    let reduced_in = to_kernel.mul(d_in);
    let inner = smith_normal_form(&reduced_in);
    let s = inner.rank();

    // functional rows: U' * (V_out^{-1})[r..n, :]
    let functionals = inner.u.mul(&to_kernel);
    let mut torsion = Vec::new();
    let mut free = Vec::new();
    for l in 0..k {
        let order = if l < s {
            if inner.diag[l].is_one() {
                continue;
            }
            Order::Finite(inner.diag[l].clone())
        } else {
            Order::Infinite
        };
        let mut representative = SparseVec::new();
        for (i, c) in inner.u_inv.column(l) {
            axpy(&mut representative, &c, &kernel.column(i));
        }
        let mut functional = functionals.row(l).clone();
        if let Order::Finite(d) = &order {
            functional = functional
                .into_iter()
                .filter_map(|(j, w)| {
                    let w = w.mod_floor(d);
                    (!w.is_zero()).then_some((j, w))
                })
                .collect();
        }
        let g = Generator { order, representative, functional };
        if l < s {
            torsion.push(g);
        } else {
            free.push(g);
        }
    }
    let group = AbelianGroup::new(free.len(), torsion.iter().map(|g| order_value(&g.order)).collect());
    torsion.extend(free);
    Ok(CohomologyData { group, generators: torsion })
}

fn order_value(o: &Order) -> BigInt {
    match o {
        Order::Finite(d) => d.clone(),
        Order::Infinite => BigInt::zero(),
    }
}
