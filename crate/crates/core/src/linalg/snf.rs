//! Smith normal form over ℤ by sparse pivoting elimination.
//!
//! Pivots are chosen by smallest absolute value, then by Markowitz fill-in estimate, then lowest
//! row and column. After the matrix is diagonal the invariant factors are repaired into a
//! divisibility chain with 2x2 unimodular moves.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{add_scaled, axpy, IntMatrix, SparseVec};

/// `U * A * V = diag(d_1, ..., d_r, 0, ...)` with `d_1 | d_2 | ... | d_r`, all positive.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub diag: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// The diagonal matrix `U * A * V` with the shape of `A`.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.u.rows(), self.v.cols());
        for (k, dk) in self.diag.iter().enumerate() {
            d.set(k, k, dk.clone());
        }
        d
    }
}

/// Full decomposition with transformation matrices and their inverses.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let mut elim = Elimination::new(a, true);
    elim.run();
    let (diag, tr) = elim.finish();
    let tr = tr.expect("transforms were requested");
    SnfResult { diag, u: tr.u, v: tr.v, u_inv: tr.u_inv, v_inv: tr.v_inv }
}

/// Invariant factors only; skips all transform bookkeeping.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let mut elim = Elimination::new(a, false);
    elim.run();
    elim.finish().0
}

pub fn rank(a: &IntMatrix) -> usize {
    invariant_factors(a).len()
}

/// Rewrites a list of positive integers as the invariant factors of the diagonal matrix they form.
pub fn canonical_invariants(mut values: Vec<BigInt>) -> Vec<BigInt> {
    values.retain(|v| !v.is_zero());
    for v in values.iter_mut() {
        *v = v.abs();
    }
    for k in 0..values.len() {
        for l in (k + 1)..values.len() {
            let (a, b) = (&values[k], &values[l]);
            if b.is_multiple_of(a) {
                continue;
            }
            let g = a.gcd(b);
            let lcm = a * b / &g;
            values[k] = g;
            values[l] = lcm;
        }
    }
    values
}

/// Solves `A x = b` over ℤ. `None` means no integral solution exists.
pub fn solve(a: &IntMatrix, b: &SparseVec) -> Option<SparseVec> {
    solve_with(&smith_normal_form(a), b)
}

/// Like [`solve`], reusing a decomposition of `A`.
pub fn solve_with(snf: &SnfResult, b: &SparseVec) -> Option<SparseVec> {
    assert!(b.keys().all(|&i| i < snf.u.cols()), "right-hand side has wrong length");
    let c = snf.u.mul_vec(b);
    let r = snf.rank();
    let mut y = SparseVec::new();
    for (&k, ck) in &c {
        if k >= r {
            return None;
        }
        let (q, rem) = ck.div_rem(&snf.diag[k]);
        if !rem.is_zero() {
            return None;
        }
        y.insert(k, q);
    }
    Some(snf.v.mul_vec(&y))
}

struct Transforms {
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

/// Every transform is stored so that the updates it receives are row operations:
/// `U` and `V^{-1}` by rows, `U^{-1}` and `V` by columns (as rows of their transposes).
struct Tracking {
    u: Vec<SparseVec>,
    u_inv_t: Vec<SparseVec>,
    v_t: Vec<SparseVec>,
    v_inv: Vec<SparseVec>,
}

fn identity_rows(n: usize) -> Vec<SparseVec> {
    (0..n).map(|i| SparseVec::from([(i, BigInt::one())])).collect()
}

struct Elimination {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
    cols: Vec<BTreeSet<usize>>,
    row_done: Vec<bool>,
    pivots: Vec<(usize, usize)>,
    track: Option<Tracking>,
}

impl Elimination {
    fn new(a: &IntMatrix, with_transforms: bool) -> Self {
        let (nrows, ncols) = (a.rows(), a.cols());
        let rows: Vec<SparseVec> = (0..nrows).map(|i| a.row(i).clone()).collect();
        let mut cols = vec![BTreeSet::new(); ncols];
        for (i, r) in rows.iter().enumerate() {
            for &j in r.keys() {
                cols[j].insert(i);
            }
        }
        let track = with_transforms.then(|| Tracking {
            u: identity_rows(nrows),
            u_inv_t: identity_rows(nrows),
            v_t: identity_rows(ncols),
            v_inv: identity_rows(ncols),
        });
        Elimination { nrows, ncols, rows, cols, row_done: vec![false; nrows], pivots: Vec::new(), track }
    }

    fn set_entry(&mut self, r: usize, c: usize, delta: &BigInt) {
        let row = &mut self.rows[r];
        let had = row.contains_key(&c);
        add_scaled(row, c, delta);
        let has = row.contains_key(&c);
        if had && !has {
            self.cols[c].remove(&r);
        } else if !had && has {
            self.cols[c].insert(r);
        }
    }

    /// row r -= q * row p
    fn row_sub(&mut self, r: usize, p: usize, q: &BigInt) {
        let src: Vec<(usize, BigInt)> = self.rows[p].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src {
            self.set_entry(r, c, &(-(q * v)));
        }
        if let Some(t) = self.track.as_mut() {
            let src = t.u[p].clone();
            axpy(&mut t.u[r], &-q, &src);
            let src = t.u_inv_t[r].clone();
            axpy(&mut t.u_inv_t[p], q, &src);
        }
    }

    /// column c2 -= q * column c
    fn col_sub(&mut self, c2: usize, c: usize, q: &BigInt) {
        let src: Vec<(usize, BigInt)> = self.cols[c].iter().map(|&r| (r, self.rows[r][&c].clone())).collect();
        for (r, v) in src {
            self.set_entry(r, c2, &(-(q * v)));
        }
        if let Some(t) = self.track.as_mut() {
            let src = t.v_t[c].clone();
            axpy(&mut t.v_t[c2], &-q, &src);
            let src = t.v_inv[c2].clone();
            axpy(&mut t.v_inv[c], q, &src);
        }
    }

    fn negate_row(&mut self, p: usize) {
        for v in self.rows[p].values_mut() {
            *v = -v.clone();
        }
        if let Some(t) = self.track.as_mut() {
            for v in t.u[p].values_mut() {
                *v = -v.clone();
            }
            for v in t.u_inv_t[p].values_mut() {
                *v = -v.clone();
            }
        }
    }

    fn find_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize, usize)> = None;
        for r in 0..self.nrows {
            if self.row_done[r] {
                continue;
            }
            let row_fill = self.rows[r].len().saturating_sub(1);
            for (&c, v) in &self.rows[r] {
                let abs = v.abs();
                let cost = row_fill * self.cols[c].len().saturating_sub(1);
                let better = match &best {
                    None => true,
                    Some((b_abs, b_cost, _, _)) => (&abs, cost) < (b_abs, *b_cost),
                };
                if better {
                    let done = abs.is_one() && cost == 0;
                    best = Some((abs, cost, r, c));
                    if done {
                        return Some((r, c));
                    }
                }
            }
        }
        best.map(|(_, _, r, c)| (r, c))
    }

    fn run(&mut self) {
        while let Some((mut p, mut c)) = self.find_pivot() {
            loop {
                let piv = self.rows[p][&c].clone();
                let others: Vec<usize> = self.cols[c].iter().copied().filter(|&r| r != p).collect();
                let mut smaller: Option<(BigInt, usize)> = None;
                for r in others {
                    let q = &self.rows[r][&c] / &piv;
                    if !q.is_zero() {
                        self.row_sub(r, p, &q);
                    }
                    if let Some(rem) = self.rows[r].get(&c) {
                        let abs = rem.abs();
                        if smaller.as_ref().is_none_or(|(b, _)| &abs < b) {
                            smaller = Some((abs, r));
                        }
                    }
                }
                if let Some((_, r)) = smaller {
                    p = r;
                    continue;
                }
                let others: Vec<usize> = self.rows[p].keys().copied().filter(|&j| j != c).collect();
                for c2 in others {
                    let q = &self.rows[p][&c2] / &piv;
                    if !q.is_zero() {
                        self.col_sub(c2, c, &q);
                    }
                    if let Some(rem) = self.rows[p].get(&c2) {
                        let abs = rem.abs();
                        if smaller.as_ref().is_none_or(|(b, _)| &abs < b) {
                            smaller = Some((abs, c2));
                        }
                    }
                }
                if let Some((_, c2)) = smaller {
                    c = c2;
                    continue;
                }
                break;
            }
            if self.rows[p][&c].is_negative() {
                self.negate_row(p);
            }
            self.row_done[p] = true;
            self.pivots.push((p, c));
        }
    }

    fn finish(self) -> (Vec<BigInt>, Option<Transforms>) {
        let mut diag: Vec<BigInt> = self.pivots.iter().map(|&(p, c)| self.rows[p][&c].clone()).collect();
        let Some(mut t) = self.track else {
            return (canonical_invariants(diag), None);
        };

        let row_order = completed_order(self.pivots.iter().map(|&(p, _)| p), self.nrows);
        let col_order = completed_order(self.pivots.iter().map(|&(_, c)| c), self.ncols);
        t.u = permute(t.u, &row_order);
        t.u_inv_t = permute(t.u_inv_t, &row_order);
        t.v_t = permute(t.v_t, &col_order);
        t.v_inv = permute(t.v_inv, &col_order);

        let r = diag.len();
        for k in 0..r {
            for l in (k + 1)..r {
                if diag[l].is_multiple_of(&diag[k]) {
                    continue;
                }
                let (a, b) = (diag[k].clone(), diag[l].clone());
                let eg = a.extended_gcd(&b);
                let (g, x, y) = (eg.gcd, eg.x, eg.y);
                let (ag, bg) = (&a / &g, &b / &g);
                combine(&mut t.u, k, l, [&x, &y], [&-&bg, &ag]);
                combine(&mut t.u_inv_t, k, l, [&ag, &bg], [&-&y, &x]);
                let one = BigInt::one();
                combine(&mut t.v_t, k, l, [&one, &one], [&-(&y * &bg), &(&x * &ag)]);
                combine(&mut t.v_inv, k, l, [&(&x * &ag), &(&y * &bg)], [&-&one, &one]);
                diag[l] = &a * &bg;
                diag[k] = g;
            }
        }

        let tr = Transforms {
            u: IntMatrix::from_rows(self.nrows, t.u),
            u_inv: IntMatrix::from_rows(self.nrows, t.u_inv_t).transpose(),
            v: IntMatrix::from_rows(self.ncols, t.v_t).transpose(),
            v_inv: IntMatrix::from_rows(self.ncols, t.v_inv),
        };
        (diag, Some(tr))
    }
}

fn completed_order(first: impl Iterator<Item = usize>, n: usize) -> Vec<usize> {
    let mut seen = vec![false; n];
    let mut order: Vec<usize> = first.inspect(|&i| seen[i] = true).collect();
    order.extend((0..n).filter(|&i| !seen[i]));
    order
}

fn permute(mut rows: Vec<SparseVec>, order: &[usize]) -> Vec<SparseVec> {
    order.iter().map(|&i| std::mem::take(&mut rows[i])).collect()
}

/// Replaces rows `k`, `l` by `(a0 row_k + a1 row_l, b0 row_k + b1 row_l)`.
fn combine(rows: &mut [SparseVec], k: usize, l: usize, a: [&BigInt; 2], b: [&BigInt; 2]) {
    let (rk, rl) = (std::mem::take(&mut rows[k]), std::mem::take(&mut rows[l]));
    let mut nk = SparseVec::new();
    axpy(&mut nk, a[0], &rk);
    axpy(&mut nk, a[1], &rl);
    let mut nl = SparseVec::new();
    axpy(&mut nl, b[0], &rk);
    axpy(&mut nl, b[1], &rl);
    rows[k] = nk;
    rows[l] = nl;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(a: &IntMatrix) -> SnfResult {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.diagonal_matrix());
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(a.cols()));
        for w in s.diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert_eq!(invariant_factors(a), s.diag);
        s
    }

    #[test]
    fn two_three_becomes_one_six() {
        let s = check(&IntMatrix::from_dense(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diag, big(&[1, 6]));
    }

    #[test]
    fn zero_and_identity() {
        assert!(check(&IntMatrix::zeros(3, 3)).diag.is_empty());
        assert_eq!(check(&IntMatrix::identity(4)).diag, big(&[1, 1, 1, 1]));
        assert!(check(&IntMatrix::zeros(0, 5)).diag.is_empty());
        assert!(check(&IntMatrix::zeros(4, 0)).diag.is_empty());
    }

    #[test]
    fn needs_gcd_repair() {
        let s = check(&IntMatrix::from_dense(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]));
        assert_eq!(s.diag, big(&[2, 2, 60]));
        let s = check(&IntMatrix::from_dense(&[vec![6, 4], vec![4, 6]]));
        // det = 20, gcd of entries = 2
        assert_eq!(s.diag, big(&[2, 10]));
    }

    #[test]
    fn solve_examples() {
        let a = IntMatrix::from_dense(&[vec![2]]);
        assert_eq!(solve(&a, &SparseVec::from([(0, BigInt::from(4))])), Some(SparseVec::from([(0, BigInt::from(2))])));
        assert_eq!(solve(&a, &SparseVec::from([(0, BigInt::from(3))])), None);
        let a = IntMatrix::from_dense(&[vec![1, 2], vec![0, 3]]);
        let b = SparseVec::from([(0, BigInt::from(5)), (1, BigInt::from(6))]);
        assert_eq!(solve(&a, &b), Some(SparseVec::from([(0, BigInt::from(1)), (1, BigInt::from(2))])));
    }

    #[test]
    fn canonical_invariants_merges_coprime() {
        assert_eq!(canonical_invariants(big(&[2, 3])), big(&[1, 6]));
        assert_eq!(canonical_invariants(big(&[4, 2])), big(&[2, 4]));
    }
}
