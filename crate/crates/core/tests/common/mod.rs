//! Independent oracles for integration tests. Nothing here calls the library's linear algebra.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Dense = Vec<Vec<BigInt>>;

pub fn dense<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Dense {
    rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect()
}

/// Fraction-free (Bareiss) elimination. Returns the rank and, for square input, the determinant.
fn bareiss(mut a: Dense) -> (usize, Option<BigInt>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let square = rows == cols;
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                a[i][j] = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = square.then(|| if r == rows { sign * prev } else { BigInt::zero() });
    (r, det)
}

pub fn determinant(a: &Dense) -> BigInt {
    if a.is_empty() {
        return BigInt::one();
    }
    bareiss(a.clone()).1.expect("square matrix")
}

pub fn rank(a: &Dense) -> usize {
    bareiss(a.clone()).0
}

/// Rank over `𝔽_p` by plain elimination.
pub fn rank_mod_p(a: &Dense, p: u64) -> usize {
    let p = BigInt::from(p);
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|x| x.mod_floor(&p)).collect()).collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(piv, r);
        // inverse by Fermat
        let inv = m[r][c].modpow(&(&p - 2u32), &p);
        for x in m[r].iter_mut() {
            *x = (&*x * &inv).mod_floor(&p);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = (&*x - &f * y).mod_floor(&p);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// gcd of all `k × k` minors (the k-th determinantal divisor).
pub fn minor_gcd(a: &Dense, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut g = BigInt::zero();
    for rs in choose(rows, k) {
        for cs in choose(cols, k) {
            let sub: Dense = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect()).collect();
            g = g.gcd(&determinant(&sub));
            if g.is_one() {
                return g;
            }
        }
    }
    g.abs()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
