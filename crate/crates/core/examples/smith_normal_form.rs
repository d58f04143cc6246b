//! Integer Smith normal form, linear solving, and cohomology of a cochain fragment.
//!
//!     cargo run --example smith_normal_form

use macring::linalg::{cohomology_at, smith_normal_form, solve, IntMatrix};
use num_bigint::BigInt;

fn main() {
    let a = IntMatrix::from_dense(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("invariant factors {:?}", snf.diag.iter().map(|d| d.to_string()).collect::<Vec<_>>());
    assert_eq!(snf.u.mul(&a).mul(&snf.v), snf.diagonal_matrix());

    let b = [(0, BigInt::from(2)), (1, BigInt::from(6)), (2, BigInt::from(-2))].into_iter().collect();
    println!("A x = b: {:?}", solve(&a, &b));

    // 0 -> Z --[2]--> Z -> 0 in degrees 0, 1
    let data = cohomology_at(&IntMatrix::from_dense(&[vec![2]]), &IntMatrix::zeros(0, 1)).unwrap();
    println!("H^1 = {} with generator {:?}", data.group, data.generators[0].representative);
}
