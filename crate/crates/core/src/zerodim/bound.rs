use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use alloc::vec::Vec;

use crate::symmetry::Partition;

/// Upper bound on the number of critical points for orbit type `partition`:
/// `prod degs * E_{l-s}(delta-1, ..., delta-l) / prod t_i!`, rounded down.
///
/// `degs` are the degrees of the input equations after collapsing to the
/// orbit type and `delta = max(max degs, deg phi)`.
pub fn c_lambda_bound(partition: &Partition, degs: &[u32], delta: u32) -> BigInt {
    let ell = partition.length();
    let weights: Vec<u32> = (1..=ell as u32).collect();
    bound_with_weights(partition, degs, delta, &weights)
}

/// As [`c_lambda_bound`] with the shifts taken from the weights of the
/// elementary symmetric coordinates, `E_{l-s}(delta - w)` for
/// `w = (1..t_1, ..., 1..t_k)`.
pub fn c_lambda_weighted_bound(partition: &Partition, degs: &[u32], delta: u32) -> BigInt {
    let weights: Vec<u32> = partition.multiplicities().iter().flat_map(|&t| 1..=t as u32).collect();
    bound_with_weights(partition, degs, delta, &weights)
}

fn bound_with_weights(partition: &Partition, degs: &[u32], delta: u32, weights: &[u32]) -> BigInt {
    let ell = weights.len();
    let s = degs.len();
    if s > ell {
        return BigInt::from(0);
    }
    // elementary symmetric polynomials by the usual DP
    let mut e = alloc::vec![BigInt::from(0); ell + 1];
    e[0] = BigInt::one();
    for &w in weights {
        let x = BigInt::from(i64::from(delta) - i64::from(w));
        for k in (1..=ell).rev() {
            let add = &e[k - 1] * &x;
            e[k] += add;
        }
    }
    let num: BigInt = degs.iter().map(|&d| BigInt::from(d)).product::<BigInt>() * &e[ell - s];
    let den: BigInt = partition.multiplicities().iter().map(|&t| (1..=t).map(BigInt::from).product::<BigInt>()).product();
    num.div_floor(&den)
}
