use alloc::vec::Vec;

use super::blocks::BlockVars;
use super::partition::Partition;
use crate::algebra::{BiPoly, UniPoly};
use crate::zerodim::ZeroDimParam;
use crate::{Error, Result};

/// For each block `i`, the polynomial in `u` over `Q[t]`
/// `v' u^{t_i} - v_{1,i} u^{t_i - 1} + ... + (-1)^{t_i} v_{t_i,i}`.
///
/// At a root `tau` of `v` its roots are the `t_i` distinct values taken by
/// block `i` at the corresponding critical point.
pub fn fiber_polynomials(r: &ZeroDimParam, partition: &Partition) -> Result<Vec<BiPoly>> {
    let bv = BlockVars::new(partition);
    if r.coords().len() != bv.len() {
        return Err(Error::BlockMismatch { expected: bv.len(), got: r.coords().len() });
    }
    let dv = r.denominator();
    let mut out = Vec::with_capacity(partition.num_blocks());
    for b in 0..partition.num_blocks() {
        let range = bv.block_range(b);
        let t = range.len();
        let mut coeffs = alloc::vec![UniPoly::zero(); t + 1];
        coeffs[t] = dv.clone();
        for (m, r_idx) in range.enumerate() {
            let c = &r.coords()[r_idx];
            coeffs[t - m - 1] = if m % 2 == 0 { -c } else { c.clone() };
        }
        out.push(BiPoly::new(coeffs));
    }
    Ok(out)
}
