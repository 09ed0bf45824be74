//! Partitions, orbit types and rewriting of block-symmetric polynomials.

mod blocks;
mod fiber;
mod partition;
mod rewrite;

pub use blocks::{apply_t_lambda, is_invariant, matrix_z, x_to_z_map, BlockVars};
pub use fiber::fiber_polynomials;
pub use partition::{partitions_min_length, Partition};
pub(crate) use rewrite::power_sums_over;
pub use rewrite::{elementary_in_power_sums, elementary_in_z, power_sum_in_elementary, power_sums_in_z, to_elementary, to_power_sums};
