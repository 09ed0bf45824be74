use alloc::vec::Vec;
use core::ops::Range;

use num_traits::Zero;

use super::partition::Partition;
use crate::algebra::{Monomial, MultiPoly, Rational, Vars};
use crate::{Error, Result};

/// Variable layout attached to a partition.
///
/// For block `i` (1-based, increasing part size) and `j = 1..t_i` the
/// variables are named `z{j}_{i}`, `e{j}_{i}` and `p{j}_{i}`. All three
/// lists are flattened block after block, `j` varying fastest, so position
/// `r` of the z-list, the e-list and the p-list refers to the same pair
/// `(j, i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockVars {
    partition: Partition,
    z: Vars,
    e: Vars,
    p: Vars,
    index: Vec<(usize, usize)>,
    starts: Vec<usize>,
}

impl BlockVars {
    pub fn new(partition: &Partition) -> Self {
        let mut index = Vec::new();
        let mut starts = Vec::new();
        for (i, &(_, t)) in partition.blocks().iter().enumerate() {
            starts.push(index.len());
            for j in 1..=t {
                index.push((j, i + 1));
            }
        }
        starts.push(index.len());
        let names =
            |prefix: &str| -> Vec<alloc::string::String> { index.iter().map(|(j, i)| alloc::format!("{}{}_{}", prefix, j, i)).collect() };
        BlockVars {
            partition: partition.clone(),
            z: Vars::new(&names("z")),
            e: Vars::new(&names("e")),
            p: Vars::new(&names("p")),
            index,
            starts,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn z(&self) -> &Vars {
        &self.z
    }

    pub fn e(&self) -> &Vars {
        &self.e
    }

    pub fn p(&self) -> &Vars {
        &self.p
    }

    /// The 1-based pair `(j, i)` at flat position `r`.
    pub fn label(&self, r: usize) -> (usize, usize) {
        self.index[r]
    }

    /// Flat positions of block `b` (0-based).
    pub fn block_range(&self, b: usize) -> Range<usize> {
        self.starts[b]..self.starts[b + 1]
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Weight `j` of `e_{j,i}`: the degree of the elementary symmetric
    /// polynomial it stands for.
    pub fn e_weights(&self) -> Vec<u32> {
        self.index.iter().map(|&(j, _)| j as u32).collect()
    }
}

/// The substitution `T_lambda`: `x_m -> z_{j,i}` for `m` in the index range
/// `I_{j,i}` (the `j`-th run of `n_i` consecutive coordinates inside block
/// `i`).
pub fn apply_t_lambda(f: &MultiPoly, partition: &Partition) -> Result<MultiPoly> {
    if f.nvars() != partition.n() {
        return Err(Error::Arity { expected: partition.n(), got: f.nvars() });
    }
    let bv = BlockVars::new(partition);
    let target = x_to_z_map(partition);
    let terms = f.terms().iter().map(|(m, c)| {
        let mut out = Monomial::one(bv.len());
        for (x, &e) in m.exps().iter().enumerate() {
            out.exps_mut()[target[x]] += e;
        }
        (out, c.clone())
    });
    Ok(MultiPoly::from_terms(bv.z(), terms))
}

/// For each coordinate `x_m` (0-based), the flat position of the z-variable
/// it collapses onto.
pub fn x_to_z_map(partition: &Partition) -> Vec<usize> {
    let mut map = Vec::with_capacity(partition.n());
    let mut row = 0;
    for &(part, mult) in partition.blocks() {
        for _ in 0..mult {
            map.extend(core::iter::repeat_n(row, part));
            row += 1;
        }
    }
    map
}

/// The `l x n` matrix with `1/n_i` in row `(j, i)` on the columns `I_{j,i}`
/// and zeros elsewhere.
pub fn matrix_z(partition: &Partition) -> Vec<Vec<Rational>> {
    let map = x_to_z_map(partition);
    let ell = partition.length();
    let mut rows = alloc::vec![alloc::vec![Rational::zero(); map.len()]; ell];
    let mut part_of_row = Vec::with_capacity(ell);
    for &(part, mult) in partition.blocks() {
        part_of_row.extend(core::iter::repeat_n(part, mult));
    }
    for (m, &r) in map.iter().enumerate() {
        rows[r][m] = Rational::new(1.into(), (part_of_row[r] as i64).into());
    }
    rows
}

/// Whether `g` (over the z-variables of `partition`) is fixed by the
/// adjacent transpositions generating every block's symmetric group.
pub fn is_invariant(g: &MultiPoly, partition: &Partition) -> bool {
    let bv = BlockVars::new(partition);
    if g.nvars() != bv.len() {
        return false;
    }
    let ident: Vec<usize> = (0..bv.len()).collect();
    for b in 0..partition.num_blocks() {
        let range = bv.block_range(b);
        for r in range.start..range.end.saturating_sub(1) {
            let mut perm = ident.clone();
            perm.swap(r, r + 1);
            if g.permute_vars(&perm) != *g {
                return false;
            }
        }
    }
    true
}
