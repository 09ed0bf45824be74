use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Partition `(n_1^{t_1} ... n_k^{t_k})` of `n`: the part `n_i` repeated
/// `t_i` times, with `n_1 < ... < n_k`.
///
/// A partition is the orbit type of a point of `C^n`: `t_i` distinct values
/// each repeated `n_i` times.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<(usize, usize)>,
}

impl Partition {
    /// Builds a partition from `(part, multiplicity)` pairs in any order;
    /// repeated parts are merged.
    pub fn new(blocks: &[(usize, usize)]) -> Result<Self> {
        let mut sorted: Vec<(usize, usize)> = Vec::new();
        for &(part, mult) in blocks {
            if part == 0 || mult == 0 {
                return Err(Error::InvalidPartition(alloc::format!("block {}^{} has a zero entry", part, mult)));
            }
            match sorted.iter_mut().find(|(p, _)| *p == part) {
                Some(b) => b.1 += mult,
                None => sorted.push((part, mult)),
            }
        }
        if sorted.is_empty() {
            return Err(Error::InvalidPartition("no blocks".to_string()));
        }
        sorted.sort_unstable();
        Ok(Partition { blocks: sorted })
    }

    /// From a multiset of parts, e.g. `[2, 2, 3]` for `(2^2 3^1)`.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let blocks: Vec<(usize, usize)> = parts.iter().map(|&p| (p, 1)).collect();
        Self::new(&blocks)
    }

    /// `(n_i, t_i)` pairs with increasing `n_i`.
    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    /// Number of distinct parts `k`.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The integer being partitioned, `sum n_i t_i`.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|(p, m)| p * m).sum()
    }

    /// Length `l = sum t_i`: the number of free coordinates of the orbit type.
    pub fn length(&self) -> usize {
        self.blocks.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.blocks.iter().map(|&(_, m)| m).collect()
    }

    /// Parts listed in decreasing order, e.g. `[3, 2, 2]`.
    pub fn parts_desc(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.blocks.iter().flat_map(|&(p, m)| core::iter::repeat_n(p, m)).collect();
        v.reverse();
        v
    }

    /// The partition `(1^n)`.
    pub fn finest(n: usize) -> Self {
        Partition { blocks: alloc::vec![(1, n)] }
    }

    /// Iteration order: decreasing length, then lexicographic on the parts
    /// listed in decreasing order.
    pub fn iteration_cmp(&self, other: &Partition) -> core::cmp::Ordering {
        other.length().cmp(&self.length()).then_with(|| self.parts_desc().cmp(&other.parts_desc()))
    }
}

impl fmt::Display for Partition {
    /// `n^t` factors joined by commas, e.g. `1^2,2^1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, m)) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}^{}", p, m)?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated `n^t` factors (a bare `n` means `n^1`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidPartition(alloc::format!("`{}`: {}", s, msg));
        let mut blocks = Vec::new();
        for factor in s.split(',') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(bad("empty factor"));
            }
            let (part, mult) = match factor.split_once('^') {
                Some((p, m)) => (p.trim(), m.trim()),
                None => (factor, "1"),
            };
            let part: usize = part.parse().map_err(|_| bad("part is not a positive integer"))?;
            let mult: usize = mult.parse().map_err(|_| bad("multiplicity is not a positive integer"))?;
            blocks.push((part, mult));
        }
        Self::new(&blocks).map_err(|e| match e {
            Error::InvalidPartition(m) => bad(&m),
            other => other,
        })
    }
}

/// All partitions of `n` of length at least `s`, ordered by decreasing
/// length and then lexicographically on their decreasing part lists.
pub fn partitions_min_length(n: usize, s: usize) -> Vec<Partition> {
    let mut all: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::new();
    descending_parts(n, n, &mut cur, &mut all);
    let mut out: Vec<Partition> =
        all.into_iter().filter(|parts| parts.len() >= s).map(|parts| Partition::from_parts(&parts).expect("parts are positive")).collect();
    out.sort_by(|a, b| a.iteration_cmp(b));
    out
}

fn descending_parts(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        descending_parts(rest - p, p, cur, out);
        cur.pop();
    }
}
