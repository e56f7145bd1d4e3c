//! Partitions, set partitions, and F_2 subspaces.
//!
//! Everything downstream indexes its objects by these: Weyl-group characters
//! by (bi)partitions, the cyclotomic constants by set partitions of level
//! sets, and the stratification by subspaces of the sign group F_2^n.

use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

use crate::{Error, Result};

/// A partition is a weakly decreasing list of positive parts; the empty
/// partition is the empty list.
pub type Partition = Vec<usize>;

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All partitions of n in lexicographically descending order, so
/// partitions_of(4) = [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Renders a partition as "(3,1)"; the empty partition is "()".
pub fn format_partition(lambda: &[usize]) -> String {
    let parts: Vec<String> = lambda.iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Part multiplicities, keyed by part size.
pub fn multiplicities(lambda: &[usize]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for &part in lambda {
        *m.entry(part).or_insert(0) += 1;
    }
    m
}

/// Conjugate partition: transpose the Young diagram.
pub fn transpose(lambda: &[usize]) -> Partition {
    let cols = lambda.first().copied().unwrap_or(0);
    (0..cols)
        .map(|j| lambda.iter().filter(|&&part| part > j).count())
        .collect()
}

/// The statistic n(lambda) = sum_i (i-1) * lambda_i (rows indexed from 1).
pub fn n_stat(lambda: &[usize]) -> usize {
    lambda.iter().enumerate().map(|(i, &part)| i * part).sum()
}

/// Hook lengths of each cell, row by row.
pub fn hook_lengths(lambda: &[usize]) -> Vec<Vec<usize>> {
    let conj = transpose(lambda);
    lambda
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            (0..row)
                .map(|j| (row - j) + (conj[j] - i) - 1)
                .collect()
        })
        .collect()
}

/// A set partition of {0, .., n-1} into disjoint nonempty blocks.
///
/// Canonical form: each block sorted ascending, blocks ordered by their
/// minimum, so equality of values is equality of partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Normalizes arbitrary disjoint blocks covering {0, .., n-1}.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| b[0]);
        let covered: usize = blocks.iter().map(|b| b.len()).sum();
        debug_assert_eq!(covered, n, "blocks must cover the ground set exactly");
        SetPartition { n, blocks }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block sizes as a partition (weakly decreasing).
    pub fn block_sizes(&self) -> Partition {
        let mut sizes: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }

    /// Index of the block containing each element.
    fn block_of(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &x in b {
                owner[x] = bi;
            }
        }
        owner
    }

    /// True iff every block of self lies inside one block of other.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.n != other.n {
            return false;
        }
        let owner = other.block_of();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| owner[x] == owner[b[0]]))
    }
}

/// All set partitions of {0, .., n-1}, enumerated through restricted growth
/// strings (element i joins block a_i with a_i <= 1 + max of earlier values).
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    fn rec(n: usize, labels: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if labels.len() == n {
            let nblocks = labels.iter().max().map_or(0, |&m| m + 1);
            let mut blocks = vec![Vec::new(); nblocks];
            for (i, &b) in labels.iter().enumerate() {
                blocks[b].push(i);
            }
            out.push(SetPartition::new(n, blocks));
            return;
        }
        let next_free = labels.iter().max().map_or(0, |&m| m + 1);
        for b in 0..=next_free {
            labels.push(b);
            rec(n, labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(SetPartition::new(0, Vec::new()));
        return out;
    }
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// Set partitions whose block-size multiset equals the given partition.
pub fn set_partitions_with_shape(n: usize, shape: &[usize]) -> Vec<SetPartition> {
    set_partitions(n)
        .into_iter()
        .filter(|p| p.block_sizes() == shape)
        .collect()
}

/// Moebius function of the set-partition lattice between comparable
/// elements: for fine <= coarse it is the product over coarse blocks B of
/// (-1)^(k_B - 1) * (k_B - 1)!, where k_B counts fine blocks inside B.
pub fn moebius_partition(fine: &SetPartition, coarse: &SetPartition) -> Result<BigInt> {
    if !fine.refines(coarse) {
        return Err(Error::NotComparable);
    }
    let owner = coarse.block_of();
    let mut inner_counts = vec![0usize; coarse.blocks().len()];
    for b in fine.blocks() {
        inner_counts[owner[b[0]]] += 1;
    }
    let mut mu = BigInt::one();
    for k in inner_counts {
        let term = factorial(k - 1);
        mu *= if (k - 1) % 2 == 0 { term } else { -term };
    }
    Ok(mu)
}

/// A linear subspace of F_2^d, stored as a row-reduced echelon basis with
/// coordinate i in bit i. Canonical: equal subspaces have equal bases.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct F2Subspace {
    dim_ambient: usize,
    /// RREF rows, pivots strictly decreasing from the top bit down.
    basis: Vec<u32>,
}

impl F2Subspace {
    /// Reduces an arbitrary spanning set to the canonical RREF basis.
    pub fn from_spanning(dim_ambient: usize, vectors: &[u32]) -> Self {
        assert!(dim_ambient <= 31);
        let mask = (1u32 << dim_ambient) - 1;
        let mut rows: Vec<u32> = Vec::new();
        for &v in vectors {
            let mut v = v & mask;
            for &r in &rows {
                let pivot = 31 - r.leading_zeros();
                if v >> pivot & 1 == 1 {
                    v ^= r;
                }
            }
            if v != 0 {
                rows.push(v);
            }
        }
        // Back-substitute so every pivot column is cleared elsewhere.
        rows.sort_unstable_by(|a, b| b.cmp(a));
        for i in (0..rows.len()).rev() {
            let pivot = 31 - rows[i].leading_zeros();
            for j in 0..i {
                if rows[j] >> pivot & 1 == 1 {
                    rows[j] ^= rows[i];
                }
            }
        }
        F2Subspace {
            dim_ambient,
            basis: rows,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn basis(&self) -> &[u32] {
        &self.basis
    }

    pub fn contains(&self, v: u32) -> bool {
        let mut v = v & ((1u32 << self.dim_ambient) - 1);
        for &r in &self.basis {
            let pivot = 31 - r.leading_zeros();
            if v >> pivot & 1 == 1 {
                v ^= r;
            }
        }
        v == 0
    }

    pub fn contains_subspace(&self, other: &F2Subspace) -> bool {
        other.basis.iter().all(|&v| self.contains(v))
    }

    /// Every element, in ascending numeric order.
    pub fn elements(&self) -> Vec<u32> {
        let mut out: Vec<u32> = (0..1u64 << self.dim())
            .map(|bits| {
                let mut v = 0;
                for (i, &r) in self.basis.iter().enumerate() {
                    if bits >> i & 1 == 1 {
                        v ^= r;
                    }
                }
                v
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// All subspaces of F_2^d, one canonical representative each, enumerated by
/// echelon form: a pivot-column set plus free bits in later non-pivot
/// columns. Sorted for deterministic downstream output.
pub fn f2_subspaces(d: usize) -> Vec<F2Subspace> {
    assert!(d <= 16, "subspace enumeration is meant for small ambient rank");
    let mut out = Vec::new();
    for pivot_mask in 0u32..1 << d {
        let pivots: Vec<usize> = (0..d).rev().filter(|&i| pivot_mask >> i & 1 == 1).collect();
        let r = pivots.len();
        // Free positions for row i: non-pivot columns below its pivot.
        let free_cols: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&p| (0..p).filter(|&j| pivot_mask >> j & 1 == 0).collect())
            .collect();
        let total_free: usize = free_cols.iter().map(|f| f.len()).sum();
        for bits in 0u64..1 << total_free {
            let mut rows = Vec::with_capacity(r);
            let mut used = 0;
            for (i, &p) in pivots.iter().enumerate() {
                let mut row = 1u32 << p;
                for &j in &free_cols[i] {
                    if bits >> used & 1 == 1 {
                        row |= 1 << j;
                    }
                    used += 1;
                }
                rows.push(row);
            }
            out.push(F2Subspace {
                dim_ambient: d,
                basis: rows,
            });
        }
    }
    out.sort();
    out
}
