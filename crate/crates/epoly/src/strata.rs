//! Stratification of the twisted character variety by the subgroup of signs
//! acting trivially.
//!
//! The group (Z/2)^n acts on the variety coordinate-wise; the stabilizer of
//! a point is a subgroup containing the diagonal all-ones sign (which always
//! acts trivially). For a sign subgroup S, the points fixed by all of S
//! factor through the quotient by the kernel partition of S: coordinates
//! that every element of S treats with the same sign merge into a single
//! lower-rank variety, so the fixed-point count is a product of full counts
//! over the blocks. Moebius inversion over the subgroup lattice then
//! isolates the points whose stabilizer is exactly a given subgroup.

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{f2_subspaces, F2Subspace, SetPartition};
use crate::exactpoly::IntPoly;
use crate::typesum;
use crate::{Error, Result};

/// All sign subgroups of rank n: subspaces of F_2^n containing the all-ones
/// vector, in a fixed deterministic order.
pub fn sign_subgroups(n: usize) -> Vec<F2Subspace> {
    let ones = (1u32 << n) - 1;
    f2_subspaces(n)
        .into_iter()
        .filter(|s| s.contains(ones))
        .collect()
}

/// Partition of the n coordinates in which i and j share a block iff every
/// element of the subgroup carries the same sign at i and j, read off from
/// the basis column patterns.
pub fn kernel_partition(subgroup: &F2Subspace) -> SetPartition {
    let n = subgroup.dim_ambient();
    let pattern = |i: usize| -> u32 {
        subgroup
            .basis()
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &row)| acc | ((row >> i & 1) << k))
    };
    let mut blocks: Vec<(u32, Vec<usize>)> = Vec::new();
    for i in 0..n {
        let p = pattern(i);
        match blocks.iter_mut().find(|(q, _)| *q == p) {
            Some((_, block)) => block.push(i),
            None => blocks.push((p, vec![i])),
        }
    }
    SetPartition::new(n, blocks.into_iter().map(|(_, b)| b).collect())
}

/// Moebius function of the F_2-subspace lattice between nested subspaces:
/// mu(H, S) = (-1)^r 2^(r(r-1)/2) with r the dimension gap.
pub fn moebius_subgroup(sub: &F2Subspace, sup: &F2Subspace) -> Result<BigInt> {
    if !sup.contains_subspace(sub) {
        return Err(Error::NotContained);
    }
    let r = sup.dim() - sub.dim();
    let mu = BigInt::one() << (r.saturating_sub(1) * r / 2);
    Ok(if r % 2 == 1 { -mu } else { mu })
}

/// Count of points fixed by the whole subgroup: the product of full counts
/// over the kernel-partition blocks.
pub fn n_subgroup(subgroup: &F2Subspace, g: u64) -> Result<IntPoly> {
    let mut total = IntPoly::one();
    for block in kernel_partition(subgroup).blocks() {
        total = &total * &typesum::n_total(block.len(), g)?;
    }
    Ok(total)
}

/// E-polynomial of the stratum whose stabilizer is exactly the given sign
/// subgroup: Moebius inversion over the subgroups above it, divided by
/// (q-1)^n.
pub fn e_stratum(subgroup: &F2Subspace, g: u64) -> Result<IntPoly> {
    let n = subgroup.dim_ambient();
    let mut sum = IntPoly::zero();
    for sup in f2_subspaces(n) {
        if !sup.contains_subspace(subgroup) {
            continue;
        }
        let term = n_subgroup(&sup, g)?.scale(&moebius_subgroup(subgroup, &sup)?);
        sum = &sum + &term;
    }
    let q_minus_one = &IntPoly::var() - &IntPoly::one();
    sum.exact_div(&q_minus_one.pow(n as u64))
}

/// The strata partition the variety, so their E-polynomials must add up to
/// the total.
pub fn strata_sum_matches_total(n: usize, g: u64) -> Result<bool> {
    let mut sum = IntPoly::zero();
    for h in sign_subgroups(n) {
        sum = &sum + &e_stratum(&h, g)?;
    }
    Ok(sum == typesum::e_total(n, g)?)
}
