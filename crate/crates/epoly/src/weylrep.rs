//! Irreducible character labels and dimensions for the Weyl groups of types
//! A, B and D.
//!
//! Type A characters are labeled by partitions, type B by ordered
//! bipartitions, type D by unordered bipartitions with the equal-pair labels
//! splitting into two characters of half the B-dimension. The dimensions
//! feed the type constants, and the labels index Hecke generic degrees.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::combinat::{
    binomial, factorial, format_partition, hook_lengths, partitions_of, transpose, Partition,
};

/// An irreducible character of the hyperoctahedral group W(B_m), as the
/// ordered bipartition (alpha, beta) with |alpha| + |beta| = m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BLabel {
    pub alpha: Partition,
    pub beta: Partition,
}

impl BLabel {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        BLabel { alpha, beta }
    }

    pub fn rank(&self) -> usize {
        self.alpha.iter().sum::<usize>() + self.beta.iter().sum::<usize>()
    }
}

/// An irreducible character of W(D_m): an unordered bipartition, stored with
/// the lexicographically larger side first. When both sides are equal the
/// restriction from B splits in two, distinguished by `split`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DLabel {
    pub first: Partition,
    pub second: Partition,
    /// None for alpha != beta; Some(false) / Some(true) for the two halves
    /// of a degenerate pair.
    pub split: Option<bool>,
}

impl DLabel {
    pub fn rank(&self) -> usize {
        self.first.iter().sum::<usize>() + self.second.iter().sum::<usize>()
    }
}

impl std::fmt::Display for BLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}|{}]",
            format_partition(&self.alpha),
            format_partition(&self.beta)
        )
    }
}

impl std::fmt::Display for DLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self.split {
            None => "",
            Some(false) => "-",
            Some(true) => "+",
        };
        write!(
            f,
            "[{}|{}]{}",
            format_partition(&self.first),
            format_partition(&self.second),
            tag
        )
    }
}

/// Dimension of the S_m-irreducible labeled by lambda, by the hook length
/// formula m! / prod(hooks).
pub fn deg_a(lambda: &[usize]) -> BigInt {
    let m: usize = lambda.iter().sum();
    let mut hooks = BigInt::from(1);
    for h in hook_lengths(lambda).concat() {
        hooks *= h;
    }
    let (d, r) = factorial(m).div_rem(&hooks);
    debug_assert!(r.is_zero(), "hook products divide m!");
    d
}

/// Dimension of the W(B_m)-irreducible (alpha, beta):
/// binom(m, |alpha|) * deg_a(alpha) * deg_a(beta).
pub fn deg_b(label: &BLabel) -> BigInt {
    let a: usize = label.alpha.iter().sum();
    binomial(label.rank(), a) * deg_a(&label.alpha) * deg_a(&label.beta)
}

/// Dimension of the W(D_m)-irreducible: the B-dimension of the underlying
/// bipartition, halved on the split labels.
pub fn deg_d(label: &DLabel) -> BigInt {
    let b = deg_b(&BLabel::new(label.first.clone(), label.second.clone()));
    if label.split.is_some() {
        let (half, r) = b.div_rem(&BigInt::from(2));
        debug_assert!(r.is_zero(), "degenerate B-dimension is even");
        half
    } else {
        b
    }
}

/// All W(B_m)-irreducibles: |alpha| descending, then alpha and beta each in
/// lexicographically descending order.
pub fn irr_b(m: usize) -> Vec<BLabel> {
    let mut out = Vec::new();
    for a in (0..=m).rev() {
        for alpha in partitions_of(a) {
            for beta in partitions_of(m - a) {
                out.push(BLabel::new(alpha.clone(), beta));
            }
        }
    }
    out
}

/// All W(D_m)-irreducibles, derived from the B-list by identifying swapped
/// pairs and splitting the degenerate ones.
pub fn irr_d(m: usize) -> Vec<DLabel> {
    let mut out = Vec::new();
    for b in irr_b(m) {
        if b.alpha > b.beta {
            out.push(DLabel {
                first: b.alpha,
                second: b.beta,
                split: None,
            });
        } else if b.alpha == b.beta {
            for sign in [false, true] {
                out.push(DLabel {
                    first: b.alpha.clone(),
                    second: b.beta.clone(),
                    split: Some(sign),
                });
            }
        }
        // alpha < beta repeats an unordered pair already emitted.
    }
    out
}

/// Restriction of a W(B_m)-irreducible to W(D_m): a single character for
/// alpha != beta, the two half-dimension characters for alpha = beta.
pub fn restrict_b_to_d(label: &BLabel) -> Vec<DLabel> {
    if label.alpha == label.beta {
        [false, true]
            .iter()
            .map(|&sign| DLabel {
                first: label.alpha.clone(),
                second: label.beta.clone(),
                split: Some(sign),
            })
            .collect()
    } else {
        let (first, second) = if label.alpha > label.beta {
            (label.alpha.clone(), label.beta.clone())
        } else {
            (label.beta.clone(), label.alpha.clone())
        };
        vec![DLabel {
            first,
            second,
            split: None,
        }]
    }
}

/// Tensoring with the sign character of S_m transposes the label.
pub fn sign_dual_a(lambda: &[usize]) -> Partition {
    transpose(lambda)
}

/// Tensoring with the sign character of W(B_m) swaps and transposes:
/// (alpha, beta) goes to (beta', alpha').
pub fn sign_dual_b(label: &BLabel) -> BLabel {
    BLabel::new(transpose(&label.beta), transpose(&label.alpha))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_dimensions() {
        assert_eq!(deg_a(&[]), BigInt::from(1));
        assert_eq!(deg_a(&[3]), BigInt::from(1));
        assert_eq!(deg_a(&[2, 1]), BigInt::from(2));
        assert_eq!(deg_a(&[1, 1, 1]), BigInt::from(1));
        assert_eq!(deg_a(&[2, 2]), BigInt::from(2));
        assert_eq!(deg_a(&[3, 1]), BigInt::from(3));
    }

    #[test]
    fn squared_dimensions_sum_to_group_order() {
        // S_m: sum deg^2 = m!.
        for m in 0..=6 {
            let total: BigInt = partitions_of(m).iter().map(|l| deg_a(l).pow(2)).sum();
            assert_eq!(total, factorial(m), "S_{}", m);
        }
        // W(B_m): sum deg^2 = 2^m m!.
        for m in 0..=5 {
            let total: BigInt = irr_b(m).iter().map(|l| deg_b(l).pow(2)).sum();
            assert_eq!(total, factorial(m) * BigInt::from(1 << m), "B_{}", m);
        }
        // W(D_m): sum deg^2 = 2^(m-1) m! for m >= 2.
        for m in 2..=5 {
            let total: BigInt = irr_d(m).iter().map(|l| deg_d(l).pow(2)).sum();
            assert_eq!(total, factorial(m) * BigInt::from(1 << (m - 1)), "D_{}", m);
        }
    }

    #[test]
    fn b_irreducible_order() {
        let labels = irr_b(2);
        let expect = vec![
            BLabel::new(vec![2], vec![]),
            BLabel::new(vec![1, 1], vec![]),
            BLabel::new(vec![1], vec![1]),
            BLabel::new(vec![], vec![2]),
            BLabel::new(vec![], vec![1, 1]),
        ];
        assert_eq!(labels, expect);
        assert_eq!(irr_b(0).len(), 1);
        assert_eq!(irr_b(1).len(), 2);
        assert_eq!(irr_b(3).len(), 10);
        assert_eq!(irr_b(4).len(), 20);
    }

    #[test]
    fn b_dimensions() {
        let dims: Vec<BigInt> = irr_b(2).iter().map(deg_b).collect();
        assert_eq!(
            dims,
            [1, 1, 2, 1, 1].map(BigInt::from).to_vec()
        );
        assert_eq!(
            deg_b(&BLabel::new(vec![1], vec![2])),
            BigInt::from(3)
        );
    }

    #[test]
    fn d_irreducibles_and_splitting() {
        // W(D_2): two unordered pairs plus the split pair {(1),(1)}.
        let labels = irr_d(2);
        assert_eq!(labels.len(), 4);
        assert!(labels.iter().all(|l| deg_d(l) == BigInt::from(1)));
        // W(D_1) is trivial: one character.
        assert_eq!(irr_d(1).len(), 1);
        assert_eq!(irr_d(3).len(), 5);
        assert_eq!(irr_d(4).len(), 13);
    }

    #[test]
    fn restriction_to_d() {
        // Distinct sides restrict irreducibly, in either order.
        let single = restrict_b_to_d(&BLabel::new(vec![2], vec![]));
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].first, vec![2]);
        assert_eq!(single[0].split, None);
        let swapped = restrict_b_to_d(&BLabel::new(vec![], vec![2]));
        assert_eq!(single, swapped);
        // Both rank-1 characters restrict to the one trivial character of
        // W(D_1).
        let r1 = restrict_b_to_d(&BLabel::new(vec![1], vec![]));
        let r2 = restrict_b_to_d(&BLabel::new(vec![], vec![1]));
        assert_eq!(r1, r2);
        // An equal pair splits into two halves.
        let split = restrict_b_to_d(&BLabel::new(vec![1], vec![1]));
        assert_eq!(split.len(), 2);
        assert_ne!(split[0], split[1]);
        assert_eq!(deg_d(&split[0]) + deg_d(&split[1]), BigInt::from(2));
    }

    #[test]
    fn sign_duality() {
        assert_eq!(sign_dual_a(&[3]), vec![1, 1, 1]);
        assert_eq!(sign_dual_a(&sign_dual_a(&[2, 1])), vec![2, 1]);
        // Trivial character of B_m is ((m), -); sign is (-, (1^m)).
        let triv = BLabel::new(vec![3], vec![]);
        assert_eq!(sign_dual_b(&triv), BLabel::new(vec![], vec![1, 1, 1]));
        for label in irr_b(3) {
            assert_eq!(sign_dual_b(&sign_dual_b(&label)), label);
            assert_eq!(deg_b(&sign_dual_b(&label)), deg_b(&label));
        }
    }
}
