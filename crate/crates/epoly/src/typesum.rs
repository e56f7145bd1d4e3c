//! Principal series types for Sp(2n, F_q) at a generic regular semisimple
//! twist, and the exact counting polynomial and E-polynomial they assemble.
//!
//! A type records the shape of a Weyl-orbit of principal series characters
//! whose central character matches the twist: a partition lambda of c giving
//! the sizes of the groups of equal non-real torus coordinates, the ranks
//! alpha_1 and alpha_eps of the coordinates at the trivial and the quadratic
//! character, and an irreducible character of the stabilizer
//! prod_j S_(lambda_j) x W(B_(alpha_1)) x W(B_(alpha_eps)).
//!
//! The count of twisted representation-variety points is
//!
//!   N(q) = sum_tau C_tau * H_tau(q)^(2g-1),
//!
//! where H_tau = |Sp(2n, F_q)| / chi_tau(1) and C_tau is an integer counting
//! the characters of the type weighted by their value on the twist. Dividing
//! by (q-1)^n gives the E-polynomial of the quotient variety.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinat::{
    factorial, format_partition, multiplicities, partitions_of, transpose, Partition,
};
use crate::exactpoly::{ratpoly_div_group_order, IntPoly, RatPoly};
use crate::heckedeg;
use crate::weylrep::{self, BLabel};
use crate::{Error, Result};

/// A principal series type for Sp(2n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PSType {
    /// Sizes of the groups of equal non-real coordinates, as a partition.
    pub lambda: Partition,
    /// One symmetric-group character per part of lambda.
    pub beta_a: Vec<Partition>,
    /// Rank carried by the trivial coordinate character.
    pub alpha_one: usize,
    /// Rank carried by the quadratic coordinate character.
    pub alpha_eps: usize,
    /// Hyperoctahedral character on the alpha_one block.
    pub beta_b1: BLabel,
    /// Hyperoctahedral character on the alpha_eps block.
    pub beta_be: BLabel,
}

impl PSType {
    /// Total rank n = |lambda| + alpha_one + alpha_eps.
    pub fn rank(&self) -> usize {
        self.lambda.iter().sum::<usize>() + self.alpha_one + self.alpha_eps
    }

    /// Dimension of the stabilizer character: the product of the component
    /// dimensions.
    pub fn dimension(&self) -> BigInt {
        let mut d = weylrep::deg_b(&self.beta_b1) * weylrep::deg_b(&self.beta_be);
        for mu in &self.beta_a {
            d *= weylrep::deg_a(mu);
        }
        d
    }
}

impl std::fmt::Display for PSType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let chars: Vec<String> = self.beta_a.iter().map(|mu| format_partition(mu)).collect();
        write!(
            f,
            "lambda={} A=[{}] a1={} B1={} ae={} Be={}",
            format_partition(&self.lambda),
            chars.join(","),
            self.alpha_one,
            self.beta_b1,
            self.alpha_eps,
            self.beta_be
        )
    }
}

/// All ordered tuples of one partition per entry of `parts`.
fn character_tuples(parts: &[usize]) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for &p in parts {
        let choices = partitions_of(p);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |mu| {
                    let mut next = prefix.clone();
                    next.push(mu.clone());
                    next
                })
            })
            .collect();
    }
    out
}

/// Every type of rank n, in a fixed deterministic order: c = |lambda|
/// ascending, lambda lexicographically descending, alpha_one descending,
/// then the component characters in their own enumeration orders.
pub fn enumerate_types(n: usize) -> Vec<PSType> {
    let mut out = Vec::new();
    for c in 0..=n {
        for lambda in partitions_of(c) {
            let tuples = character_tuples(&lambda);
            for alpha_one in (0..=n - c).rev() {
                let alpha_eps = n - c - alpha_one;
                for beta_a in &tuples {
                    for beta_b1 in weylrep::irr_b(alpha_one) {
                        for beta_be in weylrep::irr_b(alpha_eps) {
                            out.push(PSType {
                                lambda: lambda.clone(),
                                beta_a: beta_a.clone(),
                                alpha_one,
                                alpha_eps,
                                beta_b1: beta_b1.clone(),
                                beta_be,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// |Sp(2n, F_q)| as a polynomial in q: prod_{i=1}^n (q^2i - 1) q^(2i-1),
/// of degree n(2n+1).
pub fn group_order(n: usize) -> IntPoly {
    let mut p = IntPoly::one();
    for i in 1..=n {
        let factor = &IntPoly::monomial(BigInt::one(), 2 * i) - &IntPoly::one();
        p = &(&p * &factor) * &IntPoly::monomial(BigInt::one(), 2 * i - 1);
    }
    p
}

/// Degree of the principal series character of type tau, as a polynomial in
/// q over a scalar denominator:
///
///   chi_tau(1) = P_B(n)/P_W(theta) * prod_j d_A(mu_j) * d_B(beta_1)
///                * d_D(res beta_eps) * (1/2 if the restriction to D stays
///                  irreducible),
///
/// where P_W(theta) is the Poincare polynomial of the stabilizer and the
/// epsilon factor restricts the hyperoctahedral character to W(D): a
/// bipartition with distinct sides restricts irreducibly and the character
/// comes back from the index-two subgroup with half its degree, while an
/// equal-sided bipartition splits and each half already carries half the
/// dimension.
pub fn chi_degree(tau: &PSType) -> Result<RatPoly> {
    let n = tau.rank();
    let mut p_theta = &heckedeg::poincare_b(tau.alpha_one) * &heckedeg::poincare_d(tau.alpha_eps);
    for &part in &tau.lambda {
        p_theta = &p_theta * &heckedeg::poincare_a(part);
    }
    let mut num = heckedeg::poincare_b(n).exact_div(&p_theta)?;
    let mut den = BigInt::one();
    for mu in &tau.beta_a {
        num = &num * &heckedeg::generic_degree_a(mu)?;
    }
    if tau.alpha_one > 0 {
        let d = heckedeg::generic_degree_b(&tau.beta_b1)?;
        num = &num * d.num();
        den *= d.den();
    }
    if tau.alpha_eps > 0 {
        let restricted = weylrep::restrict_b_to_d(&tau.beta_be);
        let d = heckedeg::generic_degree_d(&restricted[0])?;
        num = &num * d.num();
        den *= d.den();
        if restricted.len() == 1 {
            den *= 2;
        }
    }
    Ok(RatPoly::new(num, den))
}

/// H_tau(q) = |Sp(2n, F_q)| / chi_tau(1), always an integer polynomial.
pub fn h_tau(tau: &PSType) -> Result<IntPoly> {
    ratpoly_div_group_order(&group_order(tau.rank()), &chi_degree(tau)?)
}

/// The integer coefficient of the type in the counting formula:
///
///   C_tau = n! dim(beta) 2^c (-1)^l l! / (prod_i m_i(lambda)! prod_j
///           lambda_j! alpha_1! alpha_eps!),
///
/// where l is the number of parts of lambda and m_i its multiplicities. The
/// quotient is a product of multinomials, so a non-integer signals a bug.
pub fn c_tau(tau: &PSType) -> Result<BigInt> {
    let l = tau.lambda.len();
    let c: usize = tau.lambda.iter().sum();
    let num = factorial(tau.rank()) * tau.dimension() * (BigInt::one() << c) * factorial(l);
    let mut den = factorial(tau.alpha_one) * factorial(tau.alpha_eps);
    for (_, m) in multiplicities(&tau.lambda) {
        den *= factorial(m);
    }
    for &part in &tau.lambda {
        den *= factorial(part);
    }
    let (quot, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::NonIntegerC);
    }
    Ok(if l % 2 == 1 { -quot } else { quot })
}

/// The twisted count N(q) = sum_tau C_tau H_tau^(2g-1) for genus g >= 1.
pub fn n_total(n: usize, g: u64) -> Result<IntPoly> {
    assert!(g >= 1, "the counting formula needs genus at least one");
    let types = enumerate_types(n);
    let terms: Vec<IntPoly> = types
        .par_iter()
        .map(|tau| Ok(h_tau(tau)?.pow(2 * g - 1).scale(&c_tau(tau)?)))
        .collect::<Result<_>>()?;
    Ok(terms.iter().fold(IntPoly::zero(), |acc, t| &acc + t))
}

/// Degree of the E-polynomial: (2g-1) n (2n+1) - n.
pub fn e_degree(n: usize, g: u64) -> usize {
    (2 * g as usize - 1) * n * (2 * n + 1) - n
}

/// The E-polynomial E(q) = N(q)/(q-1)^n of the twisted character variety.
///
/// Panics if any of the structural invariants fail: exact divisibility,
/// expected degree, monic leading term, palindromic coefficients, and the
/// value at q = 1 (the Euler characteristic at genus one, zero for higher
/// genus).
pub fn e_total(n: usize, g: u64) -> Result<IntPoly> {
    let count = n_total(n, g)?;
    let q_minus_one = &IntPoly::var() - &IntPoly::one();
    let e = count.exact_div(&q_minus_one.pow(n as u64))?;
    let d = e_degree(n, g);
    assert_eq!(e.deg(), Some(d), "E-polynomial degree mismatch");
    assert!(e.leading_coeff().is_one(), "E-polynomial is not monic");
    assert!(e.is_palindromic(d), "E-polynomial is not palindromic");
    let at_one = e.eval(&BigInt::one());
    if g == 1 {
        assert_eq!(
            at_one,
            euler_characteristic(n),
            "genus-one value at q = 1 is not the Euler characteristic"
        );
    } else {
        assert!(at_one.is_zero(), "E(1) must vanish for genus > 1");
    }
    Ok(e)
}

/// Euler characteristic of the genus-one variety, from the generating
/// function identity: chi = 2^n n! sum_c a_c b_(n-c) with
/// sum a_c T^c = prod_k (1 - T^k) and sum b_m T^m = prod_k (1 - T^k)^(-4).
pub fn euler_characteristic(n: usize) -> BigInt {
    let bipartitions = |m: usize| BigInt::from(weylrep::irr_b(m).len());
    let b: Vec<BigInt> = (0..=n)
        .map(|m| (0..=m).map(|a| bipartitions(a) * bipartitions(m - a)).sum())
        .collect();
    let mut total = BigInt::zero();
    for c in 0..=n {
        let mut a_c = BigInt::zero();
        for lambda in partitions_of(c) {
            let l = lambda.len();
            let mut term = factorial(l);
            for (_, m) in multiplicities(&lambda) {
                term /= factorial(m);
            }
            for &part in &lambda {
                term *= partitions_of(part).len();
            }
            a_c += if l % 2 == 1 { -term } else { term };
        }
        total += a_c * &b[n - c];
    }
    total * factorial(n) * (BigInt::one() << n)
}

/// The involution induced by tensoring with the sign characters: transpose
/// every symmetric-group label and sign-dualize both hyperoctahedral labels.
pub fn dual_type(tau: &PSType) -> PSType {
    PSType {
        lambda: tau.lambda.clone(),
        beta_a: tau.beta_a.iter().map(|mu| transpose(mu)).collect(),
        alpha_one: tau.alpha_one,
        alpha_eps: tau.alpha_eps,
        beta_b1: weylrep::sign_dual_b(&tau.beta_b1),
        beta_be: weylrep::sign_dual_b(&tau.beta_be),
    }
}

/// Checks q^(n(2n+1)) H_tau(1/q) = (-1)^n H_(tau')(q) for every type of
/// rank n, the duality that forces the E-polynomial to be palindromic.
pub fn duality_holds(n: usize) -> Result<bool> {
    let window = n * (2 * n + 1);
    for tau in enumerate_types(n) {
        let reversed = h_tau(&tau)?
            .reverse(window)
            .expect("H_tau cannot exceed the group-order degree");
        let mut dual = h_tau(&dual_type(&tau))?;
        if n % 2 == 1 {
            dual = -&dual;
        }
        if reversed != dual {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn type_counts() {
        assert_eq!(enumerate_types(1).len(), 5);
        assert_eq!(enumerate_types(2).len(), 21);
        assert_eq!(enumerate_types(3).len(), 72);
    }

    #[test]
    fn rank_two_block_structure() {
        // c ascending, lambda lex-descending, alpha_one descending.
        let types = enumerate_types(2);
        let shape: Vec<(usize, usize, usize)> = types
            .iter()
            .map(|t| (t.lambda.iter().sum(), t.alpha_one, t.alpha_eps))
            .collect();
        let mut expect = Vec::new();
        expect.extend(std::iter::repeat((0, 2, 0)).take(5));
        expect.extend(std::iter::repeat((0, 1, 1)).take(4));
        expect.extend(std::iter::repeat((0, 0, 2)).take(5));
        expect.extend(std::iter::repeat((1, 1, 0)).take(2));
        expect.extend(std::iter::repeat((1, 0, 1)).take(2));
        expect.extend(std::iter::repeat((2, 0, 0)).take(3));
        assert_eq!(shape, expect);
        assert_eq!(types[18].lambda, vec![2]);
        assert_eq!(types[20].lambda, vec![1, 1]);
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(1), poly(&[0, -1, 0, 1]));
        assert_eq!(group_order(1).eval(&BigInt::from(7)), BigInt::from(336));
        // Sp(4, F_3) has order 51840; the degree is n(2n+1) = 10.
        assert_eq!(group_order(2).eval(&BigInt::from(3)), BigInt::from(51840));
        assert_eq!(group_order(2).deg(), Some(10));
        assert_eq!(group_order(3).deg(), Some(21));
    }

    #[test]
    fn rank_one_character_degrees() {
        let chis: Vec<RatPoly> = enumerate_types(1)
            .iter()
            .map(|t| chi_degree(t).unwrap())
            .collect();
        let half = |c: &[i64]| RatPoly::new(poly(c), BigInt::from(2));
        let whole = |c: &[i64]| RatPoly::from_int_poly(poly(c));
        assert_eq!(
            chis,
            vec![
                whole(&[1]),
                whole(&[0, 1]),
                half(&[1, 1]),
                half(&[1, 1]),
                whole(&[1, 1]),
            ]
        );
    }

    #[test]
    fn rank_one_h_and_c() {
        let types = enumerate_types(1);
        let hs: Vec<IntPoly> = types.iter().map(|t| h_tau(t).unwrap()).collect();
        assert_eq!(
            hs,
            vec![
                poly(&[0, -1, 0, 1]),
                poly(&[-1, 0, 1]),
                poly(&[0, -2, 2]),
                poly(&[0, -2, 2]),
                poly(&[0, -1, 1]),
            ]
        );
        let cs: Vec<BigInt> = types.iter().map(|t| c_tau(t).unwrap()).collect();
        assert_eq!(cs, [1, 1, 1, 1, -2].map(BigInt::from).to_vec());
    }

    #[test]
    fn rank_two_c_values() {
        let types = enumerate_types(2);
        // The two-singleton type carries 2! * 4 * 2! / 2! = 8.
        let two_blocks = types.iter().find(|t| t.lambda == vec![1, 1]).unwrap();
        assert_eq!(c_tau(two_blocks).unwrap(), BigInt::from(8));
        // A singleton block next to alpha_one = 1 carries -4.
        let mixed = types
            .iter()
            .find(|t| t.lambda == vec![1] && t.alpha_one == 1)
            .unwrap();
        assert_eq!(c_tau(mixed).unwrap(), BigInt::from(-4));
        // One unipotent-block type by hand: lambda = (1,1) has
        // chi = P_B(2), so H = q^4 (q-1)^2.
        assert_eq!(h_tau(two_blocks).unwrap(), poly(&[0, 0, 0, 0, 1, -2, 1]));
    }

    #[test]
    fn rank_one_totals() {
        assert_eq!(n_total(1, 1).unwrap(), poly(&[-1, -3, 3, 1]));
        assert_eq!(e_total(1, 1).unwrap(), poly(&[1, 4, 1]));
        // Genus two: N(7) matches the brute-force pair count.
        let n2 = n_total(1, 2).unwrap();
        assert_eq!(n2.eval(&BigInt::from(7)), BigInt::from(39_080_880u64));
        let e2 = e_total(1, 2).unwrap();
        assert_eq!(e2.deg(), Some(8));
        assert_eq!(e2.eval(&BigInt::from(7)), BigInt::from(6_513_480u64));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_characteristic(1), BigInt::from(6));
        assert_eq!(euler_characteristic(2), BigInt::from(72));
        assert_eq!(euler_characteristic(3), BigInt::from(1056));
    }

    #[test]
    fn higher_rank_invariants() {
        // e_total asserts divisibility, degree, monicity, palindromicity and
        // the q = 1 value internally; surviving the call is the test.
        for n in 2..=3 {
            let e = e_total(n, 1).unwrap();
            assert_eq!(e.deg(), Some(e_degree(n, 1)));
        }
        let e = e_total(2, 2).unwrap();
        assert_eq!(e.deg(), Some(28));
    }

    #[test]
    fn rank_four_invariants() {
        // First rank with repeated lambda-parts carrying several character
        // tuples; guards the ordered-tuple bookkeeping.
        let e = e_total(4, 1).unwrap();
        assert_eq!(e.deg(), Some(e_degree(4, 1)));
        assert_eq!(e.eval(&BigInt::one()), euler_characteristic(4));
    }

    #[test]
    fn duality_small_ranks() {
        assert!(duality_holds(1).unwrap());
        assert!(duality_holds(2).unwrap());
    }

    #[test]
    fn dual_type_is_involution() {
        for tau in enumerate_types(2) {
            assert_eq!(dual_type(&dual_type(&tau)), tau);
        }
    }
}
