//! Independent verification oracles.
//!
//! Nothing here reuses the character-theoretic pipeline it checks. Three
//! separate routes pin the main formula down:
//!
//! * brute force: enumerate all of SL(2, F_q)^2g and count solutions of the
//!   twisted commutator equation directly;
//! * Frobenius counting from an explicitly hard-coded character table;
//! * exact cyclotomic arithmetic: recompute each type coefficient C_tau as
//!   a sum of character values in Z[zeta_m] rather than through the closed
//!   form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinat::{factorial, set_partitions_with_shape};
use crate::exactpoly::IntPoly;
use crate::typesum::{self, PSType};
use crate::{Error, Result};

/// A finite group presented through element indices 0..size.
pub trait FiniteGroup: Sync {
    fn size(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
}

/// A group given by explicit multiplication and inverse tables.
pub struct SmallGroup {
    size: usize,
    identity: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl FiniteGroup for SmallGroup {
    fn size(&self) -> usize {
        self.size
    }
    fn identity(&self) -> usize {
        self.identity
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }
    fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

/// The symmetric group S_3 as permutations of three points, identity first.
pub fn s3_group() -> SmallGroup {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|&x| x == p).unwrap();
    let mut mul = vec![0; 36];
    let mut inv = vec![0; 6];
    for a in 0..6 {
        for b in 0..6 {
            let composed = [perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]];
            mul[a * 6 + b] = index(composed);
        }
    }
    for a in 0..6 {
        inv[a] = (0..6).find(|&b| mul[a * 6 + b] == 0).unwrap();
    }
    SmallGroup {
        size: 6,
        identity: 0,
        mul,
        inv,
    }
}

/// Conjugacy class index of each S_3 element in the order used by
/// [`s3_character_table`]: identity, transpositions, three-cycles.
pub fn s3_class_of() -> Vec<usize> {
    vec![0, 1, 1, 1, 2, 2]
}

/// An integer character table: one row per irreducible character, one
/// column per conjugacy class, identity class first.
pub struct CharTable {
    pub order: u64,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<i64>>,
}

/// The full character table of S_3.
pub fn s3_character_table() -> CharTable {
    CharTable {
        order: 6,
        class_sizes: vec![1, 3, 2],
        values: vec![vec![1, 1, 1], vec![1, -1, 1], vec![2, 0, -1]],
    }
}

/// Number of 2g-tuples with commutator product in the given class, by the
/// Frobenius character sum  sum_chi chi(z) (|G|/chi(1))^(2g-1).
pub fn frobenius_count(table: &CharTable, class: usize, genus: u64) -> Result<BigInt> {
    assert!(genus >= 1, "genus at least one");
    let mut total = BigInt::zero();
    for row in &table.values {
        let dim = BigInt::from(row[0]);
        let (h, rem) = BigInt::from(table.order).div_rem(&dim);
        if !rem.is_zero() {
            return Err(Error::NonIntegerResult);
        }
        total += h.pow(2 * genus as u32 - 1) * row[class];
    }
    Ok(total)
}

/// The distribution f(z) = #{(a, b) : a b a^-1 b^-1 = z}, by enumerating
/// every pair.
pub fn commutator_distribution<G: FiniteGroup>(group: &G) -> Vec<u64> {
    let n = group.size();
    (0..n)
        .into_par_iter()
        .fold(
            || vec![0u64; n],
            |mut acc, a| {
                let ia = group.inv(a);
                for b in 0..n {
                    let z = group.mul(group.mul(group.mul(a, b), ia), group.inv(b));
                    acc[z] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n],
            |mut x, y| {
                for (xi, yi) in x.iter_mut().zip(&y) {
                    *xi += yi;
                }
                x
            },
        )
}

/// Number of solutions of [a_1,b_1] ... [a_g,b_g] = z, by convolving the
/// single-commutator distribution genus times. Counts stay below |G|^2g,
/// which fits u128 for every group and genus this crate brute-forces.
pub fn commutator_count<G: FiniteGroup>(group: &G, z: usize, genus: u64) -> BigInt {
    assert!((1..=5).contains(&genus), "u128 exactness bound");
    let n = group.size();
    let f1: Vec<u128> = commutator_distribution(group)
        .into_iter()
        .map(u128::from)
        .collect();
    let mut f = f1.clone();
    for _ in 1..genus {
        let prev = f;
        f = (0..n)
            .into_par_iter()
            .fold(
                || vec![0u128; n],
                |mut acc, x| {
                    if prev[x] != 0 {
                        for y in 0..n {
                            acc[group.mul(x, y)] += prev[x] * f1[y];
                        }
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u128; n],
                |mut a, b| {
                    for (ai, bi) in a.iter_mut().zip(&b) {
                        *ai += bi;
                    }
                    a
                },
            );
    }
    BigInt::from(f[z])
}

/// Class index of every element, by conjugating one representative per
/// class by the whole group.
pub fn conjugacy_class_of<G: FiniteGroup>(group: &G) -> Vec<u32> {
    let n = group.size();
    let mut class = vec![u32::MAX; n];
    let mut next = 0u32;
    for rep in 0..n {
        if class[rep] != u32::MAX {
            continue;
        }
        for t in 0..n {
            let conj = group.mul(group.mul(t, rep), group.inv(t));
            class[conj] = next;
        }
        next += 1;
    }
    class
}

/// Largest field size the brute-force SL(2) table accepts; chosen so the
/// |G|^2 pair enumeration stays within an interactive time budget.
pub const MAX_BRUTE_FIELD: u64 = 17;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// SL(2, F_q) for an odd prime q, with constant-time element lookup through
/// a direct-address table over all q^4 matrices.
pub struct Sl2Table {
    q: u64,
    mats: Vec<[u8; 4]>,
    index: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
}

impl Sl2Table {
    pub fn new(q: u64) -> Result<Sl2Table> {
        if q > MAX_BRUTE_FIELD {
            return Err(Error::FieldTooLarge {
                q,
                max: MAX_BRUTE_FIELD,
            });
        }
        assert!(q >= 3 && is_prime(q), "odd prime field required");
        let qs = q as usize;
        let mut mats = Vec::with_capacity(qs * (qs * qs - 1));
        let mut index = vec![u32::MAX; qs * qs * qs * qs];
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    for d in 0..q {
                        if (a * d + q * q - b * c) % q == 1 {
                            let packed = ((a * q + b) * q + c) * q + d;
                            index[packed as usize] = mats.len() as u32;
                            mats.push([a as u8, b as u8, c as u8, d as u8]);
                        }
                    }
                }
            }
        }
        let inv = mats
            .iter()
            .map(|m| {
                let [a, b, c, d] = m.map(u64::from);
                let packed = ((d * q + (q - b) % q) * q + (q - c) % q) * q + a;
                index[packed as usize]
            })
            .collect();
        let identity = index[(q * q * q + 1) as usize] as usize;
        Ok(Sl2Table {
            q,
            mats,
            index,
            inv,
            identity,
        })
    }

    pub fn field(&self) -> u64 {
        self.q
    }

    /// Index of an explicit matrix, if it lies in the group.
    pub fn element(&self, m: [u64; 4]) -> Option<usize> {
        if m.iter().any(|&x| x >= self.q) {
            return None;
        }
        let packed = ((m[0] * self.q + m[1]) * self.q + m[2]) * self.q + m[3];
        match self.index[packed as usize] {
            u32::MAX => None,
            i => Some(i as usize),
        }
    }

    /// The diagonal matrix diag(z, z^-1) for some z of exact multiplicative
    /// order m, if one exists.
    pub fn regular_diagonal(&self, m: u64) -> Option<usize> {
        let q = self.q;
        for z in 2..q {
            let mut pow = z;
            let mut order = 1;
            while pow != 1 {
                pow = pow * z % q;
                order += 1;
            }
            if order == m {
                let zinv = (1..q).find(|&w| z * w % q == 1).unwrap();
                return self.element([z, 0, 0, zinv]);
            }
        }
        None
    }
}

impl FiniteGroup for Sl2Table {
    fn size(&self) -> usize {
        self.mats.len()
    }
    fn identity(&self) -> usize {
        self.identity
    }
    fn mul(&self, x: usize, y: usize) -> usize {
        let q = self.q;
        let [a, b, c, d] = self.mats[x].map(u64::from);
        let [e, f, g, h] = self.mats[y].map(u64::from);
        let packed = (((a * e + b * g) % q * q + (a * f + b * h) % q) * q
            + (c * e + d * g) % q)
            * q
            + (c * f + d * h) % q;
        self.index[packed as usize] as usize
    }
    fn inv(&self, x: usize) -> usize {
        self.inv[x] as usize
    }
}

/// Brute-force count of twisted commutator solutions at a diagonal twist of
/// odd order m >= 3, paired with the value the generic counting polynomial
/// predicts.
pub fn sl2_generic_count(q: u64, m: u64, genus: u64) -> Result<(BigInt, BigInt)> {
    assert!(m >= 3 && m % 2 == 1, "odd twist order at least three");
    assert!((q - 1) % m == 0, "twist order must divide q - 1");
    let table = Sl2Table::new(q)?;
    let xi = table
        .regular_diagonal(m)
        .expect("cyclic F_q* contains every order dividing q - 1");
    let brute = commutator_count(&table, xi, genus);
    let predicted = typesum::n_total(1, genus)?.eval(&BigInt::from(q));
    Ok((brute, predicted))
}

/// The closed-form solution count at a twist of order four, which is only a
/// quasi-polynomial in q: the middle coefficient flips with (-1)^((q-1)/4).
pub fn sl2_quasi_expected(q: u64, genus: u64) -> BigInt {
    let e = 2 * genus as u32 - 1;
    let sign: i64 = if (q - 1) / 4 % 2 == 1 { -1 } else { 1 };
    let coeff = BigInt::from(sign * ((1i64 << (2 * genus)) - 1) - 1);
    let q = BigInt::from(q);
    let full = (q.pow(3) - &q).pow(e);
    let steinberg = (q.pow(2) - 1u64).pow(e);
    let halves = (q.pow(2) - &q).pow(e);
    full + steinberg + coeff * halves
}

/// Brute-force count at the order-four twist diag(i, -i), paired with the
/// quasi-polynomial prediction. Needs q = 1 mod 4 so that i exists.
pub fn sl2_quasi_count(q: u64, genus: u64) -> Result<(BigInt, BigInt)> {
    assert!(q % 4 == 1, "a square root of -1 needs q = 1 mod 4");
    let table = Sl2Table::new(q)?;
    let xi = table
        .regular_diagonal(4)
        .expect("q = 1 mod 4 provides an element of order four");
    let brute = commutator_count(&table, xi, genus);
    Ok((brute, sl2_quasi_expected(q, genus)))
}

/// The m-th cyclotomic polynomial, from the recursion
/// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d.
pub fn cyclotomic_polynomial(m: u64) -> IntPoly {
    let mut den = IntPoly::one();
    for d in 1..m {
        if m % d == 0 {
            den = &den * &cyclotomic_polynomial(d);
        }
    }
    let num = &IntPoly::monomial(BigInt::one(), m as usize) - &IntPoly::one();
    num.exact_div(&den)
        .expect("x^m - 1 is the product of the cyclotomics at divisors of m")
}

/// Exact arithmetic in Z[zeta_m] = Z[x] / Phi_m(x).
pub struct Cyclotomic {
    m: u64,
    phi: IntPoly,
}

impl Cyclotomic {
    pub fn new(m: u64) -> Self {
        Cyclotomic {
            m,
            phi: cyclotomic_polynomial(m),
        }
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn reduce(&self, p: &IntPoly) -> IntPoly {
        p.rem_by_monic(&self.phi)
    }

    /// zeta^e as a reduced element.
    pub fn zeta_pow(&self, e: u64) -> IntPoly {
        self.reduce(&IntPoly::monomial(BigInt::one(), (e % self.m) as usize))
    }

    /// gamma_e = zeta^e + zeta^(-e), the full character value of the pair of
    /// torus coordinates carrying exponent e.
    pub fn gamma(&self, e: u64) -> IntPoly {
        let e = e % self.m;
        &self.zeta_pow(e) + &self.zeta_pow((self.m - e) % self.m)
    }

    pub fn mul(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        self.reduce(&(a * b))
    }

    /// A reduced element that is claimed to be a rational integer.
    pub fn expect_integer(&self, a: &IntPoly) -> Result<BigInt> {
        if a.deg().map_or(true, |d| d == 0) {
            Ok(a.coeff(0))
        } else {
            Err(Error::NonRationalInteger)
        }
    }
}

/// An explicit regular twist: the diagonal torus element with coordinates
/// zeta_m^(e_1), .., zeta_m^(e_n) over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiSpec {
    pub m: u64,
    pub exponents: Vec<u64>,
    pub q: u64,
}

impl XiSpec {
    pub fn new(m: u64, exponents: Vec<u64>, q: u64) -> Self {
        XiSpec { m, exponents, q }
    }
}

/// A twist is generic when its centralizer is exactly the diagonal torus
/// and the counting coefficients become independent of q: q = 1 mod 2m, no
/// coordinate is a square root of one (2 e_i != 0 mod m), and no signed
/// subset sum of exponents vanishes mod m.
pub fn validate_generic(spec: &XiSpec) -> bool {
    let m = spec.m;
    if m < 3 || spec.q % (2 * m) != 1 {
        return false;
    }
    if spec.exponents.iter().any(|&e| 2 * e % m == 0) {
        return false;
    }
    let n = spec.exponents.len() as u32;
    for mask in 1..3u64.pow(n) {
        let mut rest = mask;
        let mut sum: i64 = 0;
        for &e in &spec.exponents {
            match rest % 3 {
                1 => sum += (e % m) as i64,
                2 => sum -= (e % m) as i64,
                _ => {}
            }
            rest /= 3;
        }
        if sum.rem_euclid(m as i64) == 0 {
            return false;
        }
    }
    true
}

/// The verification twists used for each rank: order m = 2^n + 1 with
/// exponents 1, 2, .., 2^(n-1) (generic because signed binary expansions of
/// zero are trivial), over the two smallest primes q = 1 mod 2m.
pub fn standard_xi_specs(n: usize) -> Vec<XiSpec> {
    assert!(n >= 1 && n < 20);
    let m = (1u64 << n) + 1;
    let exponents: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    let mut specs = Vec::new();
    let mut q = 2 * m + 1;
    while specs.len() < 2 {
        if is_prime(q) {
            specs.push(XiSpec::new(m, exponents.clone(), q));
        }
        q += 2 * m;
    }
    specs
}

/// Recomputes the type coefficient C_tau directly from its definition: sum
/// over the torus characters realizing the type of the product of their
/// values on the twist, in exact cyclotomic arithmetic.
///
/// Characters of the type are indexed by a set partition of the first c
/// coordinates with block sizes lambda and a choice of pairwise distinct
/// folded character exponents k_j in {1, .., (q-3)/2}, one per block; the
/// coordinate s inside block j contributes gamma(k_j e_s), and the trivial
/// and quadratic blocks contribute 1 because q = 1 mod 2m. The stabilizer
/// index and character dimension enter as the prefactor
/// dim(beta) n! / (c! alpha_1! alpha_eps!).
pub fn ctau_cyclotomic(tau: &PSType, spec: &XiSpec) -> Result<BigInt> {
    let n = tau.rank();
    assert_eq!(spec.exponents.len(), n, "one exponent per coordinate");
    let c: usize = tau.lambda.iter().sum();
    let field = Cyclotomic::new(spec.m);
    let ks: Vec<u64> = (1..=(spec.q - 3) / 2).collect();
    assert!(ks.len() >= tau.lambda.len(), "not enough characters to fill the blocks");

    fn assign(
        field: &Cyclotomic,
        exponents: &[u64],
        blocks: &[Vec<usize>],
        ks: &[u64],
        used: &mut Vec<bool>,
        acc: &IntPoly,
        total: &mut IntPoly,
    ) {
        let Some((block, rest)) = blocks.split_first() else {
            *total = &*total + acc;
            return;
        };
        for (i, &k) in ks.iter().enumerate() {
            if used[i] {
                continue;
            }
            let mut next = acc.clone();
            for &s in block {
                next = field.mul(&next, &field.gamma(k * exponents[s]));
            }
            used[i] = true;
            assign(field, exponents, rest, ks, used, &next, total);
            used[i] = false;
        }
    }

    let mut sum = IntPoly::zero();
    for pi in set_partitions_with_shape(c, &tau.lambda) {
        let mut used = vec![false; ks.len()];
        assign(
            &field,
            &spec.exponents,
            pi.blocks(),
            &ks,
            &mut used,
            &IntPoly::one(),
            &mut sum,
        );
    }
    let sum = field.expect_integer(&sum)?;

    let num = tau.dimension() * factorial(n);
    let den = factorial(c) * factorial(tau.alpha_one) * factorial(tau.alpha_eps);
    let (prefactor, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::NonIntegerC);
    }
    Ok(prefactor * sum)
}

/// Checks the closed-form C_tau against the cyclotomic recomputation for
/// every type of rank n under the given twist.
pub fn ctau_matches(n: usize, spec: &XiSpec) -> Result<bool> {
    for tau in typesum::enumerate_types(n) {
        if ctau_cyclotomic(&tau, spec)? != typesum::c_tau(&tau)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_structure() {
        let g = s3_group();
        assert_eq!(g.size(), 6);
        let id = g.identity();
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), id);
            assert_eq!(g.mul(id, a), a);
        }
        // Associativity spot check across all triples.
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        assert_eq!(conjugacy_class_of(&g).iter().max(), Some(&2));
    }

    #[test]
    fn s3_commutator_distribution() {
        let g = s3_group();
        let f = commutator_distribution(&g);
        let classes = s3_class_of();
        for (z, &count) in f.iter().enumerate() {
            let expect = match classes[z] {
                0 => 18,
                1 => 0,
                _ => 9,
            };
            assert_eq!(count, expect, "element {}", z);
        }
        assert_eq!(f.iter().sum::<u64>(), 36);
    }

    #[test]
    fn s3_frobenius_matches_brute_force() {
        let g = s3_group();
        let table = s3_character_table();
        let classes = s3_class_of();
        for genus in 1..=2u64 {
            for z in 0..6 {
                let brute = commutator_count(&g, z, genus);
                let frob = frobenius_count(&table, classes[z], genus).unwrap();
                assert_eq!(brute, frob, "genus {} element {}", genus, z);
            }
        }
    }

    #[test]
    fn frobenius_rejects_non_dividing_degree() {
        let bad = CharTable {
            order: 6,
            class_sizes: vec![1, 5],
            values: vec![vec![4, 1]],
        };
        assert_eq!(
            frobenius_count(&bad, 0, 1),
            Err(Error::NonIntegerResult)
        );
    }

    #[test]
    fn sl2_table_basics() {
        let g = Sl2Table::new(5).unwrap();
        assert_eq!(g.size(), 120);
        let id = g.identity();
        let x = g.element([1, 1, 0, 1]).unwrap();
        assert_eq!(g.mul(x, g.inv(x)), id);
        assert_eq!(g.element([2, 0, 0, 2]), None); // det 4
        assert!(matches!(
            Sl2Table::new(19),
            Err(Error::FieldTooLarge { q: 19, max: 17 })
        ));
    }

    #[test]
    fn sl2_commuting_pairs_and_class_invariance() {
        // f(1) counts commuting pairs: |G| times the class number, here
        // 120 * 9.
        let g = Sl2Table::new(5).unwrap();
        let f = commutator_distribution(&g);
        assert_eq!(f[g.identity()], 1080);
        assert_eq!(f.iter().sum::<u64>(), 14400);
        let class = conjugacy_class_of(&g);
        assert_eq!(class.iter().max(), Some(&8));
        for x in 0..g.size() {
            for y in (x + 1)..g.size() {
                if class[x] == class[y] {
                    assert_eq!(f[x], f[y], "class function");
                }
            }
        }
    }

    #[test]
    fn sl2_brute_force_generic_small() {
        let (brute, predicted) = sl2_generic_count(7, 3, 1).unwrap();
        assert_eq!(brute, BigInt::from(468));
        assert_eq!(predicted, BigInt::from(468));
    }

    #[test]
    fn sl2_brute_force_quasi_small() {
        let (brute, predicted) = sl2_quasi_count(5, 1).unwrap();
        assert_eq!(brute, BigInt::from(64));
        assert_eq!(predicted, BigInt::from(64));
        // The same data refuses to fit the generic polynomial: the generic
        // prediction at q = 5 would be 144 - 2 * 20 = 104.
        let generic = typesum::n_total(1, 1).unwrap().eval(&BigInt::from(5));
        assert_ne!(brute, generic);
    }

    #[test]
    fn cyclotomic_polynomials() {
        let poly = |coeffs: &[i64]| {
            IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
        };
        assert_eq!(cyclotomic_polynomial(1), poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), poly(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), poly(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(9), poly(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_arithmetic() {
        let field = Cyclotomic::new(5);
        // The sum of all primitive fifth roots of unity is -1.
        let sum = &field.gamma(1) + &field.gamma(2);
        assert_eq!(field.expect_integer(&sum).unwrap(), BigInt::from(-1));
        let prod = field.mul(&field.gamma(1), &field.gamma(2));
        assert_eq!(field.expect_integer(&prod).unwrap(), BigInt::from(-1));
        assert_eq!(
            field.expect_integer(&field.gamma(1)),
            Err(Error::NonRationalInteger)
        );
        assert_eq!(field.expect_integer(&field.gamma(0)).unwrap(), BigInt::from(2));
    }

    #[test]
    fn standard_specs_and_genericity() {
        assert_eq!(
            standard_xi_specs(1),
            vec![XiSpec::new(3, vec![1], 7), XiSpec::new(3, vec![1], 13)]
        );
        assert_eq!(
            standard_xi_specs(2),
            vec![XiSpec::new(5, vec![1, 2], 11), XiSpec::new(5, vec![1, 2], 31)]
        );
        assert_eq!(
            standard_xi_specs(3),
            vec![
                XiSpec::new(9, vec![1, 2, 4], 19),
                XiSpec::new(9, vec![1, 2, 4], 37)
            ]
        );
        for n in 1..=3 {
            for spec in standard_xi_specs(n) {
                assert!(validate_generic(&spec), "{:?}", spec);
            }
        }
        // Order four twists are the quasi-polynomial counterexample.
        assert!(!validate_generic(&XiSpec::new(4, vec![1], 5)));
        // Colliding exponents, wrong residue, square roots of one.
        assert!(!validate_generic(&XiSpec::new(3, vec![1, 1], 7)));
        assert!(!validate_generic(&XiSpec::new(5, vec![1, 2], 7)));
        assert!(!validate_generic(&XiSpec::new(6, vec![1, 3], 13)));
    }

    #[test]
    fn ctau_oracle_rank_one() {
        let spec = XiSpec::new(3, vec![1], 7);
        let types = typesum::enumerate_types(1);
        let values: Vec<BigInt> = types
            .iter()
            .map(|t| ctau_cyclotomic(t, &spec).unwrap())
            .collect();
        assert_eq!(values, [1, 1, 1, 1, -2].map(BigInt::from).to_vec());
        assert!(ctau_matches(1, &spec).unwrap());
        assert!(ctau_matches(1, &XiSpec::new(3, vec![1], 13)).unwrap());
    }

    #[test]
    fn ctau_oracle_rank_two() {
        assert!(ctau_matches(2, &XiSpec::new(5, vec![1, 2], 11)).unwrap());
    }

    #[test]
    fn ctau_oracle_galois_twist() {
        // Scaling all exponents by a unit mod m replaces zeta by another
        // primitive root; the integer coefficients cannot see the choice.
        let twisted = XiSpec::new(9, vec![2, 4, 8], 19);
        assert!(validate_generic(&twisted));
        for tau in typesum::enumerate_types(3).into_iter().step_by(7) {
            assert_eq!(
                ctau_cyclotomic(&tau, &twisted).unwrap(),
                typesum::c_tau(&tau).unwrap()
            );
        }
    }
}
