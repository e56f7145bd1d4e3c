//! Randomized and exhaustive identity checks across the library.

use proptest::prelude::*;

use epoly::combinat::{
    f2_subspaces, moebius_partition, partitions_of, set_partitions, F2Subspace, SetPartition,
};
use epoly::exactpoly::{IntPoly, RatPoly};
use epoly::oracle::{
    commutator_distribution, ctau_cyclotomic, s3_character_table, s3_group, standard_xi_specs,
    validate_generic, FiniteGroup, Sl2Table, XiSpec,
};
use epoly::strata::kernel_partition;
use epoly::typesum::{c_tau, dual_type, enumerate_types};
use epoly::weylrep::{deg_b, irr_b, sign_dual_b};
use epoly::BigInt;

fn poly(max_len: usize, max_abs: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-max_abs..=max_abs, 0..max_len)
        .prop_map(|cs| IntPoly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
}

fn nonzero_poly(max_len: usize, max_abs: i64) -> impl Strategy<Value = IntPoly> {
    poly(max_len, max_abs).prop_map(|p| if p.is_zero() { IntPoly::one() } else { p })
}

proptest! {
    #[test]
    fn multiplying_then_dividing_roundtrips(a in poly(6, 30), b in nonzero_poly(6, 30)) {
        let product = &a * &b;
        prop_assert_eq!(product.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn reversal_is_an_involution(p in poly(6, 30), extra in 0usize..4) {
        let window = p.deg().unwrap_or(0) + extra;
        let twice = p.reverse(window).unwrap().reverse(window).unwrap();
        prop_assert_eq!(twice, p);
    }

    #[test]
    fn reversed_partner_products_are_palindromic(p in poly(6, 30), c in 1i64..30) {
        // Shift p up one degree and install a nonzero constant term, so the
        // reversal window is tight and the polynomial is never zero.
        let p = &(&p * &IntPoly::var()) + &IntPoly::constant_i64(c);
        let d = p.deg().unwrap();
        let product = &p * &p.reverse(d).unwrap();
        prop_assert!(product.is_palindromic(2 * d));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(6, 30), b in poly(6, 30), x in -50i64..50) {
        let x = BigInt::from(x);
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
    }

    #[test]
    fn rational_normal_forms_ignore_common_factors(a in poly(5, 20), c in 1i64..20, d in 1i64..20) {
        let scaled = RatPoly::new(a.scale(&BigInt::from(c)), BigInt::from(c * d));
        prop_assert_eq!(scaled, RatPoly::new(a, BigInt::from(d)));
    }

    #[test]
    fn spanning_sets_do_not_matter(
        n in 1usize..=4,
        picks in prop::collection::vec(0usize..16, 1..4),
        (i, j) in (0usize..4, 0usize..4),
    ) {
        let masks: Vec<u32> = picks.iter().map(|&p| (p % (1 << n)) as u32).collect();
        let space = F2Subspace::from_spanning(n, &masks);
        // Append a redundant combination and shuffle the generators.
        let mut extended = masks.clone();
        extended.push(masks[i % masks.len()] ^ masks[j % masks.len()]);
        extended.reverse();
        let same = F2Subspace::from_spanning(n, &extended);
        prop_assert_eq!(&space, &same);
        prop_assert_eq!(kernel_partition(&space), kernel_partition(&same));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn type_constants_survive_galois_twists(n in 1usize..=2, t in 1u64..5, which in 0usize..32) {
        let base = standard_xi_specs(n)[0].clone();
        // The twist orders here are 3 and 5, so any smaller t is a unit.
        prop_assume!(t < base.m);
        let twisted = XiSpec::new(
            base.m,
            base.exponents.iter().map(|e| e * t % base.m).collect(),
            base.q,
        );
        prop_assert!(validate_generic(&twisted));
        let types = enumerate_types(n);
        let tau = &types[which % types.len()];
        prop_assert_eq!(ctau_cyclotomic(tau, &twisted).unwrap(), c_tau(tau).unwrap());
    }
}

#[test]
fn moebius_alternating_sums_detect_the_top_partition() {
    for c in 1..=5 {
        let all = set_partitions(c);
        let top = SetPartition::new(c, vec![(0..c).collect()]);
        for pi in &all {
            let mut sum = BigInt::from(0);
            for sigma in &all {
                if pi.refines(sigma) {
                    sum += moebius_partition(pi, sigma).unwrap();
                }
            }
            let expected = BigInt::from(u32::from(*pi == top));
            assert_eq!(sum, expected, "c = {}, pi = {:?}", c, pi);
        }
    }
}

#[test]
fn subspace_counts_follow_gaussian_binomials() {
    for d in 0..=5usize {
        let mut by_dim = vec![0u64; d + 1];
        for s in f2_subspaces(d) {
            by_dim[s.dim()] += 1;
        }
        for (k, &count) in by_dim.iter().enumerate() {
            let mut expected = 1u64;
            for i in 0..k {
                expected = expected * ((1 << (d - i)) - 1) / ((1 << (i + 1)) - 1);
            }
            assert_eq!(count, expected, "d = {}, k = {}", d, k);
        }
    }
}

#[test]
fn bipartition_counts_match_the_generating_function() {
    // The number of bipartitions of m is the coefficient of T^m in
    // prod (1 - T^k)^(-2), computed here as a partition-count convolution.
    let p: Vec<usize> = (0..=10).map(|m| partitions_of(m).len()).collect();
    for m in 0..=10usize {
        let expected: usize = (0..=m).map(|a| p[a] * p[m - a]).sum();
        assert_eq!(irr_b(m).len(), expected, "m = {}", m);
    }
}

#[test]
fn partition_counts_satisfy_the_pentagonal_recurrence() {
    let p: Vec<i64> = (0..=20).map(|m| partitions_of(m).len() as i64).collect();
    for n in 1..=20usize {
        let mut sum = 0i64;
        let mut k = 1usize;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum += sign * p[n - g1];
            if g2 <= n {
                sum += sign * p[n - g2];
            }
            k += 1;
        }
        assert_eq!(p[n], sum, "n = {}", n);
    }
}

#[test]
fn sign_duality_is_an_involution_with_constant_dimension() {
    for m in 0..=4 {
        for label in irr_b(m) {
            let dual = sign_dual_b(&label);
            assert_eq!(sign_dual_b(&dual), label);
            assert_eq!(deg_b(&dual), deg_b(&label));
        }
    }
    for n in 1..=3 {
        for tau in enumerate_types(n) {
            assert_eq!(dual_type(&dual_type(&tau)), tau);
        }
    }
}

#[test]
fn type_constants_are_integers_through_rank_four() {
    for n in 1..=4 {
        for tau in enumerate_types(n) {
            assert!(c_tau(&tau).is_ok(), "type {}", tau);
        }
    }
}

#[test]
fn commutator_distributions_are_class_functions_symmetric_under_inverse() {
    let group = Sl2Table::new(3).unwrap();
    let f = commutator_distribution(&group);
    for z in 0..group.size() {
        assert_eq!(f[z], f[group.inv(z)], "inverse symmetry at {}", z);
    }
    let class = epoly::oracle::conjugacy_class_of(&group);
    for x in 0..group.size() {
        for y in 0..group.size() {
            if class[x] == class[y] {
                assert_eq!(f[x], f[y]);
            }
        }
    }
}

#[test]
fn commutator_totals_square_the_group_order() {
    let s3 = s3_group();
    let total: u64 = commutator_distribution(&s3).iter().sum();
    assert_eq!(total, 36);
    // The same total through the character table: sum over classes of
    // size times the Frobenius count.
    let table = s3_character_table();
    let by_table: BigInt = (0..3)
        .map(|c| {
            epoly::oracle::frobenius_count(&table, c, 1).unwrap() * table.class_sizes[c]
        })
        .sum();
    assert_eq!(by_table, BigInt::from(36));
}
