//! Poincare polynomials and generic degrees for Weyl groups of types A, B
//! and D at equal parameters.
//!
//! The generic degree d_phi(q) of a character phi is the polynomial with
//! d_phi(q) * (principal series multiplicity data) dividing the group order;
//! what this crate needs are the two normalizations
//!
//!   d_phi(1) = dim(phi)        and       sum_phi d_phi(q) dim(phi) = P(q),
//!
//! where P is the Poincare polynomial of the Weyl group. Both identities are
//! enforced by tests over every rank used downstream, so a wrong constant
//! here cannot survive CI.
//!
//! Types B and D are computed from the two-row symbol of a bipartition. For
//! (alpha, beta) of total size m, pad alpha ascending to length s+1 (type B)
//! or s (type D) and beta to length s, set S = {a_i + i - 1} and
//! T = {b_j + j - 1}, and with
//!
//!   V(X) = prod_{x < y in X} (q^y - q^x),   M = prod_{a in S, b in T} (q^a + q^b),
//!
//! the degree is
//!
//!   d(q) = Theta(m) V(S) V(T) M / (2^c q^e prod_{x in S,T} prod_{k<=x} (q^2k - 1))
//!
//! with Theta(m) = prod_{i<=m}(q^2i - 1) for B and (q^m - 1) prod_{i<m}(q^2i - 1)
//! for D. The constants are pinned by invariance under the symbol shift
//! (S,T) -> ({0} u (S+1), {0} u (T+1)) and the value 1 on the trivial
//! character: c = s, e = sum_{k<s}(2k^2 + k) for B, and c = s - 1,
//! e = sum_{k<s}(2k^2 - k) for D. Split type D characters (alpha = beta)
//! share the symbol value halved.

use num_bigint::BigInt;

use crate::exactpoly::{IntPoly, RatPoly};
use crate::weylrep::{BLabel, DLabel};
use crate::{combinat, Result};

/// q^e - 1.
fn q_pow_minus_one(e: usize) -> IntPoly {
    &IntPoly::monomial(BigInt::from(1), e) - &IntPoly::one()
}

/// Poincare polynomial of S_m: the q-factorial [m]_q!.
pub fn poincare_a(m: usize) -> IntPoly {
    let mut p = IntPoly::one();
    for i in 1..=m {
        p = &p * &IntPoly::q_int(i);
    }
    p
}

/// Poincare polynomial of W(B_m): prod_{i=1}^m [2i]_q.
pub fn poincare_b(m: usize) -> IntPoly {
    let mut p = IntPoly::one();
    for i in 1..=m {
        p = &p * &IntPoly::q_int(2 * i);
    }
    p
}

/// Poincare polynomial of W(D_m): [m]_q * prod_{i=1}^{m-1} [2i]_q, with the
/// degenerate ranks 0 and 1 giving 1.
pub fn poincare_d(m: usize) -> IntPoly {
    if m == 0 {
        return IntPoly::one();
    }
    let mut p = IntPoly::q_int(m);
    for i in 1..m {
        p = &p * &IntPoly::q_int(2 * i);
    }
    p
}

/// Generic degree of the S_m-character lambda:
/// q^(n(lambda)) [m]_q! / prod_cells [hook]_q. Integral by the q-analogue of
/// the hook length formula.
pub fn generic_degree_a(lambda: &[usize]) -> Result<IntPoly> {
    let m: usize = lambda.iter().sum();
    let mut hooks = IntPoly::one();
    for h in combinat::hook_lengths(lambda).concat() {
        hooks = &hooks * &IntPoly::q_int(h);
    }
    let quot = poincare_a(m).exact_div(&hooks)?;
    Ok(&IntPoly::monomial(BigInt::from(1), combinat::n_stat(lambda)) * &quot)
}

/// Symbol row: parts sorted ascending, zero-padded to `len`, entry i shifted
/// by i.
fn symbol_row(parts: &[usize], len: usize) -> Vec<usize> {
    assert!(parts.len() <= len);
    let mut row: Vec<usize> = vec![0; len - parts.len()];
    row.extend(parts.iter().rev());
    row.iter().enumerate().map(|(i, &p)| p + i).collect()
}

/// prod_{i < j} (q^(x_j) - q^(x_i)) over a strictly increasing row.
fn vandermonde(row: &[usize]) -> IntPoly {
    let mut v = IntPoly::one();
    for j in 1..row.len() {
        for i in 0..j {
            v = &v * &(&IntPoly::monomial(BigInt::from(1), row[j])
                - &IntPoly::monomial(BigInt::from(1), row[i]));
        }
    }
    v
}

/// prod over both rows of prod_{k=1}^{x} (q^2k - 1).
fn symbol_hooks(s: &[usize], t: &[usize]) -> IntPoly {
    let mut h = IntPoly::one();
    for &x in s.iter().chain(t) {
        for k in 1..=x {
            h = &h * &q_pow_minus_one(2 * k);
        }
    }
    h
}

/// Shared numerator/denominator assembly; theta is the group-specific torus
/// factor, (c, e) the shift-normalization constants.
fn symbol_degree(
    theta: IntPoly,
    s: &[usize],
    t: &[usize],
    c: usize,
    e: usize,
) -> Result<RatPoly> {
    let mut num = &(&theta * &vandermonde(s)) * &vandermonde(t);
    for &a in s {
        for &b in t {
            num = &num
                * &(&IntPoly::monomial(BigInt::from(1), a)
                    + &IntPoly::monomial(BigInt::from(1), b));
        }
    }
    let den = &IntPoly::monomial(BigInt::from(1), e) * &symbol_hooks(s, t);
    let quot = num.exact_div(&den)?;
    Ok(RatPoly::new(quot, BigInt::from(1) << c))
}

/// Generic degree of the W(B_m)-character (alpha, beta).
pub fn generic_degree_b(label: &BLabel) -> Result<RatPoly> {
    let m = label.rank();
    let s_len = label.alpha.len().saturating_sub(1).max(label.beta.len());
    let s = symbol_row(&label.alpha, s_len + 1);
    let t = symbol_row(&label.beta, s_len);
    let mut theta = IntPoly::one();
    for i in 1..=m {
        theta = &theta * &q_pow_minus_one(2 * i);
    }
    let e: usize = (1..s_len).map(|k| 2 * k * k + k).sum();
    symbol_degree(theta, &s, &t, s_len, e)
}

/// Generic degree of the W(D_m)-character; the two split halves of a
/// degenerate symbol share the value.
pub fn generic_degree_d(label: &DLabel) -> Result<RatPoly> {
    let m = label.rank();
    if m == 0 {
        return Ok(RatPoly::from_int_poly(IntPoly::one()));
    }
    let s_len = label.first.len().max(label.second.len()).max(1);
    let s = symbol_row(&label.first, s_len);
    let t = symbol_row(&label.second, s_len);
    let mut theta = q_pow_minus_one(m);
    for i in 1..m {
        theta = &theta * &q_pow_minus_one(2 * i);
    }
    let e: usize = (1..s_len).map(|k| 2 * k * k - k).sum();
    let c = s_len - 1 + usize::from(label.split.is_some());
    symbol_degree(theta, &s, &t, c, e)
}

/// Checks both normalization identities for S_m: every generic degree
/// evaluates at 1 to the character dimension, and the dimension-weighted sum
/// of generic degrees is the Poincare polynomial.
pub fn degrees_consistent_a(m: usize) -> Result<bool> {
    let one = BigInt::from(1);
    let mut total = IntPoly::zero();
    for lambda in combinat::partitions_of(m) {
        let d = generic_degree_a(&lambda)?;
        let dim = crate::weylrep::deg_a(&lambda);
        if d.eval(&one) != dim {
            return Ok(false);
        }
        total = &total + &d.scale(&dim);
    }
    Ok(total == poincare_a(m))
}

/// The same two identities for W(B_m). Individual summands can carry a
/// denominator, so the sum is accumulated rationally.
pub fn degrees_consistent_b(m: usize) -> Result<bool> {
    let one = BigInt::from(1);
    let mut total = RatPoly::from_int_poly(IntPoly::zero());
    for label in crate::weylrep::irr_b(m) {
        let d = generic_degree_b(&label)?;
        let dim = crate::weylrep::deg_b(&label);
        if d.eval_exact(&one)? != dim {
            return Ok(false);
        }
        total = total.add(&d.scale(&dim));
    }
    Ok(total == RatPoly::from_int_poly(poincare_b(m)))
}

/// The same two identities for W(D_m).
pub fn degrees_consistent_d(m: usize) -> Result<bool> {
    let one = BigInt::from(1);
    let mut total = RatPoly::from_int_poly(IntPoly::zero());
    for label in crate::weylrep::irr_d(m) {
        let d = generic_degree_d(&label)?;
        let dim = crate::weylrep::deg_d(&label);
        if d.eval_exact(&one)? != dim {
            return Ok(false);
        }
        total = total.add(&d.scale(&dim));
    }
    Ok(total == RatPoly::from_int_poly(poincare_d(m)))
}
