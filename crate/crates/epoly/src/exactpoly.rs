//! Dense univariate polynomials in q with arbitrary-precision integer
//! coefficients, plus the rational-scalar extension used for character
//! degrees.
//!
//! Every count in this crate is one of these values. Coefficients grow far
//! beyond 64 bits (the top-level sums raise degree-n(2n+1) polynomials to the
//! power 2g-1), so fixed-width integers are deliberately not used. Division
//! is always checked: the pipeline only ever divides where a theorem
//! guarantees exactness, which turns `NonExactDivision` into a bug detector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Integer polynomial in canonical form: coefficients ascending by degree,
/// no trailing zeros, the zero polynomial is the empty sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros into canonical form.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn constant_i64(c: i64) -> Self {
        IntPoly::constant(BigInt::from(c))
    }

    /// The monomial c * q^d.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        IntPoly { coeffs }
    }

    /// The variable q itself.
    pub fn var() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    /// The q-integer [n]_q = 1 + q + ... + q^(n-1), for n >= 1.
    pub fn q_int(n: usize) -> Self {
        assert!(n >= 1, "q_int requires n >= 1");
        IntPoly {
            coeffs: vec![BigInt::one(); n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of q^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// a^k with a^0 = 1, by repeated squaring.
    pub fn pow(&self, mut k: u64) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient a/b over the integers.
    ///
    /// Long division with a hard error on any nonzero remainder or
    /// non-integer intermediate coefficient, never silent truncation.
    pub fn exact_div(&self, b: &IntPoly) -> Result<IntPoly> {
        assert!(!b.is_zero(), "exact_div by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (da, db) = (self.deg().unwrap(), b.deg().unwrap());
        if da < db {
            return Err(Error::NonExactDivision(format!(
                "degree {} into degree {}",
                db, da
            )));
        }
        let lead_b = b.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = rem[i + db].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead_b);
            if !r.is_zero() {
                return Err(Error::NonExactDivision(format!(
                    "leading coefficient {} does not divide {}",
                    lead_b, top
                )));
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                let sub = bc * &c;
                rem[i + j] -= sub;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision("nonzero remainder".into()));
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Remainder of division by a monic polynomial; stays in integer
    /// coefficients because the divisor is monic.
    pub fn rem_by_monic(&self, b: &IntPoly) -> IntPoly {
        assert!(
            b.leading_coeff().is_one(),
            "rem_by_monic needs a monic divisor"
        );
        let db = b.deg().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        while rem.len() > db {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = rem.len() - db;
            for (j, bc) in b.coeffs.iter().take(db).enumerate() {
                let sub = bc * &top;
                rem[shift + j] -= sub;
            }
        }
        IntPoly::from_coeffs(rem)
    }

    /// Exact evaluation at an integer point, by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// q^d * a(1/q): the coefficient sequence reversed inside a window of
    /// length d+1, zero-padded. Requires d >= deg(a).
    pub fn reverse(&self, d: usize) -> Result<IntPoly> {
        if let Some(deg) = self.deg() {
            if d < deg {
                return Err(Error::DegreeTooLarge {
                    degree: deg,
                    window: d,
                });
            }
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }

    /// True iff the polynomial equals its own reversal in a window of
    /// length d+1.
    pub fn is_palindromic(&self, d: usize) -> bool {
        match self.reverse(d) {
            Ok(r) => r == *self,
            Err(_) => false,
        }
    }

    /// Serializes as {"var":"q","coeffs":["c0","c1",...]} with decimal
    /// strings ascending by degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": "q",
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Parses the [`to_json`](IntPoly::to_json) format back, normalizing.
    pub fn from_json(v: &serde_json::Value) -> Option<IntPoly> {
        if v.get("var")?.as_str()? != "q" {
            return None;
        }
        let coeffs = v
            .get("coeffs")?
            .as_array()?
            .iter()
            .map(|c| c.as_str()?.parse::<BigInt>().ok())
            .collect::<Option<Vec<_>>>()?;
        Some(IntPoly::from_coeffs(coeffs))
    }

    /// Renders with LaTeX exponents (q^{10} instead of q^10).
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (i, c)) in self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .enumerate()
        {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if i >= 1 {
                out.push('q');
            }
            if i >= 2 {
                if latex {
                    out.push_str(&format!("^{{{}}}", i));
                } else {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        // The product of nonzero leading coefficients is nonzero, so this is
        // already canonical.
        IntPoly { coeffs }
    }
}

/// Greatest common divisor of all coefficients (non-negative; zero only for
/// the zero polynomial).
fn content(p: &IntPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Integer polynomial divided by a positive integer, kept in reduced form
/// (the denominator shares no factor with the content of the numerator).
///
/// Character degrees live here: (q+1)/2 and friends are honest polynomials
/// over a scalar, never ratios of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    num: IntPoly,
    den: BigInt,
}

impl RatPoly {
    /// Builds num/den, normalizing the sign into the numerator and dividing
    /// out the gcd of den with the numerator's content.
    pub fn new(num: IntPoly, den: BigInt) -> Self {
        assert!(!den.is_zero(), "RatPoly with zero denominator");
        let (mut num, mut den) = if den.is_negative() {
            (-&num, -den)
        } else {
            (num, den)
        };
        if num.is_zero() {
            return RatPoly {
                num,
                den: BigInt::one(),
            };
        }
        let g = content(&num).gcd(&den);
        if !g.is_one() {
            num = IntPoly {
                coeffs: num.coeffs.iter().map(|c| c / &g).collect(),
            };
            den /= &g;
        }
        RatPoly { num, den }
    }

    pub fn from_int_poly(p: IntPoly) -> Self {
        RatPoly {
            num: p,
            den: BigInt::one(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(
            &(&self.num * &IntPoly::constant(rhs.den.clone()))
                + &(&rhs.num * &IntPoly::constant(self.den.clone())),
            &self.den * &rhs.den,
        )
    }

    pub fn scale(&self, c: &BigInt) -> RatPoly {
        RatPoly::new(self.num.scale(c), self.den.clone())
    }

    /// Exact evaluation at an integer point; errors unless the denominator
    /// divides the numerator's value.
    pub fn eval_exact(&self, x: &BigInt) -> Result<BigInt> {
        let v = self.num.eval(x);
        let (value, r) = v.div_rem(&self.den);
        if r.is_zero() {
            Ok(value)
        } else {
            Err(Error::NonExactDivision(format!(
                "value {} not divisible by {}",
                v, self.den
            )))
        }
    }

    /// Serializes like IntPoly with an extra "den" field.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.num.to_json();
        v.as_object_mut()
            .unwrap()
            .insert("den".into(), serde_json::Value::String(self.den.to_string()));
        v
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1 {
            write!(f, "{}/{}", self.num, self.den)
        } else {
            write!(f, "({})/{}", self.num, self.den)
        }
    }
}

/// Quotient of a group-order polynomial by a character degree:
/// exact_div(g * chi.den, chi.num), guaranteed integral for the degrees this
/// crate produces. A failure here means a degree formula is wrong.
pub fn ratpoly_div_group_order(g: &IntPoly, chi: &RatPoly) -> Result<IntPoly> {
    g.scale(chi.den()).exact_div(chi.num())
}
