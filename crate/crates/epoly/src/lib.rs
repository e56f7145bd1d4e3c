//! Exact computation of the E-polynomials of parabolic Sp(2n)-character
//! varieties by point counting over finite fields.
//!
//! The pipeline enumerates the principal-series types of Sp(2n, F_q),
//! computes each character degree from Poincaré polynomials and Hecke-algebra
//! generic degrees, and assembles the count of 2g-tuples with prescribed
//! commutator product as an integer polynomial in q. Dividing by the free
//! torus factor (q-1)^n yields the E-polynomial. A stratification by sign
//! subgroups refines the count via Möbius inversion on the subgroup lattice,
//! and the [`oracle`] module provides independent ground truth (brute-force
//! matrix enumeration, the Frobenius character-sum formula, and exact
//! cyclotomic evaluation of the type constants).
//!
//! All arithmetic is exact: big-integer coefficients, hard errors on any
//! division that fails to be exact. There is no floating point anywhere.

pub mod combinat;
pub mod exactpoly;
pub mod heckedeg;
pub mod oracle;
pub mod strata;
pub mod typesum;
pub mod weylrep;

/// Big integers appear throughout the public API; re-exported so dependents
/// never need to match the num-bigint version by hand.
pub use num_bigint::BigInt;

/// Errors shared across the crate.
///
/// Most divisions performed by the pipeline are exact by a theorem; the
/// corresponding variants signal internal inconsistencies (a wrong formula or
/// a transcription bug), not user mistakes, and callers usually treat them as
/// fatal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Polynomial division left a remainder or a non-integer coefficient.
    #[error("non-exact polynomial division: {0}")]
    NonExactDivision(String),
    /// A reversal window smaller than the polynomial degree was requested.
    #[error("reversal window {window} is smaller than the degree {degree}")]
    DegreeTooLarge { degree: usize, window: usize },
    /// Möbius function of the set-partition poset queried outside the order.
    #[error("set partitions are not comparable under refinement")]
    NotComparable,
    /// The closed-form type constant failed to be an integer.
    #[error("type constant is not an integer")]
    NonIntegerC,
    /// A cyclotomic sum that must be a rational integer had a nonconstant part.
    #[error("cyclotomic value is not a rational integer")]
    NonRationalInteger,
    /// Subgroup-lattice Möbius function queried on an incomparable pair.
    #[error("subgroup is not contained in the alleged overgroup")]
    NotContained,
    /// Brute-force enumeration requested for a field beyond desk scale.
    #[error("field size {q} exceeds the brute-force limit {max}")]
    FieldTooLarge { q: u64, max: u64 },
    /// A character sum that must be an integer was not.
    #[error("character sum is not an integer")]
    NonIntegerResult,
}

pub type Result<T> = std::result::Result<T, Error>;
