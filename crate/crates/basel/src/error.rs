use num_rational::BigRational;
use thiserror::Error;

/// Everything that can go wrong outside of plain programmer error.
///
/// Exact arithmetic cannot fail, so the variants are few: structural
/// underflow when dividing out powers of pi, a quadrature budget that ran
/// out before the requested radius was reached, an identity whose two sides
/// disagreed (always carries the witness), and an identity that is only
/// defined for even arguments.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Tried to divide a pi-polynomial by pi^k when some term has
    /// exponent < k.
    #[error("cannot divide by pi^{divisor_exponent}: term with exponent {term_exponent} would go negative")]
    DivisionExponentUnderflow {
        term_exponent: u32,
        divisor_exponent: u32,
    },

    /// Quadrature refinement hit its budget before the error estimate met
    /// the target radius.
    #[error("quadrature stalled at radius ~2^-{achieved_bits} after {levels} refinements (target 2^-{target_bits})")]
    PrecisionUnreachable {
        levels: u32,
        achieved_bits: i64,
        target_bits: u32,
    },

    /// An exact identity check failed. `index` is the smallest argument at
    /// which the two sides differ; both sides are carried as the witness.
    #[error("identity {identity:?} fails first at index {index}: lhs = {lhs}, rhs = {rhs}")]
    IdentityViolation {
        identity: &'static str,
        index: u64,
        lhs: BigRational,
        rhs: BigRational,
    },

    /// The even-argument sum identity was asked about an odd index.
    #[error("identity is stated for even arguments only, got {0}")]
    OddArgument(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
