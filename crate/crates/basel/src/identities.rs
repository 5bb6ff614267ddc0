//! Exact Bernoulli summation identities, checked index by index.
//!
//! Three families, plus a two-parameter generalization:
//!
//! ```text
//! even sum:      sum_{i=1}^{k} 2^(2i) B_{2i} C(2k, 2i) / (2k-2i+1)  =  2k / (2k+1)
//! full sum:      sum_{i=1}^{m} 2^i  B_i^+ C(m, i)     / (m-i+1)    =  (2m+1) / (m+1),  m even
//! binomial sum:  sum_{i=1}^{2k} 2^i B_i^+ C(2k+1, i)               =  4k + 1
//! generalized:   sum_{i=1}^{2kx} x^i B_i C(2kx+1, i)               (convention-dependent)
//! ```
//!
//! The full sum restricted to even indices recovers the even sum: odd
//! i >= 3 contribute nothing (B vanishes) and i = 1 contributes exactly 1,
//! which is also the gap between the right-hand sides. The checkers verify
//! both sides exactly and report the *first* failing index with both
//! values as a witness, because "which index broke" is the entire
//! diagnostic value of an exact check.
//!
//! Every checker takes the Bernoulli numbers through a closure seam so
//! tests (and the CLI's hidden corruption flag) can inject a wrong value
//! and confirm the failure is caught at its first use.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli_number, BernoulliConvention};
use crate::error::{Error, Result};
use crate::rational::binomial;

/// A Bernoulli source: index -> value. Checkers never call the memoized
/// table directly so faults can be injected between them and it.
pub type BernoulliSource<'a> = &'a (dyn Fn(u64) -> BigRational + Sync);

/// The standard source: the memoized Minus-convention table (identical to
/// Plus at every index the even-indexed identities touch).
pub fn standard_source() -> impl Fn(u64) -> BigRational + Sync {
    |m| bernoulli_number(m, BernoulliConvention::Minus)
}

/// Plus-convention source, for the identities whose i = 1 term matters.
pub fn plus_source() -> impl Fn(u64) -> BigRational + Sync {
    |m| bernoulli_number(m, BernoulliConvention::Plus)
}

/// Outcome of checking one identity over an index range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityStatus {
    AllPass,
    FirstFailure {
        index: u64,
        lhs: BigRational,
        rhs: BigRational,
    },
}

/// One identity family checked over an inclusive range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// Suite name as the CLI knows it.
    pub identity: &'static str,
    pub lo: u64,
    pub hi: u64,
    /// How many indices were actually evaluated (the full sum skips odd
    /// ones, so this can be less than hi - lo + 1).
    pub checked: u64,
    pub status: IdentityStatus,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == IdentityStatus::AllPass
    }

    /// Convert to the error form, for callers that want to bail.
    pub fn into_result(self) -> Result<u64> {
        match self.status {
            IdentityStatus::AllPass => Ok(self.checked),
            IdentityStatus::FirstFailure { index, lhs, rhs } => Err(Error::IdentityViolation {
                identity: self.identity,
                index,
                lhs,
                rhs,
            }),
        }
    }
}

/// Both sides of the even sum at k, with an injectable Bernoulli source.
pub fn even_sum_identity_with(k: u64, bern: BernoulliSource) -> (BigRational, BigRational) {
    assert!(k >= 1);
    let mut lhs = BigRational::zero();
    for i in 1..=k {
        lhs += BigRational::from_integer(BigInt::one() << (2 * i))
            * bern(2 * i)
            * BigRational::new(binomial(2 * k, 2 * i), BigInt::from(2 * k - 2 * i + 1));
    }
    let rhs = BigRational::new(BigInt::from(2 * k), BigInt::from(2 * k + 1));
    (lhs, rhs)
}

/// Both sides of the even sum at k.
pub fn even_sum_identity(k: u64) -> (BigRational, BigRational) {
    even_sum_identity_with(k, &standard_source())
}

/// Both sides of the full sum at even m; [`Error::OddArgument`] otherwise.
/// The identity lives in the Plus convention, so pass a source whose
/// index 1 is +1/2 (see [`plus_source`]).
pub fn full_sum_identity_with(m: u64, bern: BernoulliSource) -> Result<(BigRational, BigRational)> {
    if m % 2 != 0 || m == 0 {
        return Err(Error::OddArgument(m));
    }
    let mut lhs = BigRational::zero();
    for i in 1..=m {
        lhs += BigRational::from_integer(BigInt::one() << i)
            * bern(i)
            * BigRational::new(binomial(m, i), BigInt::from(m - i + 1));
    }
    let rhs = BigRational::new(BigInt::from(2 * m + 1), BigInt::from(m + 1));
    Ok((lhs, rhs))
}

/// Both sides of the full sum at even m, Plus convention.
pub fn full_sum_identity(m: u64) -> Result<(BigRational, BigRational)> {
    full_sum_identity_with(m, &plus_source())
}

/// Both sides of the binomial sum at k (Plus convention source expected).
pub fn binomial_sum_identity_with(k: u64, bern: BernoulliSource) -> (BigRational, BigRational) {
    assert!(k >= 1);
    let mut lhs = BigRational::zero();
    for i in 1..=2 * k {
        lhs += BigRational::from_integer(BigInt::one() << i)
            * bern(i)
            * BigRational::from_integer(binomial(2 * k + 1, i));
    }
    (lhs, BigRational::from_integer(BigInt::from(4 * k + 1)))
}

/// Both sides of the binomial sum at k.
pub fn binomial_sum_identity(k: u64) -> (BigRational, BigRational) {
    binomial_sum_identity_with(k, &plus_source())
}

/// The generalized sum `sum_{i=1}^{2kx} x^i B_i C(2kx+1, i)` in the given
/// convention. The two conventions differ exactly in the i = 1 term, so
/// Plus minus Minus is always `x (2kx + 1)`.
pub fn generalized_sum(x: u64, k: u64, convention: BernoulliConvention) -> BigRational {
    assert!(x >= 1 && k >= 1);
    let top = 2 * k * x;
    let x_big = BigInt::from(x);
    let mut x_pow = BigInt::one();
    let mut acc = BigRational::zero();
    for i in 1..=top {
        x_pow *= &x_big;
        acc += BigRational::from_integer(&x_pow * binomial(top + 1, i))
            * bernoulli_number(i, convention);
    }
    acc
}

/// Check the even sum for k = 1..=max_k.
pub fn check_even_sum(max_k: u64, bern: BernoulliSource) -> IdentityReport {
    check_indices("lemma14", 1, max_k, (1..=max_k).map(|k| (k, true)), |k| {
        even_sum_identity_with(k, bern)
    })
}

/// Check the full sum for even m = 2..=max_m.
pub fn check_full_sum(max_m: u64, bern: BernoulliSource) -> IdentityReport {
    check_indices(
        "eq11",
        2,
        max_m,
        (2..=max_m).map(|m| (m, m % 2 == 0)),
        |m| full_sum_identity_with(m, bern).expect("even m only"),
    )
}

/// Check the binomial sum for k = 1..=max_k.
pub fn check_binomial_sum(max_k: u64, bern: BernoulliSource) -> IdentityReport {
    check_indices("eq12", 1, max_k, (1..=max_k).map(|k| (k, true)), |k| {
        binomial_sum_identity_with(k, bern)
    })
}

fn check_indices(
    identity: &'static str,
    lo: u64,
    hi: u64,
    indices: impl Iterator<Item = (u64, bool)>,
    mut sides: impl FnMut(u64) -> (BigRational, BigRational),
) -> IdentityReport {
    let mut checked = 0;
    for (index, eligible) in indices {
        if !eligible {
            continue;
        }
        checked += 1;
        let (lhs, rhs) = sides(index);
        if lhs != rhs {
            return IdentityReport {
                identity,
                lo,
                hi,
                checked,
                status: IdentityStatus::FirstFailure { index, lhs, rhs },
            };
        }
    }
    IdentityReport {
        identity,
        lo,
        hi,
        checked,
        status: IdentityStatus::AllPass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    use BernoulliConvention::{Minus, Plus};

    #[test]
    fn even_sum_frozen_instances() {
        for (k, num, den) in [(1u64, 2i64, 3i64), (2, 4, 5), (5, 10, 11), (20, 40, 41)] {
            let (lhs, rhs) = even_sum_identity(k);
            assert_eq!(rhs, rat(num, den), "rhs at k={k}");
            assert_eq!(lhs, rhs, "identity at k={k}");
        }
    }

    #[test]
    fn full_sum_frozen_instances() {
        for (m, num, den) in [(2u64, 5i64, 3i64), (4, 9, 5), (10, 21, 11)] {
            let (lhs, rhs) = full_sum_identity(m).unwrap();
            assert_eq!(rhs, rat(num, den), "rhs at m={m}");
            assert_eq!(lhs, rhs, "identity at m={m}");
        }
    }

    #[test]
    fn full_sum_rejects_odd() {
        assert_eq!(full_sum_identity(3), Err(Error::OddArgument(3)));
        assert_eq!(full_sum_identity(0), Err(Error::OddArgument(0)));
    }

    #[test]
    fn binomial_sum_frozen_instances() {
        for (k, expect) in [(1u64, 5i64), (2, 9), (5, 21)] {
            let (lhs, rhs) = binomial_sum_identity(k);
            assert_eq!(rhs, int(expect), "rhs at k={k}");
            assert_eq!(lhs, rhs, "identity at k={k}");
        }
    }

    #[test]
    fn full_sum_extends_even_sum_by_one() {
        // The odd-index terms of the full sum collapse to exactly 1.
        for k in 1..=30u64 {
            let (full_lhs, full_rhs) = full_sum_identity(2 * k).unwrap();
            let (even_lhs, even_rhs) = even_sum_identity(k);
            assert_eq!(&full_lhs - &even_lhs, int(1), "lhs gap at k={k}");
            assert_eq!(full_rhs - even_rhs, int(1), "rhs gap at k={k}");
        }
    }

    #[test]
    fn generalized_sum_frozen_instances() {
        assert_eq!(generalized_sum(1, 1, Plus), int(2));
        assert_eq!(generalized_sum(1, 3, Plus), int(6));
        assert_eq!(generalized_sum(1, 1, Minus), int(-1));
        assert_eq!(generalized_sum(1, 3, Minus), int(-1));
        assert_eq!(generalized_sum(2, 1, Plus), int(9));
        assert_eq!(generalized_sum(2, 2, Plus), int(17));
        assert_eq!(generalized_sum(3, 1, Plus), int(69));
        assert_eq!(generalized_sum(3, 1, Minus), int(48));
    }

    #[test]
    fn generalized_sum_closed_forms() {
        // Plus at x = 1 telescopes to 2k; Minus at x = 1 to -1; and at
        // x = 2 the Plus sum matches the binomial sum at index 2k.
        for k in 1..=12u64 {
            assert_eq!(generalized_sum(1, k, Plus), int(2 * k as i64));
            assert_eq!(generalized_sum(1, k, Minus), int(-1));
            let (binom_lhs, _) = binomial_sum_identity(2 * k);
            assert_eq!(generalized_sum(2, k, Plus), binom_lhs);
            assert_eq!(generalized_sum(2, k, Plus), int(8 * k as i64 + 1));
        }
    }

    #[test]
    fn convention_difference_law() {
        for x in 1..=5u64 {
            for k in 1..=5u64 {
                let diff = generalized_sum(x, k, Plus) - generalized_sum(x, k, Minus);
                assert_eq!(
                    diff,
                    int((x * (2 * k * x + 1)) as i64),
                    "difference at x={x}, k={k}"
                );
            }
        }
    }

    #[test]
    fn reports_all_pass() {
        let bern = standard_source();
        let plus = plus_source();
        let r = check_even_sum(25, &bern);
        assert!(r.passed());
        assert_eq!((r.lo, r.hi, r.checked), (1, 25, 25));

        let r = check_full_sum(25, &plus);
        assert!(r.passed());
        assert_eq!((r.lo, r.hi, r.checked), (2, 25, 12));

        let r = check_binomial_sum(25, &plus);
        assert!(r.passed());
        assert_eq!(r.checked, 25);
    }

    #[test]
    fn corruption_is_caught_at_first_use() {
        // Perturb B_4: even sum first touches it at k = 2, the full sum
        // at m = 4, the binomial sum at k = 2.
        let corrupt = |m: u64| {
            let real = bernoulli_number(m, BernoulliConvention::Plus);
            if m == 4 {
                real + int(1)
            } else {
                real
            }
        };
        let r = check_even_sum(10, &corrupt);
        match r.status {
            IdentityStatus::FirstFailure { index, .. } => assert_eq!(index, 2),
            _ => panic!("even sum should fail"),
        }
        let r = check_full_sum(10, &corrupt);
        match r.status {
            IdentityStatus::FirstFailure { index, .. } => assert_eq!(index, 4),
            _ => panic!("full sum should fail"),
        }
        let r = check_binomial_sum(10, &corrupt);
        match r.status {
            IdentityStatus::FirstFailure { index, lhs, rhs } => {
                assert_eq!(index, 2);
                assert_ne!(lhs, rhs);
            }
            _ => panic!("binomial sum should fail"),
        }
    }

    #[test]
    fn into_result_carries_witness() {
        let corrupt = |m: u64| {
            let real = bernoulli_number(m, BernoulliConvention::Plus);
            if m == 2 {
                real + int(1)
            } else {
                real
            }
        };
        let err = check_binomial_sum(5, &corrupt).into_result().unwrap_err();
        match err {
            Error::IdentityViolation { identity, index, .. } => {
                assert_eq!(identity, "eq12");
                assert_eq!(index, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
