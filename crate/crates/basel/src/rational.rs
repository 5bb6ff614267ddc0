//! Exact rational scalars and the integer combinatorics built on them.
//!
//! Everything downstream (Bernoulli numbers, zeta coefficients, identity
//! checks) reduces to `BigRational` arithmetic plus factorials, binomials
//! and falling factorials. Factorials are memoized process-wide: the suites
//! ask for the same (2k)! thousands of times and a 1,700-digit integer is
//! not something to recompute in a loop.

use std::sync::Mutex;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

/// Shorthand for small rational literals: `rat(1, 6)` is 1/6.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for integer-valued rationals.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

static FACTORIALS: Lazy<Mutex<Vec<BigInt>>> = Lazy::new(|| Mutex::new(vec![BigInt::one()]));

/// n!, memoized. Extends the table on demand and clones out of it, so the
/// lock is held only briefly.
pub fn factorial(n: u64) -> BigInt {
    let n = n as usize;
    let mut table = FACTORIALS.lock().unwrap();
    while table.len() <= n {
        let next = table.last().unwrap() * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient C(n, r); zero when r > n.
pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    // Exact by construction: r! (n-r)! divides n!.
    factorial(n) / (factorial(r) * factorial(n - r))
}

/// Falling factorial n (n-1) ... (n-len+1), i.e. n! / (n-len)!.
/// `len` must not exceed n.
pub fn falling_factorial(n: u64, len: u64) -> BigInt {
    assert!(len <= n, "falling_factorial({n}, {len}) would cross zero");
    let mut acc = BigInt::one();
    for j in 0..len {
        acc *= BigInt::from(n - j);
    }
    acc
}

/// Parse a plain decimal literal ("3.14", "-0.5", "42") into an exact
/// rational. Used by tests to freeze reference constants.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, s),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = digits.parse().ok()?;
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(BigRational::new(BigInt::from(sign) * num, den))
}

/// Exact sum_{n=lo..=hi} sign(n) / n^power, by divide-and-conquer so the
/// intermediate gcd reductions stay balanced instead of grinding one giant
/// denominator per step.
fn tree_sum(lo: u64, hi: u64, power: u32, alternating: bool) -> BigRational {
    debug_assert!(lo <= hi);
    if lo == hi {
        let mut term = BigRational::new(BigInt::one(), BigInt::from(lo).pow(power));
        if alternating && lo % 2 == 1 {
            term = -term;
        }
        return term;
    }
    let mid = lo + (hi - lo) / 2;
    tree_sum(lo, mid, power, alternating) + tree_sum(mid + 1, hi, power, alternating)
}

/// Exact partial sum sum_{n=1}^{N} 1 / n^power.
pub fn sum_inverse_powers(n_max: u64, power: u32) -> BigRational {
    assert!(n_max >= 1 && power >= 1);
    tree_sum(1, n_max, power, false)
}

/// Exact alternating partial sum sum_{n=1}^{N} (-1)^n / n^power.
pub fn alternating_sum_inverse_powers(n_max: u64, power: u32) -> BigRational {
    assert!(n_max >= 1 && power >= 1);
    tree_sum(1, n_max, power, true)
}

/// |q| as a rational.
pub fn abs(q: &BigRational) -> BigRational {
    if q.is_negative() {
        -q
    } else {
        q.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(10), BigInt::from(3_628_800u64));
    }

    #[test]
    fn factorial_agrees_with_direct_product() {
        let mut acc = BigInt::one();
        for n in 1..=30u64 {
            acc *= BigInt::from(n);
            assert_eq!(factorial(n), acc);
        }
    }

    #[test]
    fn binomial_matches_pascal() {
        // Independent oracle: Pascal's triangle by addition only.
        let mut row = vec![BigInt::one()];
        for n in 1..=40u64 {
            let mut next = vec![BigInt::one()];
            for r in 1..n as usize {
                next.push(&row[r - 1] + &row[r]);
            }
            next.push(BigInt::one());
            row = next;
            for (r, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, r as u64), v, "C({n},{r})");
            }
        }
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn falling_factorial_matches_quotient() {
        for n in 1..=20u64 {
            for len in 0..=n {
                assert_eq!(
                    falling_factorial(n, len),
                    factorial(n) / factorial(n - len),
                    "ff({n},{len})"
                );
            }
        }
    }

    #[test]
    fn parse_decimal_round_trips() {
        assert_eq!(parse_decimal("3.14").unwrap(), rat(314, 100));
        assert_eq!(parse_decimal("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_decimal("42").unwrap(), int(42));
        assert_eq!(parse_decimal("0.0625").unwrap(), rat(1, 16));
        assert!(parse_decimal("").is_none());
        assert!(parse_decimal("1.2.3").is_none());
        assert!(parse_decimal("abc").is_none());
    }

    #[test]
    fn tree_sums_match_naive_fold() {
        for power in 1..=4u32 {
            for n_max in 1..=50u64 {
                let naive: BigRational = (1..=n_max)
                    .map(|n| BigRational::new(BigInt::one(), BigInt::from(n).pow(power)))
                    .sum();
                assert_eq!(sum_inverse_powers(n_max, power), naive);

                let naive_alt: BigRational = (1..=n_max)
                    .map(|n| {
                        let t = BigRational::new(BigInt::one(), BigInt::from(n).pow(power));
                        if n % 2 == 1 {
                            -t
                        } else {
                            t
                        }
                    })
                    .sum();
                assert_eq!(alternating_sum_inverse_powers(n_max, power), naive_alt);
            }
        }
    }

    #[test]
    fn harmonic_square_reference() {
        // H_4^(2) = 1 + 1/4 + 1/9 + 1/16 = 205/144.
        assert_eq!(sum_inverse_powers(4, 2), rat(205, 144));
        // sum_{n=1}^{3} (-1)^n / n^2 = -1 + 1/4 - 1/9 = -31/36.
        assert_eq!(alternating_sum_inverse_powers(3, 2), rat(-31, 36));
    }
}
