//! zeta(2k) as an exact rational multiple of pi^(2k), by two independent
//! routes, plus a rigorous numeric bracket.
//!
//! Route one ("recurrence") solves the triangular system
//!
//! ```text
//! sum_{i=1}^{k} C_i (-1)^(i-1) (2k)! / (2k-2i+1)!  =  k / (2k+1)
//! ```
//!
//! for C_k given C_1..C_{k-1}; it involves no Bernoulli numbers at all.
//! Route two ("closed") is `C_k = (-1)^(k+1) 2^(2k) B_{2k} / (2 (2k)!)`.
//! The two derivations share nothing past basic integer arithmetic, so
//! exact structural equality of their outputs is a strong correctness
//! check for both; `verify_route_equality` performs it and reports the
//! first mismatch as a hard error with both sides attached.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use once_cell::sync::Lazy;

use crate::ball::ApproxReal;
use crate::bernoulli::{bernoulli_number, BernoulliConvention};
use crate::error::{Error, Result};
use crate::pi_poly::PiPolynomial;

/// An exact even zeta value: zeta(2k) = coefficient * pi^(2k).
///
/// Invariants: k >= 1 and the coefficient is strictly positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaEvenValue {
    pub k: u64,
    pub coefficient: BigRational,
}

impl ZetaEvenValue {
    pub fn new(k: u64, coefficient: BigRational) -> Self {
        assert!(k >= 1, "zeta(0) is not an even zeta value");
        assert!(
            coefficient.is_positive(),
            "zeta(2k) coefficients are positive"
        );
        ZetaEvenValue { k, coefficient }
    }

    /// The value as an element of Q[pi].
    pub fn pi_polynomial(&self) -> PiPolynomial {
        PiPolynomial::term(self.coefficient.clone(), 2 * self.k as u32)
    }

    /// Validated enclosure of the real value.
    pub fn eval(&self, precision_bits: u32) -> ApproxReal {
        self.pi_polynomial().eval(precision_bits)
    }
}

static RECURRENCE_TABLE: Lazy<Mutex<Vec<BigRational>>> = Lazy::new(|| Mutex::new(Vec::new()));

/// zeta(2k) via the triangular recurrence. Memoized, since C_k needs all
/// of C_1..C_{k-1}.
pub fn zeta_even_recurrence(k: u64) -> ZetaEvenValue {
    assert!(k >= 1);
    let k = k as usize;
    let mut table = RECURRENCE_TABLE.lock().unwrap();
    while table.len() < k {
        let m = table.len() as u64 + 1; // solving for C_m
        let two_m = 2 * m;
        let mut acc = BigRational::new(BigInt::from(m), BigInt::from(two_m + 1));
        for (idx, c) in table.iter().enumerate() {
            let i = idx as u64 + 1;
            let mut term = c * BigRational::from_integer(crate::rational::falling_factorial(
                two_m,
                2 * i - 1,
            ));
            if i % 2 == 0 {
                term = -term;
            }
            acc -= term;
        }
        // The i = m term is C_m (-1)^(m-1) (2m)!.
        let mut c_m = acc / BigRational::from_integer(crate::rational::factorial(two_m));
        if m % 2 == 0 {
            c_m = -c_m;
        }
        table.push(c_m);
    }
    ZetaEvenValue::new(k as u64, table[k - 1].clone())
}

/// The closed-form coefficient with a caller-supplied Bernoulli source
/// (the seam fault-injection tests use).
pub fn closed_coefficient_with(
    k: u64,
    bernoulli_source: &dyn Fn(u64) -> BigRational,
) -> BigRational {
    assert!(k >= 1);
    let numerator = BigRational::from_integer(BigInt::one() << (2 * k)) * bernoulli_source(2 * k);
    let mut c = numerator
        / BigRational::from_integer(crate::rational::factorial(2 * k) * BigInt::from(2));
    if k % 2 == 0 {
        c = -c;
    }
    c
}

/// zeta(2k) via the Bernoulli closed form.
pub fn zeta_even_closed(k: u64) -> ZetaEvenValue {
    let c = closed_coefficient_with(k, &|m| bernoulli_number(m, BernoulliConvention::Minus));
    ZetaEvenValue::new(k, c)
}

/// Check recurrence == closed form for k = 1..=max_k, with a pluggable
/// Bernoulli source on the closed side. Returns how many values were
/// checked; the error carries the first mismatch.
pub fn verify_route_equality_with(
    max_k: u64,
    bernoulli_source: &dyn Fn(u64) -> BigRational,
) -> Result<u64> {
    for k in 1..=max_k {
        let recurrence = zeta_even_recurrence(k).coefficient;
        let closed = closed_coefficient_with(k, bernoulli_source);
        if recurrence != closed {
            return Err(Error::IdentityViolation {
                identity: "zeta-even route equality",
                index: k,
                lhs: recurrence,
                rhs: closed,
            });
        }
    }
    Ok(max_k)
}

/// Check recurrence == closed form for k = 1..=max_k.
pub fn verify_route_equality(max_k: u64) -> Result<u64> {
    verify_route_equality_with(max_k, &|m| bernoulli_number(m, BernoulliConvention::Minus))
}

/// A rigorous bracket for zeta(2k) from its defining series: the partial
/// sum S_N in ball arithmetic (containment-true), plus the integral-test
/// tail bounds
///
/// ```text
/// (N+1)^(1-2k) / (2k-1)  <=  zeta(2k) - S_N  <=  N^(1-2k) / (2k-1)
/// ```
///
/// added to the endpoints exactly. The result provably contains zeta(2k).
pub fn zeta_even_numeric(k: u64, n_terms: u64, precision_bits: u32) -> ApproxReal {
    assert!(k >= 1 && n_terms >= 1);
    const GUARD: u32 = 32;
    let w = precision_bits + GUARD;
    let exponent = 2 * k as u32;
    let mut sum = ApproxReal::zero(w);
    for n in 1..=n_terms {
        let term = BigRational::new(BigInt::one(), BigInt::from(n).pow(exponent));
        sum = sum.add(&ApproxReal::from_rational(&term, w));
    }
    let denom = BigInt::from(2 * k - 1);
    let tail_lo = BigRational::new(
        BigInt::one(),
        &denom * BigInt::from(n_terms + 1).pow(exponent - 1),
    );
    let tail_hi = BigRational::new(
        BigInt::one(),
        &denom * BigInt::from(n_terms).pow(exponent - 1),
    );
    let lo = sum.lo() + tail_lo;
    let hi = sum.hi() + tail_hi;
    ApproxReal::from_interval(&lo, &hi, precision_bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{abs, parse_decimal, rat};

    const ZETA_2_REF: &str = "1.6449340668482264364724151666460251892189499012067984";
    const ZETA_6_REF: &str = "1.0173430619844491397145179297909205279018174900328545";

    /// 1 / 10^exp.
    fn tiny(exp: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(10u32).pow(exp))
    }

    #[test]
    fn known_coefficients_both_routes() {
        let expected = [
            rat(1, 6),
            rat(1, 90),
            rat(1, 945),
            rat(1, 9450),
            rat(1, 93555),
            rat(691, 638_512_875),
            rat(2, 18_243_225),
        ];
        for (i, c) in expected.iter().enumerate() {
            let k = i as u64 + 1;
            assert_eq!(&zeta_even_recurrence(k).coefficient, c, "recurrence k={k}");
            assert_eq!(&zeta_even_closed(k).coefficient, c, "closed k={k}");
        }
    }

    #[test]
    fn routes_agree_to_thirty() {
        assert_eq!(verify_route_equality(30), Ok(30));
    }

    #[test]
    fn corrupted_bernoulli_is_caught_at_first_use() {
        // Perturbing B_6 leaves k = 1, 2 untouched and breaks k = 3.
        let corrupt = |m: u64| {
            let real = bernoulli_number(m, BernoulliConvention::Minus);
            if m == 6 {
                real + rat(1, 1)
            } else {
                real
            }
        };
        match verify_route_equality_with(10, &corrupt) {
            Err(Error::IdentityViolation { index, lhs, rhs, .. }) => {
                assert_eq!(index, 3);
                assert_eq!(lhs, rat(1, 945));
                assert_ne!(lhs, rhs);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn eval_matches_references() {
        let z2 = zeta_even_closed(1).eval(200);
        let r2 = parse_decimal(ZETA_2_REF).unwrap();
        assert!(abs(&(z2.center() - r2)) < tiny(50));
        assert!(z2.radius_rational() < tiny(50));

        let z6 = zeta_even_closed(3).eval(200);
        let r6 = parse_decimal(ZETA_6_REF).unwrap();
        assert!(abs(&(z6.center() - r6)) < tiny(50));
    }

    #[test]
    fn numeric_bracket_contains_closed_form() {
        for k in 1..=6u64 {
            let bracket = zeta_even_numeric(k, 500, 96);
            // Evaluate the closed form well past the bracket's precision so
            // its own ball is negligibly small next to the bracket; the
            // bracket must then swallow it whole.
            let exact = zeta_even_closed(k).eval(220);
            assert!(
                bracket.contains_ball(&exact),
                "bracket misses closed form at k={k}"
            );
        }
    }

    #[test]
    fn numeric_bracket_tightens_with_more_terms() {
        let coarse = zeta_even_numeric(1, 100, 96);
        let fine = zeta_even_numeric(1, 1000, 96);
        assert!(fine.width() < coarse.width());
        assert!(coarse.contains_rational(&fine.center()));
    }

    #[test]
    fn value_struct_invariants() {
        let v = zeta_even_closed(2);
        assert_eq!(v.k, 2);
        assert_eq!(v.pi_polynomial().coefficient(4), rat(1, 90));
        assert_eq!(v.pi_polynomial().coefficient(2), rat(0, 1));
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn negative_coefficient_rejected() {
        let _ = ZetaEvenValue::new(1, rat(-1, 6));
    }
}
