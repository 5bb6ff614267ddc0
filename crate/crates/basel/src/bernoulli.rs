//! Bernoulli numbers in both sign conventions, and Bernoulli polynomials.
//!
//! The two conventions differ only at index 1: `Minus` takes B_1 = -1/2,
//! `Plus` takes B_1 = +1/2. Internally one memoized table holds the Minus
//! values, computed from the defining recurrence
//! `sum_{j=0}^{m} C(m+1, j) B_j = 0` for m >= 1; Plus is a patch at 1.
//! Every even index >= 2 agrees between the conventions and every odd
//! index >= 3 is zero, so the patch is the whole difference.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;

use crate::rational::binomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliConvention {
    /// B_1 = +1/2; recurrence sum C(m+1,j) B_j = m+1.
    Plus,
    /// B_1 = -1/2; recurrence sum C(m+1,j) B_j = 0.
    Minus,
}

impl fmt::Display for BernoulliConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BernoulliConvention::Plus => write!(f, "plus"),
            BernoulliConvention::Minus => write!(f, "minus"),
        }
    }
}

static MINUS_TABLE: Lazy<Mutex<Vec<BigRational>>> =
    Lazy::new(|| Mutex::new(vec![BigRational::one()]));

/// B_m in the requested convention. Memoized; the table extends itself on
/// demand, so asking for B_400 once makes every later lookup a clone.
pub fn bernoulli_number(m: u64, convention: BernoulliConvention) -> BigRational {
    if m == 1 && convention == BernoulliConvention::Plus {
        return BigRational::new(BigInt::one(), BigInt::from(2));
    }
    let m = m as usize;
    let mut table = MINUS_TABLE.lock().unwrap();
    while table.len() <= m {
        // B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1, j) B_j.
        let n = table.len() as u64;
        let mut acc = BigRational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += BigRational::from_integer(binomial(n + 1, j as u64)) * b;
        }
        let next = -acc / BigRational::from_integer(BigInt::from(n + 1));
        table.push(next);
    }
    table[m].clone()
}

/// A dense polynomial over Q in one variable, coefficients ascending.
///
/// Invariant: the coefficient vector is either empty (the zero
/// polynomial) or ends in a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        RationalPolynomial::default()
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero if beyond the degree).
    pub fn coefficient(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coefficient(i) + other.coefficient(i))
            .collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> RationalPolynomial {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &RationalPolynomial) -> RationalPolynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &BigRational) -> RationalPolynomial {
        if factor.is_zero() {
            return RationalPolynomial::zero();
        }
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// d/dx.
    pub fn derivative(&self) -> RationalPolynomial {
        if self.coeffs.len() <= 1 {
            return RationalPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    /// The antiderivative with constant term zero.
    pub fn integrate(&self) -> RationalPolynomial {
        if self.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / BigRational::from_integer(BigInt::from(i + 1))),
        );
        RationalPolynomial::from_coeffs(coeffs)
    }

    /// Exact definite integral over [lo, hi].
    pub fn definite_integral(&self, lo: &BigRational, hi: &BigRational) -> BigRational {
        let anti = self.integrate();
        anti.eval(hi) - anti.eval(lo)
    }

    /// p(1 - x), expanded exactly.
    pub fn reflect(&self) -> RationalPolynomial {
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            // (1 - x)^i = sum_j C(i, j) (-x)^j.
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                let mut term = c * BigRational::from_integer(binomial(i as u64, j as u64));
                if j % 2 == 1 {
                    term = -term;
                }
                *slot += term;
            }
        }
        RationalPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for RationalPolynomial {
    /// Descending powers: `x^2 + (-1)*x + (1/6)`. `0` when zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = if c.denom().is_one() && !c.is_negative() {
                c.to_string()
            } else {
                format!("({c})")
            };
            match i {
                0 => write!(f, "{coeff}")?,
                _ if c.is_one() => {
                    if i == 1 {
                        write!(f, "x")?
                    } else {
                        write!(f, "x^{i}")?
                    }
                }
                1 => write!(f, "{coeff}*x")?,
                _ => write!(f, "{coeff}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The n-th Bernoulli polynomial `B_n(x) = sum_j C(n, j) B_j x^(n-j)`,
/// built on the Minus-convention numbers (so `B_n(0)` is the Minus number
/// and `B_n(1)` the Plus one).
pub fn bernoulli_polynomial(n: u64) -> RationalPolynomial {
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    for j in 0..=n {
        let c = BigRational::from_integer(binomial(n, j))
            * bernoulli_number(j, BernoulliConvention::Minus);
        coeffs[(n - j) as usize] = c;
    }
    RationalPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    use BernoulliConvention::{Minus, Plus};

    #[test]
    fn frozen_number_table() {
        let expected: &[(u64, BigRational)] = &[
            (0, int(1)),
            (2, rat(1, 6)),
            (4, rat(-1, 30)),
            (6, rat(1, 42)),
            (8, rat(-1, 30)),
            (10, rat(5, 66)),
            (12, rat(-691, 2730)),
            (14, rat(7, 6)),
            (16, rat(-3617, 510)),
            (18, rat(43867, 798)),
            (20, rat(-174611, 330)),
        ];
        for (m, v) in expected {
            assert_eq!(&bernoulli_number(*m, Minus), v, "B_{m}");
            assert_eq!(&bernoulli_number(*m, Plus), v, "B_{m} (plus)");
        }
        assert_eq!(bernoulli_number(1, Minus), rat(-1, 2));
        assert_eq!(bernoulli_number(1, Plus), rat(1, 2));
    }

    #[test]
    fn odd_indices_above_one_vanish() {
        for m in (3..=41u64).step_by(2) {
            assert!(bernoulli_number(m, Minus).is_zero(), "B_{m}");
        }
    }

    #[test]
    fn defining_recurrences_hold() {
        for m in 1..=60u64 {
            let minus: BigRational = (0..=m)
                .map(|j| BigRational::from_integer(binomial(m + 1, j)) * bernoulli_number(j, Minus))
                .sum();
            assert_eq!(minus, BigRational::zero(), "minus recurrence at {m}");

            let plus: BigRational = (0..=m)
                .map(|j| BigRational::from_integer(binomial(m + 1, j)) * bernoulli_number(j, Plus))
                .sum();
            assert_eq!(plus, int(m as i64 + 1), "plus recurrence at {m}");
        }
    }

    fn is_prime(p: u64) -> bool {
        p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
    }

    #[test]
    fn von_staudt_clausen_structure() {
        // Independent oracle: B_2n plus the sum of 1/p over primes p with
        // (p-1) | 2n is an integer. This pins every even value without
        // reusing the recurrence that computed it.
        for n in 1..=30u64 {
            let m = 2 * n;
            let mut v = bernoulli_number(m, Minus);
            for p in 2..=(m + 1) {
                if is_prime(p) && m % (p - 1) == 0 {
                    v += BigRational::new(BigInt::one(), BigInt::from(p));
                }
            }
            assert!(v.denom().is_one(), "von Staudt-Clausen fails at B_{m}: {v}");
        }
    }

    #[test]
    fn conventions_differ_only_at_one() {
        for m in 0..=40u64 {
            let d = bernoulli_number(m, Plus) - bernoulli_number(m, Minus);
            if m == 1 {
                assert_eq!(d, int(1));
            } else {
                assert!(d.is_zero(), "difference at {m}");
            }
        }
    }

    #[test]
    fn polynomial_small_cases() {
        assert_eq!(bernoulli_polynomial(0), RationalPolynomial::from_coeffs(vec![int(1)]));
        assert_eq!(
            bernoulli_polynomial(1),
            RationalPolynomial::from_coeffs(vec![rat(-1, 2), int(1)])
        );
        assert_eq!(
            bernoulli_polynomial(2),
            RationalPolynomial::from_coeffs(vec![rat(1, 6), int(-1), int(1)])
        );
        assert_eq!(
            bernoulli_polynomial(3),
            RationalPolynomial::from_coeffs(vec![int(0), rat(1, 2), rat(-3, 2), int(1)])
        );
    }

    #[test]
    fn endpoints_give_both_conventions() {
        for n in 0..=25u64 {
            let p = bernoulli_polynomial(n);
            assert_eq!(p.eval(&int(0)), bernoulli_number(n, Minus), "B_{n}(0)");
            assert_eq!(p.eval(&int(1)), bernoulli_number(n, Plus), "B_{n}(1)");
        }
    }

    #[test]
    fn derivative_steps_down() {
        for n in 1..=25u64 {
            let lhs = bernoulli_polynomial(n).derivative();
            let rhs = bernoulli_polynomial(n - 1).scale(&int(n as i64));
            assert_eq!(lhs, rhs, "derivative of B_{n}");
        }
    }

    #[test]
    fn unit_interval_mean_is_zero() {
        assert_eq!(
            bernoulli_polynomial(0).definite_integral(&int(0), &int(1)),
            int(1)
        );
        for n in 1..=25u64 {
            assert_eq!(
                bernoulli_polynomial(n).definite_integral(&int(0), &int(1)),
                BigRational::zero(),
                "mean of B_{n}"
            );
        }
    }

    #[test]
    fn reflection_symmetry() {
        // B_n(1 - x) = (-1)^n B_n(x), as polynomials.
        for n in 0..=25u64 {
            let p = bernoulli_polynomial(n);
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(p.reflect(), p.scale(&sign), "reflection of B_{n}");
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(bernoulli_polynomial(2).to_string(), "x^2 + (-1)*x + (1/6)");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
        assert_eq!(
            RationalPolynomial::from_coeffs(vec![int(0), rat(1, 2)]).to_string(),
            "(1/2)*x"
        );
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-50i64..50, 1i64..50).prop_map(|(n, d)| rat(n, d))
    }

    fn small_poly() -> impl Strategy<Value = RationalPolynomial> {
        proptest::collection::vec(small_rational(), 0..8).prop_map(RationalPolynomial::from_coeffs)
    }

    proptest! {
        #[test]
        fn trailing_coefficient_nonzero(p in small_poly(), q in small_poly()) {
            for poly in [p.add(&q), p.sub(&q), p.derivative(), p.integrate()] {
                if let Some(last) = poly.coeffs().last() {
                    prop_assert!(!last.is_zero());
                }
            }
        }

        #[test]
        fn reflect_matches_pointwise(p in small_poly(), x in small_rational()) {
            let lhs = p.reflect().eval(&x);
            let rhs = p.eval(&(int(1) - &x));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn derivative_undoes_integrate(p in small_poly()) {
            prop_assert_eq!(p.integrate().derivative(), p);
        }

        #[test]
        fn eval_is_ring_homomorphism(p in small_poly(), q in small_poly(), x in small_rational()) {
            prop_assert_eq!(p.add(&q).eval(&x), p.eval(&x) + q.eval(&x));
            prop_assert_eq!(p.sub(&q).eval(&x), p.eval(&x) - q.eval(&x));
        }
    }
}
