//! Exact polynomials in pi with rational coefficients.
//!
//! Values such as zeta(2k) and the cosine moments live in the ring
//! Q[pi]: finite sums `sum_e c_e * pi^e`. Keeping them symbolic makes
//! equality *structural* (pi is transcendental, so two such sums are equal
//! as reals exactly when they are equal coefficient-by-coefficient), which
//! is what lets identity checks be exact instead of numeric.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::ball::ApproxReal;
use crate::error::{Error, Result};

/// A finite sum of rational multiples of powers of pi.
///
/// Invariant: no stored coefficient is zero, so the map is a canonical
/// form and `==` decides equality in Q[pi].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PiPolynomial {
    terms: BTreeMap<u32, BigRational>,
}

impl PiPolynomial {
    pub fn zero() -> Self {
        PiPolynomial::default()
    }

    /// The single term `coefficient * pi^exponent`.
    pub fn term(coefficient: BigRational, exponent: u32) -> Self {
        let mut p = PiPolynomial::zero();
        p.add_term(coefficient, exponent);
        p
    }

    pub fn constant(c: BigRational) -> Self {
        PiPolynomial::term(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of pi^exponent (zero if absent).
    pub fn coefficient(&self, exponent: u32) -> BigRational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, coefficient: BigRational, exponent: u32) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigRational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn add(&self, other: &PiPolynomial) -> PiPolynomial {
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(c.clone(), e);
        }
        out
    }

    pub fn neg(&self) -> PiPolynomial {
        let mut out = PiPolynomial::zero();
        for (e, c) in self.iter() {
            out.add_term(-c.clone(), e);
        }
        out
    }

    pub fn sub(&self, other: &PiPolynomial) -> PiPolynomial {
        self.add(&other.neg())
    }

    /// Multiply every coefficient by a rational.
    pub fn scale(&self, factor: &BigRational) -> PiPolynomial {
        let mut out = PiPolynomial::zero();
        for (e, c) in self.iter() {
            out.add_term(c * factor, e);
        }
        out
    }

    /// Multiply by pi^k (shift every exponent up).
    pub fn mul_pi_pow(&self, k: u32) -> PiPolynomial {
        let mut out = PiPolynomial::zero();
        for (e, c) in self.iter() {
            out.add_term(c.clone(), e + k);
        }
        out
    }

    /// Divide by pi^k (shift every exponent down). Fails with
    /// [`Error::DivisionExponentUnderflow`] if any term's exponent is
    /// smaller than k: the quotient would leave Q[pi].
    pub fn div_pi_pow(&self, k: u32) -> Result<PiPolynomial> {
        let mut out = PiPolynomial::zero();
        for (e, c) in self.iter() {
            if e < k {
                return Err(Error::DivisionExponentUnderflow {
                    term_exponent: e,
                    divisor_exponent: k,
                });
            }
            out.add_term(c.clone(), e - k);
        }
        Ok(out)
    }

    /// Validated numeric enclosure of the value, at `precision_bits`.
    ///
    /// Work happens at 32 guard bits; the final rescale folds the guard
    /// into the radius, so the returned ball is a true enclosure at the
    /// requested scale.
    pub fn eval(&self, precision_bits: u32) -> ApproxReal {
        const GUARD: u32 = 32;
        let w = precision_bits + GUARD;
        if self.is_zero() {
            return ApproxReal::zero(precision_bits);
        }
        let pi = ApproxReal::pi(w);
        let mut acc = ApproxReal::zero(w);
        let mut pi_pow = ApproxReal::one(w);
        let mut cur_exp = 0u32;
        for (e, c) in self.iter() {
            while cur_exp < e {
                pi_pow = pi_pow.mul(&pi);
                cur_exp += 1;
            }
            acc = acc.add(&pi_pow.mul_rational(c));
        }
        acc.rescale(precision_bits)
    }

    /// Render a coefficient as `num/den` (or `num` when integral),
    /// parenthesized when it is a fraction or negative so the `*pi^e`
    /// that follows reads unambiguously.
    fn coeff_str(c: &BigRational) -> String {
        let plain = c.to_string();
        if plain.contains('/') || plain.starts_with('-') {
            format!("({plain})")
        } else {
            plain
        }
    }
}

impl fmt::Display for PiPolynomial {
    /// `(1/6)*pi^2`, `(-6/25)*pi^5 + (24/125)*pi^3 + (-144/3125)*pi`,
    /// descending exponents, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{}", Self::coeff_str(c))?,
                1 => write!(f, "{}*pi", Self::coeff_str(c))?,
                _ => write!(f, "{}*pi^{}", Self::coeff_str(c), e)?,
            }
        }
        Ok(())
    }
}

/// LaTeX rendering: `\frac{1}{6}\pi^{2}`, with explicit sign joining.
pub fn latex(p: &PiPolynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (e, c) in p.terms.iter().rev().map(|(e, c)| (*e, c)) {
        let neg = c < &BigRational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if first {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        first = false;
        let coeff = if mag.denom() == &BigInt::from(1) {
            if mag.numer() == &BigInt::from(1) && e > 0 {
                String::new()
            } else {
                mag.numer().to_string()
            }
        } else {
            format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        out.push_str(&coeff);
        match e {
            0 => {
                if coeff.is_empty() {
                    out.push('1');
                }
            }
            1 => out.push_str("\\pi"),
            _ => out.push_str(&format!("\\pi^{{{e}}}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{abs, parse_decimal, rat};
    use proptest::prelude::*;

    // zeta(2) = pi^2 / 6 and pi^2 to 52 digits.
    const PI_SQ_REF: &str = "9.8696044010893586188344909998761511353136994072407906";

    #[test]
    fn canonical_form_drops_zeros() {
        let mut p = PiPolynomial::term(rat(1, 2), 3);
        p.add_term(rat(-1, 2), 3);
        assert!(p.is_zero());
        assert_eq!(p, PiPolynomial::zero());

        let q = PiPolynomial::term(rat(0, 5), 7);
        assert!(q.is_zero());
    }

    #[test]
    fn structural_equality_decides_q_pi() {
        let a = PiPolynomial::term(rat(1, 6), 2);
        let b = PiPolynomial::term(rat(2, 12), 2);
        assert_eq!(a, b);
        let c = PiPolynomial::term(rat(1, 6), 3);
        assert_ne!(a, c);
    }

    #[test]
    fn arithmetic_small_cases() {
        let a = PiPolynomial::term(rat(1, 2), 1);
        let b = PiPolynomial::term(rat(1, 3), 2);
        let s = a.add(&b);
        assert_eq!(s.coefficient(1), rat(1, 2));
        assert_eq!(s.coefficient(2), rat(1, 3));
        assert_eq!(s.coefficient(0), rat(0, 1));

        assert_eq!(s.sub(&a), b);
        assert_eq!(s.scale(&rat(6, 1)).coefficient(1), rat(3, 1));
        assert_eq!(s.mul_pi_pow(2).coefficient(3), rat(1, 2));
    }

    #[test]
    fn division_shifts_or_underflows() {
        let p = PiPolynomial::term(rat(5, 7), 4).add(&PiPolynomial::term(rat(1, 2), 2));
        let q = p.div_pi_pow(2).unwrap();
        assert_eq!(q.coefficient(2), rat(5, 7));
        assert_eq!(q.coefficient(0), rat(1, 2));

        let err = p.div_pi_pow(3).unwrap_err();
        assert_eq!(
            err,
            Error::DivisionExponentUnderflow {
                term_exponent: 2,
                divisor_exponent: 3
            }
        );
    }

    #[test]
    fn eval_pi_squared_reference() {
        let p = PiPolynomial::term(rat(1, 1), 2);
        let v = p.eval(200);
        let reference = parse_decimal(PI_SQ_REF).unwrap();
        let bound = BigRational::new(BigInt::from(1), BigInt::from(10u32).pow(50));
        assert!(abs(&(v.center() - reference)) < bound);
        assert!(v.radius_rational() < bound);
    }

    #[test]
    fn eval_zero_and_constant() {
        assert!(PiPolynomial::zero().eval(64).is_exact());
        let c = PiPolynomial::constant(rat(3, 4)).eval(64);
        assert!(c.contains_rational(&rat(3, 4)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(PiPolynomial::zero().to_string(), "0");
        assert_eq!(PiPolynomial::term(rat(1, 6), 2).to_string(), "(1/6)*pi^2");
        assert_eq!(PiPolynomial::term(rat(2, 1), 1).to_string(), "2*pi");
        let mixed = PiPolynomial::term(rat(-6, 25), 5)
            .add(&PiPolynomial::term(rat(24, 125), 3))
            .add(&PiPolynomial::term(rat(-144, 3125), 1));
        assert_eq!(
            mixed.to_string(),
            "(-6/25)*pi^5 + (24/125)*pi^3 + (-144/3125)*pi"
        );
    }

    #[test]
    fn latex_forms() {
        assert_eq!(latex(&PiPolynomial::term(rat(1, 6), 2)), "\\frac{1}{6}\\pi^{2}");
        assert_eq!(latex(&PiPolynomial::term(rat(-1, 2), 1)), "-\\frac{1}{2}\\pi");
        assert_eq!(latex(&PiPolynomial::term(rat(1, 1), 3)), "\\pi^{3}");
        assert_eq!(latex(&PiPolynomial::constant(rat(5, 1))), "5");
        let mixed = PiPolynomial::term(rat(2, 1), 2).add(&PiPolynomial::term(rat(-3, 7), 0));
        assert_eq!(latex(&mixed), "2\\pi^{2} - \\frac{3}{7}");
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-100i64..100, 1i64..100).prop_map(|(n, d)| rat(n, d))
    }

    fn small_poly() -> impl Strategy<Value = PiPolynomial> {
        proptest::collection::vec((0u32..8, small_rational()), 0..6).prop_map(|terms| {
            let mut p = PiPolynomial::zero();
            for (e, c) in terms {
                p.add_term(c, e);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn no_zero_coefficients_survive(p in small_poly(), q in small_poly()) {
            for poly in [p.add(&q), p.sub(&q), p.neg(), p.scale(&rat(-3, 7))] {
                for (_, c) in poly.iter() {
                    prop_assert!(!c.is_zero());
                }
            }
        }

        #[test]
        fn add_sub_round_trip(p in small_poly(), q in small_poly()) {
            prop_assert_eq!(p.add(&q).sub(&q), p);
        }

        #[test]
        fn eval_contains_sum_of_term_values(p in small_poly()) {
            // Evaluate against an independently computed enclosure:
            // sum of c * pi_ball^e in one go at higher precision.
            let v = p.eval(96);
            let pi = ApproxReal::pi(160);
            let mut acc = ApproxReal::zero(160);
            for (e, c) in p.iter() {
                acc = acc.add(&pi.pow(e).mul_rational(c));
            }
            prop_assert!(v.overlaps(&acc.rescale(96)));
        }

        #[test]
        fn scale_then_eval_commutes(p in small_poly(), f in small_rational()) {
            let left = p.scale(&f).eval(80);
            let right = p.eval(120).mul_rational(&f).rescale(80);
            prop_assert!(left.overlaps(&right));
        }
    }
}
