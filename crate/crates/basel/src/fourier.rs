//! Cosine moments of x^(2k), their Fourier coefficients on [-pi, pi],
//! and everything needed to watch the series converge.
//!
//! The central object is the moment
//!
//! ```text
//! I(n, k) = integral_0^pi x^(2k) cos(n x) dx
//!         = sum_{i=1}^{k} [(-1)^n / n^(2i)]
//!           * [(-1)^(i-1) (2k)! / (2k-2i+1)!] * pi^(2k-2i+1)
//! ```
//!
//! an exact element of Q[pi] (for n >= 1; the closed form comes from
//! integrating by parts twice per step, which is also where the
//! triangular zeta recurrence originates). `cosine_moment` builds that
//! polynomial; `cosine_moment_quadrature` recomputes the same integral by
//! validated Romberg quadrature with no knowledge of the closed form, so
//! the two must agree interval-wise, and that agreement is checked by the
//! test suites and the `fourier` CLI command.
//!
//! On top of the moments sit the Fourier coefficients of x^(2k)
//! (`a_n = (2/pi) I(n, k)`, all sine terms zero by evenness), exact
//! alternating partial sums with their limit, and partial-series
//! reconstruction of x^(2k) at arbitrary points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ball::ApproxReal;
use crate::error::{Error, Result};
use crate::pi_poly::PiPolynomial;
use crate::rational::{
    alternating_sum_inverse_powers, falling_factorial, sum_inverse_powers,
};

/// Exact closed form of I(n, k) as an element of Q[pi]. Zero when k = 0.
pub fn cosine_moment(n: u64, k: u64) -> PiPolynomial {
    assert!(n >= 1, "moment defined for n >= 1");
    let mut out = PiPolynomial::zero();
    let n_big = BigInt::from(n);
    for i in 1..=k {
        // (-1)^n / n^(2i) * (-1)^(i-1) * ff(2k, 2i-1), exponent 2k-2i+1.
        let mut c = BigRational::new(
            BigInt::from(falling_factorial(2 * k, 2 * i - 1)),
            n_big.pow(2 * i as u32),
        );
        let negate = (n % 2 == 1) ^ (i % 2 == 0);
        if negate {
            c = -c;
        }
        out.add_term(c, (2 * k - 2 * i + 1) as u32);
    }
    out
}

/// The Fourier data of x^(2k) on [-pi, pi], exact.
///
/// The series reads `x^(2k) = a0 + sum_n a[n-1] cos(n x)`; `a0` is the
/// constant *term* (the mean), so no extra factor of two floats around.
/// All sine coefficients vanish because the function is even; the `b`
/// vector carries the zeros explicitly so callers can assert the claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourierCoefficients {
    pub k: u64,
    pub a0: PiPolynomial,
    pub a: Vec<PiPolynomial>,
    pub b: Vec<PiPolynomial>,
}

/// Exact Fourier coefficients of x^(2k) up to frequency n_max.
pub fn fourier_coefficients(k: u64, n_max: u64) -> FourierCoefficients {
    assert!(k >= 1);
    let a0 = PiPolynomial::term(
        BigRational::new(BigInt::one(), BigInt::from(2 * k + 1)),
        2 * k as u32,
    );
    let two = BigRational::from_integer(BigInt::from(2));
    let a = (1..=n_max)
        .map(|n| {
            cosine_moment(n, k)
                .div_pi_pow(1)
                .expect("moment exponents start at 1")
                .scale(&two)
        })
        .collect();
    let b = (1..=n_max).map(|_| PiPolynomial::zero()).collect();
    FourierCoefficients { k, a0, a, b }
}

/// Exact partial sum `sum_{n=1}^{n_max} (-1)^n I(n, k)` in Q[pi].
///
/// Grouping by inverse power collapses the double sum to k exact
/// harmonic-type sums, so n_max = 10^4 costs k tree summations rather
/// than 10^4 polynomial additions.
pub fn alternating_moment_partial_sum(k: u64, n_max: u64) -> PiPolynomial {
    assert!(k >= 1 && n_max >= 1);
    let mut out = PiPolynomial::zero();
    for i in 1..=k {
        let mut c = BigRational::from_integer(BigInt::from(falling_factorial(2 * k, 2 * i - 1)))
            * sum_inverse_powers(n_max, 2 * i as u32);
        if i % 2 == 0 {
            c = -c;
        }
        out.add_term(c, (2 * k - 2 * i + 1) as u32);
    }
    out
}

/// The limit of the alternating moment sum: `k pi^(2k+1) / (2k+1)`.
pub fn alternating_moment_limit(k: u64) -> PiPolynomial {
    assert!(k >= 1);
    PiPolynomial::term(
        BigRational::new(BigInt::from(k), BigInt::from(2 * k + 1)),
        (2 * k + 1) as u32,
    )
}

/// Where to evaluate a reconstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalPoint {
    /// x = t * pi for rational t.
    PiMultiple(BigRational),
    /// x = q exactly.
    Rational(BigRational),
}

impl EvalPoint {
    /// cos(n * x) as a ball at the given scale, taking exact shortcuts
    /// when n x is a multiple of pi/2 (where the cosine is -1, 0 or 1 and
    /// no numeric evaluation is needed).
    fn cos_n(&self, n: u64, scale: u32) -> ApproxReal {
        match self {
            EvalPoint::PiMultiple(t) => {
                let nt = t * BigRational::from_integer(BigInt::from(n));
                // Reduce n t modulo 2 exactly.
                let floored = (&nt / BigRational::from_integer(BigInt::from(2))).floor()
                    * BigRational::from_integer(BigInt::from(2));
                let r = nt - floored; // in [0, 2)
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                if r.is_zero() {
                    ApproxReal::one(scale)
                } else if r == BigRational::one() {
                    ApproxReal::one(scale).neg()
                } else if r == half || r == half * BigRational::from_integer(BigInt::from(3)) {
                    ApproxReal::zero(scale)
                } else {
                    ApproxReal::pi(scale).mul_rational(&r).cos()
                }
            }
            EvalPoint::Rational(q) => {
                let nq = q * BigRational::from_integer(BigInt::from(n));
                ApproxReal::from_rational(&nq, scale).cos()
            }
        }
    }
}

/// Evaluate a truncated Fourier series at a point, using caller-supplied
/// coefficients (the seam that lets tests feed deliberately wrong
/// coefficients and watch the reconstruction miss).
///
/// `n_terms` must not exceed `coeffs.a.len()`.
pub fn reconstruct_with(
    coeffs: &FourierCoefficients,
    point: &EvalPoint,
    n_terms: u64,
    precision_bits: u32,
) -> ApproxReal {
    assert!(n_terms as usize <= coeffs.a.len(), "not enough coefficients");
    const GUARD: u32 = 32;
    let w = precision_bits + GUARD;
    let pi = ApproxReal::pi(w);

    // Shared pi powers up to the largest exponent any coefficient uses.
    let max_exp = std::iter::once(&coeffs.a0)
        .chain(coeffs.a.iter())
        .flat_map(|p| p.iter().map(|(e, _)| e))
        .max()
        .unwrap_or(0);
    let mut pi_pows = Vec::with_capacity(max_exp as usize + 1);
    pi_pows.push(ApproxReal::one(w));
    for e in 1..=max_exp {
        let next = pi_pows[e as usize - 1].mul(&pi);
        pi_pows.push(next);
    }
    let poly_ball = |p: &PiPolynomial| -> ApproxReal {
        let mut acc = ApproxReal::zero(w);
        for (e, c) in p.iter() {
            acc = acc.add(&pi_pows[e as usize].mul_rational(c));
        }
        acc
    };

    let mut acc = poly_ball(&coeffs.a0);
    for n in 1..=n_terms {
        let a_n = poly_ball(&coeffs.a[n as usize - 1]);
        acc = acc.add(&a_n.mul(&point.cos_n(n, w)));
    }
    acc.rescale(precision_bits)
}

/// Evaluate the truncated Fourier series of x^(2k) at a point.
///
/// At integer multiples of pi every cosine is exactly +-1, so the whole
/// truncated sum is evaluated *exactly* in Q[pi] first (collapsing the
/// coefficient sums to k harmonic-type sums) and only then enclosed; the
/// general path goes through ball arithmetic term by term.
pub fn reconstruct_at(k: u64, point: &EvalPoint, n_terms: u64, precision_bits: u32) -> ApproxReal {
    assert!(k >= 1 && n_terms >= 1);
    if let EvalPoint::PiMultiple(t) = point {
        if t.is_integer() {
            return reconstruct_exact_pi_multiple(k, t.to_integer(), n_terms)
                .eval(precision_bits);
        }
    }
    let coeffs = fourier_coefficients(k, n_terms);
    reconstruct_with(&coeffs, point, n_terms, precision_bits)
}

/// The truncated series at x = t pi (integer t) as an exact element of
/// Q[pi]. cos(n t pi) is 1 for even t and (-1)^n for odd t, so the sum
/// over n collapses into plain or alternating inverse power sums.
fn reconstruct_exact_pi_multiple(k: u64, t: BigInt, n_terms: u64) -> PiPolynomial {
    let mut out = PiPolynomial::term(
        BigRational::new(BigInt::one(), BigInt::from(2 * k + 1)),
        2 * k as u32,
    );
    let t_even = (&t % BigInt::from(2)).is_zero();
    for i in 1..=k {
        // sum over n of [cos(n t pi) * (-1)^n / n^(2i)]: for odd t the
        // signs cancel into a plain sum; for even t they remain.
        let harmonic = if t_even {
            alternating_sum_inverse_powers(n_terms, 2 * i as u32)
        } else {
            sum_inverse_powers(n_terms, 2 * i as u32)
        };
        let mut c = BigRational::from_integer(
            BigInt::from(2) * falling_factorial(2 * k, 2 * i - 1),
        ) * harmonic;
        if i % 2 == 0 {
            c = -c;
        }
        out.add_term(c, (2 * k - 2 * i) as u32);
    }
    out
}

/// Default Romberg refinement budget: 14 doublings, ~16k nodes.
pub const QUADRATURE_MAX_LEVELS: u32 = 14;

/// Validated Romberg quadrature of integral_0^pi x^(2k) cos(n x) dx with
/// an explicit refinement budget.
///
/// Composite trapezoid sums on uniform panels, node count doubling each
/// level, Richardson-extrapolated down the classic triangular table. The
/// returned radius combines the ball arithmetic's own rounding radius
/// with an empirical error estimate: |R(L,L) - R(L-1,L-1)| inflated by
/// four, trusted only once the node count comfortably exceeds the
/// oscillation frequency n (coarser grids alias cos(nx) and can fake
/// agreement). Refinement stops once that total meets the target radius
/// 2^-(precision_bits/2 + 8); if the budget runs out first the error is
/// [`Error::PrecisionUnreachable`].
pub fn cosine_moment_quadrature_with_budget(
    n: u64,
    k: u64,
    precision_bits: u32,
    max_levels: u32,
) -> Result<ApproxReal> {
    assert!(n >= 1 && k >= 1);
    const GUARD: u32 = 64;
    let w = precision_bits + GUARD;
    let target_bits = precision_bits / 2 + 8;
    let target = BigRational::new(BigInt::one(), BigInt::one() << target_bits);

    // The convergence test may only fire once the grid resolves the
    // oscillation, i.e. 2^level is a decent multiple of n. Below that,
    // sampling cos(nx) aliases (worst at n a power of two, where the
    // nodes see a constant-looking signal), successive estimates agree
    // while both are wrong, and the difference-based error model breaks.
    let min_check_level = 3.max(n.next_power_of_two().trailing_zeros() + 3);

    let pi = ApproxReal::pi(w);
    let n_int = BigInt::from(n);
    let f = |x: &ApproxReal| -> ApproxReal { x.pow(2 * k as u32).mul(&x.mul_int(&n_int).cos()) };

    // Level 0: one panel. f(0) = 0 exactly since k >= 1.
    let t0 = f(&pi).mul(&pi).mul_dyadic(1, 1);
    let mut rows: Vec<Vec<ApproxReal>> = vec![vec![t0]];

    for level in 1..=max_levels {
        // New trapezoid sum: half the previous, plus h * (odd nodes).
        let h = pi.mul_dyadic(1, level);
        let mut odd_sum = ApproxReal::zero(w);
        let mut j = 1i64;
        while (j as u64) < (1u64 << level) {
            odd_sum = odd_sum.add(&f(&pi.mul_dyadic(j, level)));
            j += 2;
        }
        let prev_t = &rows[level as usize - 1][0];
        let t = prev_t.mul_dyadic(1, 1).add(&h.mul(&odd_sum));

        // Richardson extrapolation across the row.
        let mut row = vec![t];
        for col in 1..=level as usize {
            let cur = &row[col - 1];
            let diag = &rows[level as usize - 1][col - 1];
            let quotient = BigRational::new(
                BigInt::one(),
                (BigInt::one() << (2 * col)) - BigInt::one(),
            );
            let next = cur.add(&cur.sub(diag).mul_rational(&quotient));
            row.push(next);
        }
        rows.push(row);

        // Conservative stop rule, gated on the grid being fine enough for
        // the difference between diagonal entries to measure real error.
        if level >= min_check_level {
            let cur = &rows[level as usize][level as usize];
            let prev = &rows[level as usize - 1][level as usize - 1];
            let empirical = cur.sub(prev).abs_hi() * BigRational::from_integer(BigInt::from(4));
            let total = &empirical + cur.radius_rational();
            if total <= target {
                let center = cur.center();
                let enclosure = ApproxReal::from_interval(
                    &(&center - &total),
                    &(&center + &total),
                    precision_bits,
                );
                return Ok(enclosure);
            }
        }
    }

    let last = rows.last().unwrap().last().unwrap();
    let prev = &rows[rows.len() - 2][rows.len() - 2];
    let achieved = last.sub(prev).abs_hi() * BigRational::from_integer(BigInt::from(4))
        + last.radius_rational();
    let achieved_bits = if achieved.is_zero() {
        i64::MAX
    } else {
        achieved.denom().bits() as i64 - achieved.numer().bits() as i64
    };
    Err(Error::PrecisionUnreachable {
        levels: max_levels,
        achieved_bits,
        target_bits,
    })
}

/// Validated Romberg quadrature with the default budget.
pub fn cosine_moment_quadrature(n: u64, k: u64, precision_bits: u32) -> Result<ApproxReal> {
    cosine_moment_quadrature_with_budget(n, k, precision_bits, QUADRATURE_MAX_LEVELS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{abs, parse_decimal, rat};

    // I(5, 3) = -6/25 pi^5 + 24/125 pi^3 - 144/3125 pi, to 40 digits.
    const I_5_3_REF: &str = "-67.6362838153274009817948205246425971693562";

    /// 1 / 10^exp.
    fn tiny(exp: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(10u32).pow(exp))
    }

    #[test]
    fn moment_closed_forms() {
        // I(1, 1) = -pi... no: k=1, n=1: i=1 term: (-1)^1 ff(2,1)/1 * pi^1
        // = -2 pi / 1. Wait, ff(2,1) = 2, so I(1,1) = -2pi / 1^2 = -2pi.
        let m11 = cosine_moment(1, 1);
        assert_eq!(m11, PiPolynomial::term(rat(-2, 1), 1));

        let m21 = cosine_moment(2, 1);
        assert_eq!(m21, PiPolynomial::term(rat(2, 4), 1));

        // I(1, 2) = -4 pi^3 + 24 pi.
        let m12 = cosine_moment(1, 2);
        assert_eq!(
            m12,
            PiPolynomial::term(rat(-4, 1), 3).add(&PiPolynomial::term(rat(24, 1), 1))
        );

        // I(5, 3) = -6/25 pi^5 + 24/125 pi^3 - 144/3125 pi.
        let m53 = cosine_moment(5, 3);
        assert_eq!(m53.coefficient(5), rat(-6, 25));
        assert_eq!(m53.coefficient(3), rat(24, 125));
        assert_eq!(m53.coefficient(1), rat(-144, 3125));
    }

    #[test]
    fn moment_decimal_reference() {
        let v = cosine_moment(5, 3).eval(200);
        let reference = parse_decimal(I_5_3_REF).unwrap();
        assert!(abs(&(v.center() - reference)) < tiny(38));
    }

    #[test]
    fn quadrature_crosschecks_closed_form() {
        for (n, k) in [(1u64, 1u64), (2, 1), (1, 2), (3, 2), (5, 3)] {
            let closed = cosine_moment(n, k).eval(128);
            let quad = cosine_moment_quadrature(n, k, 128).unwrap();
            assert!(
                quad.contains_ball(&closed),
                "quadrature interval misses closed form at n={n}, k={k}"
            );
            assert!(quad.radius_rational() < tiny(20), "radius too wide at n={n}, k={k}");
        }
    }

    #[test]
    fn quadrature_budget_exhaustion_is_an_error() {
        // One level cannot meet a 128-bit target.
        match cosine_moment_quadrature_with_budget(3, 2, 128, 1) {
            Err(Error::PrecisionUnreachable { levels, target_bits, .. }) => {
                assert_eq!(levels, 1);
                assert_eq!(target_bits, 72);
            }
            other => panic!("expected PrecisionUnreachable, got {other:?}"),
        }
    }

    #[test]
    fn coefficients_shape() {
        let fc = fourier_coefficients(2, 6);
        assert_eq!(fc.a.len(), 6);
        assert_eq!(fc.b.len(), 6);
        assert!(fc.b.iter().all(PiPolynomial::is_zero));
        assert_eq!(fc.a0, PiPolynomial::term(rat(1, 5), 4));
        // a_1 for k=2: (2/pi) I(1,2) = -8 pi^2 + 48.
        assert_eq!(
            fc.a[0],
            PiPolynomial::term(rat(-8, 1), 2).add(&PiPolynomial::constant(rat(48, 1)))
        );
    }

    #[test]
    fn partial_sums_approach_the_limit() {
        // k = 1: partial(N) = 2 H_N^(2) pi, limit = pi^3 / 3.
        assert_eq!(
            alternating_moment_partial_sum(1, 1),
            PiPolynomial::term(rat(2, 1), 1)
        );
        assert_eq!(
            alternating_moment_partial_sum(1, 2),
            PiPolynomial::term(rat(5, 2), 1)
        );
        assert_eq!(alternating_moment_limit(1), PiPolynomial::term(rat(1, 3), 3));

        let err_10 = alternating_moment_partial_sum(1, 10)
            .sub(&alternating_moment_limit(1))
            .eval(96)
            .abs_hi();
        let err_100 = alternating_moment_partial_sum(1, 100)
            .sub(&alternating_moment_limit(1))
            .eval(96)
            .abs_hi();
        assert!(err_100 < err_10);
        assert!(err_100 < rat(7, 100));
    }

    #[test]
    fn reconstruction_at_pi_converges_to_pi_pow() {
        // At x = pi the series target is pi^2 (k = 1).
        let target = PiPolynomial::term(rat(1, 1), 2).eval(96);
        let r10 = reconstruct_at(1, &EvalPoint::PiMultiple(rat(1, 1)), 10, 96);
        let r100 = reconstruct_at(1, &EvalPoint::PiMultiple(rat(1, 1)), 100, 96);
        let e10 = abs(&(r10.center() - target.center()));
        let e100 = abs(&(r100.center() - target.center()));
        assert!(e100 < e10);
        assert!(e100 < rat(5, 100));
    }

    #[test]
    fn exact_and_generic_reconstruction_agree() {
        let point = EvalPoint::PiMultiple(rat(1, 1));
        let exact_path = reconstruct_at(1, &point, 25, 96);
        let coeffs = fourier_coefficients(1, 25);
        let generic_path = reconstruct_with(&coeffs, &point, 25, 96);
        assert!(exact_path.overlaps(&generic_path));
    }

    #[test]
    fn reconstruction_at_general_points() {
        // x = pi/2: cos shortcuts hit the zero branch; series target is
        // (pi/2)^2 for k = 1.
        let r = reconstruct_at(1, &EvalPoint::PiMultiple(rat(1, 2)), 400, 96);
        let target = PiPolynomial::term(rat(1, 4), 2).eval(96);
        assert!(abs(&(r.center() - target.center())) < rat(2, 100));

        // x = 1 (plain rational point), target 1^2 = 1.
        let r1 = reconstruct_at(1, &EvalPoint::Rational(rat(1, 1)), 400, 96);
        assert!(abs(&(r1.center() - rat(1, 1))) < rat(2, 100));
    }

    #[test]
    fn wrong_coefficients_are_detected() {
        // Zero out a_1 and the reconstruction at pi must shift by
        // 2/pi * I(1,1) * cos(pi) = ... a_1 cos(pi) = (-(-4)) = 4 exactly
        // for k = 1 (a_1 = -4, cos(pi) = -1).
        let point = EvalPoint::PiMultiple(rat(1, 1));
        let honest = reconstruct_at(1, &point, 30, 96);
        let mut coeffs = fourier_coefficients(1, 30);
        coeffs.a[0] = PiPolynomial::zero();
        let tampered = reconstruct_with(&coeffs, &point, 30, 96);
        let gap = abs(&(honest.center() - tampered.center()));
        assert!(abs(&(gap - rat(4, 1))) < rat(1, 1000));
    }
}
