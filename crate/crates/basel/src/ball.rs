//! Validated fixed-point ball arithmetic.
//!
//! An [`ApproxReal`] is a dyadic ball: it represents every real in
//! `[(mantissa - radius) / 2^scale, (mantissa + radius) / 2^scale]`.
//! The contract maintained by every operation is *containment*: if the
//! inputs contain the true values, the output contains the true result.
//! Rounding is always outward, and costs at most one ulp per operation:
//! mantissas round by flooring, radii by ceiling plus one ulp to absorb
//! the mantissa's rounding error.
//!
//! Because the representation is fixed-point rather than floating-point,
//! addition, subtraction, negation and multiplication by an integer are
//! *exact*: only multiplication, rational scaling and rescaling round.
//!
//! Two transcendental enclosures come with explicit error accounting.
//! `pi` uses the Machin formula `pi = 16 atan(1/5) - 4 atan(1/239)`; each
//! arctangent is an alternating series evaluated in pure integer
//! arithmetic at 32 guard bits, so the truncation tail is bounded by the
//! first omitted term and each term contributes at most one ulp of floor
//! error. The guard bits are then folded into the radius, leaving a ball
//! at the requested scale whose radius is at most two ulps. `cos` reduces
//! its argument modulo an enclosure of 2 pi, folds the half-plane over
//! (`cos y = -cos(y -+ pi)`) so the residual is at most pi/2 in size,
//! sums the Taylor series by Horner's rule in ball arithmetic, and adds
//! the Lagrange remainder bound `|y|^(2J) / (2J)!` to the radius, with J
//! chosen so that bound is below one ulp.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::factorial;

/// A dyadic ball `mantissa/2^scale` with radius `radius/2^scale`.
///
/// Invariants: `radius >= 0`; binary operations require equal scales
/// (rescale explicitly to mix precisions, so precision never changes
/// silently).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxReal {
    mantissa: BigInt,
    radius: BigInt,
    scale: u32,
}

/// x / 2^s rounded toward negative infinity.
fn shift_floor(x: BigInt, s: u32) -> BigInt {
    if s == 0 {
        return x;
    }
    if x.is_negative() {
        let mask = (BigInt::one() << s) - 1u32;
        -((-x + mask) >> s)
    } else {
        x >> s
    }
}

/// x / 2^s rounded toward positive infinity.
fn shift_ceil(x: BigInt, s: u32) -> BigInt {
    -shift_floor(-x, s)
}

/// a / b rounded to the nearest integer, for b > 0.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    (a * 2i32 + b).div_floor(&(b * 2i32))
}

impl ApproxReal {
    pub fn zero(scale: u32) -> Self {
        ApproxReal {
            mantissa: BigInt::zero(),
            radius: BigInt::zero(),
            scale,
        }
    }

    pub fn one(scale: u32) -> Self {
        ApproxReal::from_int(&BigInt::one(), scale)
    }

    /// Exact embedding of an integer.
    pub fn from_int(n: &BigInt, scale: u32) -> Self {
        ApproxReal {
            mantissa: n.clone() << scale,
            radius: BigInt::zero(),
            scale,
        }
    }

    /// Enclose a rational. Exact (radius zero) when the value is dyadic
    /// and fits the scale; otherwise one ulp wide.
    pub fn from_rational(q: &BigRational, scale: u32) -> Self {
        let shifted: BigInt = q.numer().clone() << scale;
        let (quot, rem) = shifted.div_mod_floor(q.denom());
        let radius = if rem.is_zero() {
            BigInt::zero()
        } else {
            BigInt::one()
        };
        ApproxReal {
            mantissa: quot,
            radius,
            scale,
        }
    }

    /// Smallest representable ball at `scale` containing `[lo, hi]`.
    pub fn from_interval(lo: &BigRational, hi: &BigRational, scale: u32) -> Self {
        assert!(lo <= hi, "from_interval: lo > hi");
        let lo_m = (lo.numer().clone() << scale).div_floor(lo.denom());
        let hi_m = (hi.numer().clone() << scale).div_ceil(hi.denom());
        let mid = (&lo_m + &hi_m).div_floor(&BigInt::from(2));
        let radius = std::cmp::max(&mid - &lo_m, &hi_m - &mid);
        ApproxReal {
            mantissa: mid,
            radius,
            scale,
        }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_exact(&self) -> bool {
        self.radius.is_zero()
    }

    /// Exact lower endpoint.
    pub fn lo(&self) -> BigRational {
        BigRational::new(&self.mantissa - &self.radius, BigInt::one() << self.scale)
    }

    /// Exact upper endpoint.
    pub fn hi(&self) -> BigRational {
        BigRational::new(&self.mantissa + &self.radius, BigInt::one() << self.scale)
    }

    /// Exact midpoint.
    pub fn center(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), BigInt::one() << self.scale)
    }

    /// Exact diameter `hi - lo`.
    pub fn width(&self) -> BigRational {
        BigRational::new(&self.radius * 2, BigInt::one() << self.scale)
    }

    /// Exact radius as a rational.
    pub fn radius_rational(&self) -> BigRational {
        BigRational::new(self.radius.clone(), BigInt::one() << self.scale)
    }

    /// An upper bound for |value| over the whole ball.
    pub fn abs_hi(&self) -> BigRational {
        BigRational::new(
            self.mantissa.abs() + &self.radius,
            BigInt::one() << self.scale,
        )
    }

    pub fn contains_rational(&self, q: &BigRational) -> bool {
        self.lo() <= *q && *q <= self.hi()
    }

    /// True if every point of `other` lies inside `self`.
    pub fn contains_ball(&self, other: &ApproxReal) -> bool {
        self.lo() <= other.lo() && other.hi() <= self.hi()
    }

    /// True if the two balls share at least one point. Two correct
    /// enclosures of the same real must overlap.
    pub fn overlaps(&self, other: &ApproxReal) -> bool {
        self.lo() <= other.hi() && other.lo() <= self.hi()
    }

    fn assert_same_scale(&self, other: &ApproxReal) {
        assert_eq!(
            self.scale, other.scale,
            "mixed-scale ball arithmetic; rescale explicitly"
        );
    }

    /// Exact: fixed-point addition introduces no rounding.
    pub fn add(&self, other: &ApproxReal) -> ApproxReal {
        self.assert_same_scale(other);
        ApproxReal {
            mantissa: &self.mantissa + &other.mantissa,
            radius: &self.radius + &other.radius,
            scale: self.scale,
        }
    }

    /// Exact.
    pub fn neg(&self) -> ApproxReal {
        ApproxReal {
            mantissa: -&self.mantissa,
            radius: self.radius.clone(),
            scale: self.scale,
        }
    }

    /// Exact.
    pub fn sub(&self, other: &ApproxReal) -> ApproxReal {
        self.add(&other.neg())
    }

    /// Exact.
    pub fn mul_int(&self, n: &BigInt) -> ApproxReal {
        ApproxReal {
            mantissa: &self.mantissa * n,
            radius: &self.radius * n.abs(),
            scale: self.scale,
        }
    }

    /// (m1 +- r1)(m2 +- r2) / 2^(2s), brought back to scale s.
    /// Cross radius |m1| r2 + |m2| r1 + r1 r2 rounds up; the mantissa's
    /// floor costs the extra ulp.
    pub fn mul(&self, other: &ApproxReal) -> ApproxReal {
        self.assert_same_scale(other);
        let mantissa = shift_floor(&self.mantissa * &other.mantissa, self.scale);
        let cross = self.mantissa.abs() * &other.radius
            + other.mantissa.abs() * &self.radius
            + &self.radius * &other.radius;
        let radius = shift_ceil(cross, self.scale) + 1u32;
        ApproxReal {
            mantissa,
            radius,
            scale: self.scale,
        }
    }

    /// Multiply by an exact rational.
    pub fn mul_rational(&self, q: &BigRational) -> ApproxReal {
        let num = q.numer();
        let den = q.denom();
        let mantissa = (&self.mantissa * num).div_floor(den);
        let radius = (&self.radius * num.abs()).div_ceil(den) + 1u32;
        ApproxReal {
            mantissa,
            radius,
            scale: self.scale,
        }
    }

    /// Multiply by the dyadic rational `num / 2^log_den`. Cheaper than
    /// `mul_rational` because the division is a shift.
    pub fn mul_dyadic(&self, num: i64, log_den: u32) -> ApproxReal {
        let n = BigInt::from(num);
        let mantissa = shift_floor(&self.mantissa * &n, log_den);
        let radius = shift_ceil(&self.radius * n.abs(), log_den) + 1u32;
        ApproxReal {
            mantissa,
            radius,
            scale: self.scale,
        }
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, exp: u32) -> ApproxReal {
        if exp == 0 {
            return ApproxReal::one(self.scale);
        }
        let mut base = self.clone();
        let mut acc: Option<ApproxReal> = None;
        let mut e = exp;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.unwrap()
    }

    /// Change the scale. Widening is exact; narrowing floors the mantissa,
    /// ceils the radius and adds one ulp, so guard bits carried internally
    /// by a computation are absorbed into the radius here.
    pub fn rescale(&self, new_scale: u32) -> ApproxReal {
        if new_scale == self.scale {
            return self.clone();
        }
        if new_scale > self.scale {
            let up = new_scale - self.scale;
            return ApproxReal {
                mantissa: self.mantissa.clone() << up,
                radius: self.radius.clone() << up,
                scale: new_scale,
            };
        }
        let down = self.scale - new_scale;
        ApproxReal {
            mantissa: shift_floor(self.mantissa.clone(), down),
            radius: shift_ceil(self.radius.clone(), down) + 1u32,
            scale: new_scale,
        }
    }

    /// Intersect with the integer interval `[lo, hi]` at this scale. Only
    /// sound when the true value is known to lie in that interval; used to
    /// clamp cosines to [-1, 1].
    fn clamp_to(&self, lo: i64, hi: i64) -> ApproxReal {
        let lo_m = BigInt::from(lo) << self.scale;
        let hi_m = BigInt::from(hi) << self.scale;
        let cur_lo = &self.mantissa - &self.radius;
        let cur_hi = &self.mantissa + &self.radius;
        let mut new_lo = std::cmp::max(cur_lo, lo_m.clone());
        let mut new_hi = std::cmp::min(cur_hi, hi_m.clone());
        if new_lo > new_hi {
            // Disjoint clamp can only mean the caller's interval was wrong
            // for this value; keep the ball we trust.
            return self.clone();
        }
        // A ball needs an even-width interval; widen on a side that stays
        // inside [lo, hi] (both sides can't be tight: the clamp interval
        // itself has even width).
        if (&new_hi - &new_lo).is_odd() {
            if new_lo > lo_m {
                new_lo -= 1u32;
            } else {
                new_hi += 1u32;
            }
        }
        let mid = (&new_lo + &new_hi).div_floor(&BigInt::from(2));
        ApproxReal {
            radius: &new_hi - &mid,
            mantissa: mid,
            scale: self.scale,
        }
    }

    /// Enclosure of pi at the given scale; the radius is at most two ulps.
    pub fn pi(scale: u32) -> ApproxReal {
        const GUARD: u32 = 32;
        let w = scale + GUARD;
        let (a5, r5) = atan_inv(5, w);
        let (a239, r239) = atan_inv(239, w);
        let ball = ApproxReal {
            mantissa: a5 * 16 - a239 * 4,
            radius: r5 * 16 + r239 * 4,
            scale: w,
        };
        ball.rescale(scale)
    }

    /// Enclosure of cos(self).
    ///
    /// The argument is reduced modulo an enclosure of 2 pi, so the input
    /// may have any magnitude, but its *radius* should be well under 1 or
    /// the Taylor bound degenerates and the result falls back to the
    /// trivial enclosure [-1, 1].
    pub fn cos(&self) -> ApproxReal {
        let s = self.scale;
        let pi_ball = ApproxReal::pi(s);
        let two_pi = pi_ball.mul_int(&BigInt::from(2));
        let q = round_div(&self.mantissa, &two_pi.mantissa);
        let mut y = self.sub(&two_pi.mul_int(&q));

        // Fold the half-plane over: cos(y) = -cos(y -+ pi). This brings
        // |y| under pi/2 + eps, which matters for the radius: every Horner
        // step below multiplies the accumulated radius by roughly y^2, so
        // keeping y^2 < 2.5 (rather than ~9.9 near pi) keeps the loop from
        // amplifying rounding noise into the visible digits.
        let half_pi_mantissa = &pi_ball.mantissa >> 1u32;
        let mut negate = false;
        if y.mantissa > half_pi_mantissa {
            y = y.sub(&pi_ball);
            negate = true;
        } else if y.mantissa < -&half_pi_mantissa {
            y = y.add(&pi_ball);
            negate = true;
        }

        // After reduction |y| <= pi/2 + eps; anything bigger means the
        // input radius was enormous, and [-1, 1] is the honest answer.
        if y.abs_hi() >= BigRational::from_integer(BigInt::from(4)) {
            return ApproxReal::from_interval(
                &BigRational::from_integer(BigInt::from(-1)),
                &BigRational::from_integer(BigInt::from(1)),
                s,
            );
        }

        // Smallest J with 4^(2J) / (2J)! <= 2^-(s+8): the Lagrange
        // remainder after the terms below is then under one ulp.
        let mut big_j = 1u64;
        while factorial(2 * big_j) < (BigInt::one() << (4 * big_j + s as u64 + 8)) {
            big_j += 1;
        }

        // cos y = sum_{j < J} (-1)^j y^(2j) / (2j)!, Horner in u = y^2.
        let coef = |j: u64| {
            let mag = BigRational::new(BigInt::one(), factorial(2 * j));
            if j % 2 == 0 {
                mag
            } else {
                -mag
            }
        };
        let u = y.mul(&y);
        let mut acc = ApproxReal::from_rational(&coef(big_j - 1), s);
        for j in (0..big_j - 1).rev() {
            acc = acc.mul(&u).add(&ApproxReal::from_rational(&coef(j), s));
        }
        acc.radius += 1u32; // Lagrange remainder, bounded above by one ulp.
        let clamped = acc.clamp_to(-1, 1);
        if negate {
            clamped.neg()
        } else {
            clamped
        }
    }

    /// Decimal rendering of the center, truncated toward zero after
    /// `digits` fractional digits. Deterministic.
    pub fn decimal(&self, digits: usize) -> String {
        let neg = self.mantissa.is_negative();
        let mag = (self.mantissa.abs() * BigInt::from(10u32).pow(digits as u32)) >> self.scale;
        let ten = BigInt::from(10u32).pow(digits as u32);
        let (int_part, frac_part) = mag.div_rem(&ten);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part:0>width$}", width = digits)
        }
    }

    /// Radius as a two-significant-digit decimal in scientific notation,
    /// rounded *up* so the printed radius never understates the true one.
    /// Exact balls print "0".
    pub fn radius_decimal(&self) -> String {
        decimal_upper_bound(&self.radius_rational())
    }
}

/// Render a nonnegative rational as two significant digits in scientific
/// notation, rounded up. Zero prints "0".
pub fn decimal_upper_bound(v: &BigRational) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    assert!(v.is_positive());
    // Bracket v between powers of ten, starting from a log2-based guess so
    // the exact comparisons only run a step or two.
    let bits = v.numer().bits() as i64 - v.denom().bits() as i64;
    let mut e = (bits as f64 * 0.301_029_995_663_981_2).floor() as i32 - 1;
    let pow10 = |e: i32| -> BigRational {
        let p = BigInt::from(10u32).pow(e.unsigned_abs());
        if e >= 0 {
            BigRational::from_integer(p)
        } else {
            BigRational::new(BigInt::one(), p)
        }
    };
    while *v < pow10(e) {
        e -= 1;
    }
    while *v >= pow10(e + 1) {
        e += 1;
    }
    // v in [10^e, 10^(e+1)): two significant digits, ceiling.
    let scaled = v / pow10(e - 1);
    let mut m = scaled.ceil().to_integer();
    if m == BigInt::from(100) {
        m = BigInt::from(10);
        e += 1;
    }
    let (lead, trail) = m.div_rem(&BigInt::from(10));
    format!("{lead}.{trail}e{e}")
}

/// atan(1/m) at scale w as (mantissa, radius-in-ulps), by the alternating
/// series sum (-1)^j / ((2j+1) m^(2j+1)) in integer arithmetic. The radius
/// is one ulp per summed term (floor error) plus one for the tail, which
/// the alternating-series bound caps by the first omitted term.
fn atan_inv(m: u64, w: u32) -> (BigInt, BigInt) {
    let one = BigInt::one() << w;
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut denom_pow = BigInt::from(m);
    let mut j = 0u64;
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    loop {
        let d = &denom_pow * BigInt::from(2 * j + 1);
        if d > one {
            break;
        }
        let t = &one / &d;
        if j % 2 == 0 {
            sum += &t;
        } else {
            sum -= &t;
        }
        terms += 1;
        denom_pow *= &m2;
        j += 1;
    }
    (sum, BigInt::from(terms + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{abs, parse_decimal, rat};
    use proptest::prelude::*;

    // 62 significant digits, more than any test precision below.
    const PI_REF: &str = "3.1415926535897932384626433832795028841971693993751058209749446";
    const COS_1_REF: &str = "0.5403023058681397174009366074429766037323104206179222276700972";

    /// 1 / 10^exp.
    fn tiny(exp: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(10u32).pow(exp))
    }

    #[test]
    fn shift_floor_rounds_toward_negative_infinity() {
        assert_eq!(shift_floor(BigInt::from(5), 1), BigInt::from(2));
        assert_eq!(shift_floor(BigInt::from(-5), 1), BigInt::from(-3));
        assert_eq!(shift_floor(BigInt::from(-4), 2), BigInt::from(-1));
        assert_eq!(shift_ceil(BigInt::from(5), 1), BigInt::from(3));
        assert_eq!(shift_ceil(BigInt::from(-5), 1), BigInt::from(-2));
    }

    #[test]
    fn round_div_rounds_to_nearest() {
        assert_eq!(round_div(&BigInt::from(7), &BigInt::from(2)), BigInt::from(4));
        assert_eq!(round_div(&BigInt::from(-7), &BigInt::from(2)), BigInt::from(-3));
        assert_eq!(round_div(&BigInt::from(9), &BigInt::from(4)), BigInt::from(2));
    }

    #[test]
    fn from_rational_is_one_ulp_enclosure() {
        let q = rat(1, 3);
        let b = ApproxReal::from_rational(&q, 64);
        assert!(b.contains_rational(&q));
        assert!(b.width() <= BigRational::new(BigInt::from(2), BigInt::one() << 64));
        // Dyadic input is exact.
        assert!(ApproxReal::from_rational(&rat(3, 8), 64).is_exact());
    }

    #[test]
    fn from_interval_contains_both_endpoints() {
        let lo = rat(-7, 3);
        let hi = rat(22, 7);
        let b = ApproxReal::from_interval(&lo, &hi, 48);
        assert!(b.contains_rational(&lo));
        assert!(b.contains_rational(&hi));
        assert!(b.contains_rational(&rat(0, 1)));
    }

    #[test]
    fn pi_matches_reference_to_60_digits() {
        let p = ApproxReal::pi(400);
        let reference = parse_decimal(PI_REF).unwrap();
        assert!(p.radius_rational() < tiny(100));
        // The reference itself is truncated at 62 digits, so the center
        // must sit within 2e-60 of it.
        assert!(abs(&(p.center() - reference)) < tiny(60) * rat(2, 1));
    }

    #[test]
    fn pi_radius_is_at_most_two_ulps() {
        for scale in [16u32, 64, 128, 256, 1000] {
            let p = ApproxReal::pi(scale);
            assert!(
                p.radius_rational() <= BigRational::new(BigInt::from(2), BigInt::one() << scale),
                "radius too wide at scale {scale}"
            );
        }
    }

    #[test]
    fn pi_decimal_prefix() {
        let p = ApproxReal::pi(256);
        assert!(p
            .decimal(50)
            .starts_with("3.14159265358979323846264338327950288419716939937510"));
    }

    #[test]
    fn cos_of_one_matches_reference() {
        let c = ApproxReal::one(300).cos();
        let reference = parse_decimal(COS_1_REF).unwrap();
        assert!(c.radius_rational() < tiny(80));
        assert!(abs(&(c.center() - reference)) < tiny(60) * rat(2, 1));
    }

    #[test]
    fn cos_at_zero_and_pi() {
        let z = ApproxReal::zero(200);
        assert!(z.cos().contains_rational(&rat(1, 1)));
        assert!(z.cos().width() < tiny(9));

        let p = ApproxReal::pi(200);
        assert!(p.cos().contains_rational(&rat(-1, 1)));
        assert!(p.cos().width() < tiny(9));
    }

    #[test]
    fn cos_is_even_and_periodic() {
        let x = ApproxReal::from_rational(&rat(13, 10), 180);
        let c = x.cos();
        assert!(c.overlaps(&x.neg().cos()));

        // x + 10 * 2pi reduces back to (nearly) x.
        let two_pi = ApproxReal::pi(180).mul_int(&BigInt::from(2));
        let shifted = x.add(&two_pi.mul_int(&BigInt::from(10)));
        assert!(c.overlaps(&shifted.cos()));
    }

    #[test]
    fn cos_huge_radius_degrades_to_unit_interval() {
        let wild = ApproxReal::from_interval(&rat(-100, 1), &rat(100, 1), 64);
        let c = wild.cos();
        assert!(c.contains_rational(&rat(1, 1)));
        assert!(c.contains_rational(&rat(-1, 1)));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(ApproxReal::from_rational(&rat(-1, 2), 64).decimal(3), "-0.500");
        assert_eq!(ApproxReal::from_rational(&rat(22, 7), 64).decimal(4), "3.1428");
        assert_eq!(ApproxReal::from_int(&BigInt::from(42), 16).decimal(0), "42");
    }

    #[test]
    fn radius_decimal_rounds_up() {
        let b = ApproxReal {
            mantissa: BigInt::zero(),
            radius: BigInt::from(3),
            scale: 10,
        };
        // 3/1024 = 0.0029296875, so the printed bound rounds up to 3.0e-3.
        assert_eq!(b.radius_decimal(), "3.0e-3");
        assert_eq!(ApproxReal::one(8).radius_decimal(), "0");
        assert_eq!(decimal_upper_bound(&rat(95, 1000)), "9.5e-2");
        assert_eq!(decimal_upper_bound(&rat(999, 1000)), "1.0e0");
        assert_eq!(decimal_upper_bound(&rat(1, 3)), "3.4e-1");
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn add_contains_exact_sum(a in small_rational(), b in small_rational()) {
            let ba = ApproxReal::from_rational(&a, 96);
            let bb = ApproxReal::from_rational(&b, 96);
            prop_assert!(ba.add(&bb).contains_rational(&(&a + &b)));
            prop_assert!(ba.sub(&bb).contains_rational(&(&a - &b)));
        }

        #[test]
        fn mul_contains_exact_product(a in small_rational(), b in small_rational()) {
            let ba = ApproxReal::from_rational(&a, 96);
            let bb = ApproxReal::from_rational(&b, 96);
            prop_assert!(ba.mul(&bb).contains_rational(&(&a * &b)));
            prop_assert!(ba.mul_rational(&b).contains_rational(&(&a * &b)));
        }

        #[test]
        fn pow_contains_exact_power(a in small_rational(), e in 0u32..8) {
            let ba = ApproxReal::from_rational(&a, 128);
            let mut exact = BigRational::from_integer(BigInt::one());
            for _ in 0..e {
                exact *= &a;
            }
            prop_assert!(ba.pow(e).contains_rational(&exact));
        }

        #[test]
        fn rescale_preserves_containment(a in small_rational()) {
            let b = ApproxReal::from_rational(&a, 128);
            prop_assert!(b.rescale(40).contains_rational(&a));
            prop_assert!(b.rescale(200).contains_rational(&a));
        }

        #[test]
        fn mul_dyadic_contains(a in small_rational(), n in -200i64..200, l in 0u32..12) {
            let b = ApproxReal::from_rational(&a, 96);
            let exact = &a * rat(n, 1) / BigRational::from_integer(BigInt::one() << l);
            prop_assert!(b.mul_dyadic(n, l).contains_rational(&exact));
        }

        #[test]
        fn cos_stays_in_unit_interval(a in small_rational()) {
            let c = ApproxReal::from_rational(&a, 80).cos();
            prop_assert!(c.lo() >= rat(-1, 1));
            prop_assert!(c.hi() <= rat(1, 1));
        }
    }
}
