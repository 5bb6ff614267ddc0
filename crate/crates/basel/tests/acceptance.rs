//! Acceptance gate: one test per criterion, each ending in a single
//! `criterion NN ...: PASS` line. Tolerances and budgets are fixed here
//! on purpose — loosening them is a behavior change, not a test fix.

use std::process::Command;
use std::time::Instant;

use basel::{
    alternating_moment_limit, alternating_moment_partial_sum, bernoulli_number,
    bernoulli_polynomial, binomial_sum_identity, cosine_moment, cosine_moment_quadrature,
    even_sum_identity, full_sum_identity, generalized_sum, verify_route_equality,
    zeta_even_closed, zeta_even_numeric, zeta_even_recurrence, BernoulliConvention, BigInt,
    BigRational,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// 1 / 10^exp.
fn tiny(exp: u32) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(10u32).pow(exp))
}

fn abs(x: &BigRational) -> BigRational {
    if x < &BigRational::new(BigInt::from(0), BigInt::from(1)) {
        -x.clone()
    } else {
        x.clone()
    }
}

#[test]
fn criterion_01_two_routes_agree_to_one_hundred() {
    let start = Instant::now();
    assert_eq!(verify_route_equality(100), Ok(100));
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "route comparison took {elapsed:.2?}, budget is 10s"
    );
    println!("criterion 01 route-equality k<=100 in {elapsed:.2?}: PASS");
}

#[test]
fn criterion_02_known_values_match_independent_oracle() {
    // (a) Unroll the triangular recurrence by hand in raw rational
    // arithmetic, independent of the library's solver.
    //   k=1:  2 C1            = 1/3        => C1 = 1/6
    //   k=2:  4 C1 -  24 C2   = 2/5        => C2 = 1/90
    //   k=3:  6 C1 - 120 C2 + 720 C3 = 3/7 => C3 = 1/945
    let c1 = rat(1, 3) / rat(2, 1);
    assert_eq!(c1, rat(1, 6));
    let c2 = (rat(4, 1) * &c1 - rat(2, 5)) / rat(24, 1);
    assert_eq!(c2, rat(1, 90));
    let c3 = (rat(3, 7) - rat(6, 1) * &c1 + rat(120, 1) * &c2) / rat(720, 1);
    assert_eq!(c3, rat(1, 945));

    // (b) Literature values for the first seven coefficients.
    let expected = [
        rat(1, 6),
        rat(1, 90),
        rat(1, 945),
        rat(1, 9450),
        rat(1, 93555),
        rat(691, 638_512_875),
        rat(2, 18_243_225),
    ];
    for (i, want) in expected.iter().enumerate() {
        let k = i as u64 + 1;
        assert_eq!(&zeta_even_recurrence(k).coefficient, want, "recurrence k={k}");
        assert_eq!(&zeta_even_closed(k).coefficient, want, "closed form k={k}");
    }

    // (c) Decimal enclosures against 50-digit reference values.
    let z2_ref: BigRational = basel::rational::parse_decimal(
        "1.6449340668482264364724151666460251892189499012068",
    )
    .unwrap();
    let z6_ref: BigRational = basel::rational::parse_decimal(
        "1.0173430619844491397145179297909205279018174900329",
    )
    .unwrap();
    let z2 = zeta_even_closed(1).eval(200);
    let z6 = zeta_even_closed(3).eval(200);
    assert!(abs(&(z2.center() - z2_ref)) < tiny(45));
    assert!(abs(&(z6.center() - z6_ref)) < tiny(45));
    println!("criterion 02 known-values vs independent oracle: PASS");
}

#[test]
fn criterion_03_identity_suites_at_scale() {
    let start = Instant::now();
    for k in 1..=200u64 {
        let (lhs, rhs) = even_sum_identity(k);
        assert_eq!(lhs, rhs, "even-index sum fails at k={k}");
    }
    for m in (2..=400u64).step_by(2) {
        let (lhs, rhs) = full_sum_identity(m).unwrap();
        assert_eq!(lhs, rhs, "full sum fails at m={m}");
    }
    for k in 1..=200u64 {
        let (lhs, rhs) = binomial_sum_identity(k);
        assert_eq!(lhs, rhs, "weighted binomial sum fails at k={k}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "identity sweeps took {elapsed:.2?}, budget is 60s"
    );
    println!("criterion 03 identity suites at scale in {elapsed:.2?}: PASS");
}

#[test]
fn criterion_04_full_sum_extends_even_sum_by_exactly_one() {
    for k in 1..=200u64 {
        let (even_lhs, even_rhs) = even_sum_identity(k);
        let (full_lhs, full_rhs) = full_sum_identity(2 * k).unwrap();
        assert_eq!(
            &full_lhs - &even_lhs,
            rat(1, 1),
            "left-hand sides differ by != 1 at k={k}"
        );
        assert_eq!(&full_rhs - &even_rhs, rat(1, 1));
    }
    println!("criterion 04 chain consistency k<=200: PASS");
}

#[test]
fn criterion_05_quadrature_brackets_every_moment() {
    let start = Instant::now();
    let cases: Vec<(u64, u64)> = (1..=5u64)
        .flat_map(|k| (1..=20u64).map(move |n| (n, k)))
        .collect();
    // Warm the shared factorial/pi caches before fanning out.
    let _ = cosine_moment_quadrature(1, 1, 128).unwrap();

    let workers = 8usize;
    let failures: Vec<String> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for chunk in cases.chunks(cases.len().div_ceil(workers)) {
            handles.push(scope.spawn(move || {
                let mut bad = Vec::new();
                for &(n, k) in chunk {
                    let closed = cosine_moment(n, k).eval(128);
                    match cosine_moment_quadrature(n, k, 128) {
                        Ok(q) => {
                            if !q.contains_ball(&closed) {
                                bad.push(format!("n={n} k={k}: enclosure miss"));
                            }
                            if q.radius_rational() > tiny(20) {
                                bad.push(format!(
                                    "n={n} k={k}: radius {} above 1e-20",
                                    q.radius_decimal()
                                ));
                            }
                        }
                        Err(e) => bad.push(format!("n={n} k={k}: {e}")),
                    }
                }
                bad
            }));
        }
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("quadrature worker panicked"))
            .collect()
    });
    assert!(failures.is_empty(), "quadrature failures: {failures:?}");
    println!(
        "criterion 05 quadrature containment n<=20 k<=5, radius <= 1e-20, in {:.2?}: PASS",
        start.elapsed()
    );
}

#[test]
fn criterion_06_alternating_sum_error_decays() {
    let err = |n_terms: u64| {
        alternating_moment_partial_sum(1, n_terms)
            .sub(&alternating_moment_limit(1))
            .eval(128)
            .abs_hi()
    };
    let e_1k = err(1_000);
    let e_10k = err(10_000);
    assert!(e_1k < rat(1, 100), "error at N=10^3 is not below 1e-2");
    assert!(e_10k < rat(1, 1000), "error at N=10^4 is not below 1e-3");
    assert!(e_10k < e_1k, "error fails to shrink with more terms");
    println!("criterion 06 partial-sum error decay (1e-2 at 10^3, 1e-3 at 10^4): PASS");
}

#[test]
fn criterion_07_series_bracket_traps_every_value() {
    for k in 1..=10u64 {
        let bracket = zeta_even_numeric(k, 2_000, 96);
        let exact = zeta_even_closed(k).eval(256);
        assert!(
            bracket.contains_ball(&exact),
            "series bracket misses the exact value at k={k}"
        );
    }
    let tight = zeta_even_numeric(1, 10_000, 128);
    assert!(
        tight.width() < rat(2, 10_000),
        "bracket width at k=1, N=10^4 is not below 2e-4"
    );
    println!("criterion 07 numeric brackets k<=10, width bound at k=1: PASS");
}

#[test]
fn criterion_08_bernoulli_property_suite() {
    use basel::rational::binomial;
    let zero = rat(0, 1);
    // Defining recurrences, both conventions.
    for m in 1..=60u64 {
        let minus: BigRational = (0..=m)
            .map(|j| {
                BigRational::from_integer(binomial(m + 1, j))
                    * bernoulli_number(j, BernoulliConvention::Minus)
            })
            .sum();
        assert_eq!(minus, zero, "minus-convention recurrence fails at m={m}");
        let plus: BigRational = (0..=m)
            .map(|j| {
                BigRational::from_integer(binomial(m + 1, j))
                    * bernoulli_number(j, BernoulliConvention::Plus)
            })
            .sum();
        assert_eq!(
            plus,
            BigRational::from_integer(BigInt::from(m + 1)),
            "plus-convention recurrence fails at m={m}"
        );
    }
    // Odd indices above 1 vanish; the conventions differ only at 1.
    for m in (3..=59u64).step_by(2) {
        assert_eq!(bernoulli_number(m, BernoulliConvention::Minus), zero);
    }
    for m in 0..=40u64 {
        let d = bernoulli_number(m, BernoulliConvention::Plus)
            - bernoulli_number(m, BernoulliConvention::Minus);
        assert_eq!(d, if m == 1 { rat(1, 1) } else { zero.clone() });
    }
    // Denominator structure: denom(B_2n) = product of primes p with p-1 | 2n.
    fn is_prime(x: u64) -> bool {
        x >= 2 && (2..).take_while(|d| d * d <= x).all(|d| x % d != 0)
    }
    for n in 1..=15u64 {
        let denom: BigInt = (2..=2 * n + 1)
            .filter(|&p| is_prime(p) && (2 * n) % (p - 1) == 0)
            .map(BigInt::from)
            .product();
        assert_eq!(
            bernoulli_number(2 * n, BernoulliConvention::Minus)
                .denom()
                .clone(),
            denom,
            "denominator structure fails at 2n={}",
            2 * n
        );
    }
    // Polynomial endpoints recover both conventions.
    for n in 0..=25u64 {
        let p = bernoulli_polynomial(n);
        assert_eq!(
            p.eval(&zero),
            bernoulli_number(n, BernoulliConvention::Minus)
        );
        assert_eq!(
            p.eval(&rat(1, 1)),
            bernoulli_number(n, BernoulliConvention::Plus)
        );
    }
    // Reflection, derivative, and mean-zero laws.
    for n in 0..=15u64 {
        let p = bernoulli_polynomial(n);
        let reflected = p.reflect();
        for x in [zero.clone(), rat(1, 3), rat(1, 2), rat(4, 7)] {
            let direct = p.eval(&(rat(1, 1) - &x));
            let via = if n % 2 == 0 {
                reflected.eval(&(rat(1, 1) - &x))
            } else {
                -reflected.eval(&(rat(1, 1) - &x))
            };
            assert_eq!(direct, via, "reflection fails at n={n}");
        }
        if n >= 1 {
            let stepped = bernoulli_polynomial(n - 1).scale(&BigRational::from_integer(
                BigInt::from(n),
            ));
            assert_eq!(p.derivative(), stepped, "derivative fails at n={n}");
            assert_eq!(
                p.definite_integral(&zero, &rat(1, 1)),
                zero,
                "unit-interval mean fails at n={n}"
            );
        }
    }
    println!("criterion 08 Bernoulli property suite: PASS");
}

#[test]
fn criterion_09_weighted_sum_family() {
    // x = 2 reproduces the weighted binomial sum at doubled index.
    for k in 1..=50u64 {
        let s = generalized_sum(2, k, BernoulliConvention::Plus);
        let (lhs, rhs) = binomial_sum_identity(2 * k);
        assert_eq!(s, lhs, "x=2 disagrees with the binomial sum at k={k}");
        assert_eq!(s, rat(8 * k as i64 + 1, 1));
        assert_eq!(rhs, rat(8 * k as i64 + 1, 1));
    }
    // x = 1 closed forms, one per convention.
    for k in 1..=50u64 {
        assert_eq!(
            generalized_sum(1, k, BernoulliConvention::Plus),
            rat(2 * k as i64, 1)
        );
        assert_eq!(
            generalized_sum(1, k, BernoulliConvention::Minus),
            rat(-1, 1)
        );
    }
    // The conventions differ by exactly the first-order term x(2kx+1).
    for x in 1..=4u64 {
        for k in 1..=8u64 {
            let diff = generalized_sum(x, k, BernoulliConvention::Plus)
                - generalized_sum(x, k, BernoulliConvention::Minus);
            assert_eq!(diff, rat((x * (2 * k * x + 1)) as i64, 1));
        }
    }
    println!("criterion 09 weighted-sum family closed forms: PASS");
}

#[test]
fn criterion_10_cli_contract() {
    let bin = env!("CARGO_BIN_EXE_basel");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let zeta = run(&["zeta", "--max-k", "3", "--format", "json"]);
    assert_eq!(zeta.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&zeta.stdout).unwrap();
    assert_eq!(v["rows"][2]["coefficient"]["den"], "945");
    assert_eq!(
        serde_json::to_string(&v).unwrap().as_bytes(),
        &zeta.stdout[..zeta.stdout.len() - 1],
        "JSON must round-trip byte-identically"
    );

    let ok = run(&["verify", "all", "--max-index", "25"]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = run(&["verify", "all", "--max-index", "25", "--corrupt-bernoulli", "6"]);
    assert_eq!(bad.status.code(), Some(1), "corruption must exit 1");

    let usage = run(&["zeta", "--max-k", "not-a-number"]);
    assert_eq!(usage.status.code(), Some(2), "usage errors must exit 2");

    let a = run(&["fourier", "--k", "1", "--n-max", "2", "--format", "json"]);
    let b = run(&["fourier", "--k", "1", "--n-max", "2", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "repeated runs must be byte-identical");
    println!("criterion 10 CLI contract (exit codes, JSON round-trip, determinism): PASS");
}
