//! Command-line front end: `zeta`, `bernoulli`, `verify`, `fourier`.
//!
//! Exit codes: 0 on success (all checks pass), 1 when a verification or
//! containment check fails, 2 on usage errors (malformed flags,
//! out-of-range values). Output is deterministic for identical flags.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;

use basel::bernoulli::{bernoulli_number, BernoulliConvention};
use basel::fourier::{
    alternating_moment_limit, alternating_moment_partial_sum, cosine_moment,
    cosine_moment_quadrature, fourier_coefficients, reconstruct_at, EvalPoint,
};
use basel::identities::{
    binomial_sum_identity_with, even_sum_identity_with, full_sum_identity_with, IdentityReport,
    IdentityStatus,
};
use basel::pi_poly::PiPolynomial;
use basel::rational::rat;
use basel::render::{
    self, BernoulliRow, FourierReport, MomentRow, OutputFormat, ZetaRow,
};
use basel::zeta::{closed_coefficient_with, zeta_even_closed, zeta_even_recurrence};

#[derive(Parser)]
#[command(
    name = "basel",
    version,
    about = "Exact zeta(2k) = C_k pi^(2k), Bernoulli identities, and validated numeric cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
    Json,
    Latex,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => OutputFormat::Plain,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Latex => OutputFormat::Latex,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConventionArg {
    Plus,
    Minus,
}

impl From<ConventionArg> for BernoulliConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Plus => BernoulliConvention::Plus,
            ConventionArg::Minus => BernoulliConvention::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    #[value(name = "lemma14")]
    Lemma14,
    #[value(name = "eq11")]
    Eq11,
    #[value(name = "eq12")]
    Eq12,
    #[value(name = "lemma15")]
    Lemma15,
    #[value(name = "all")]
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact zeta(2k) for k = 1..=max-k, with validated decimal enclosures.
    Zeta {
        /// Largest k (zeta argument 2k).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=100_000))]
        max_k: u64,
        /// Working precision in bits for the decimal column.
        #[arg(long, default_value_t = 128, value_parser = clap::value_parser!(u32).range(16..=65_536))]
        precision: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Exact Bernoulli numbers B_0..=B_max-m.
    Bernoulli {
        /// Largest index.
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..=1_000_000))]
        max_m: u64,
        /// Sign convention (the conventions differ only at B_1).
        #[arg(long, value_enum, default_value_t = ConventionArg::Minus)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Check identity suites exactly; exit 1 with a witness on failure.
    Verify {
        /// Which suite to run.
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest index to check in each suite.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
        max_index: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        /// Worker threads for the index sweep.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=256))]
        jobs: u64,
        /// Add 1 to this Bernoulli index before every use (test harness
        /// hook for exercising failure reporting).
        #[arg(long, hide = true)]
        corrupt_bernoulli: Option<u64>,
    },
    /// Cosine moments of x^(2k) with quadrature cross-checks, series tail
    /// decay, and reconstruction at pi.
    Fourier {
        /// Exponent parameter: the integrand is x^(2k).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=10_000))]
        k: u64,
        /// Moments and series terms to compute (frequencies 1..=n-max).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
        n_max: u64,
        /// Partial-sum length for the alternating moment series error.
        #[arg(long = "partial-N", default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..=10_000_000))]
        partial_n: u64,
        /// Working precision in bits.
        #[arg(long, default_value_t = 128, value_parser = clap::value_parser!(u32).range(16..=65_536))]
        precision: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Cmd::Zeta {
            max_k,
            precision,
            format,
        } => {
            print!("{}", cmd_zeta(max_k, precision, format.into()));
            ExitCode::SUCCESS
        }
        Cmd::Bernoulli {
            max_m,
            convention,
            format,
        } => {
            print!("{}", cmd_bernoulli(max_m, convention.into(), format.into()));
            ExitCode::SUCCESS
        }
        Cmd::Verify {
            suite,
            max_index,
            format,
            jobs,
            corrupt_bernoulli,
        } => {
            let (out, passed) =
                cmd_verify(suite, max_index, jobs as usize, corrupt_bernoulli, format.into());
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::Fourier {
            k,
            n_max,
            partial_n,
            precision,
            format,
        } => {
            let (out, passed) = cmd_fourier(k, n_max, partial_n, precision, format.into());
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn cmd_zeta(max_k: u64, precision: u32, format: OutputFormat) -> String {
    let rows: Vec<ZetaRow> = (1..=max_k)
        .map(|k| {
            let v = zeta_even_closed(k);
            ZetaRow {
                k,
                approx: v.eval(precision),
                coefficient: v.coefficient,
            }
        })
        .collect();
    render::render_zeta(&rows, precision, format)
}

fn cmd_bernoulli(max_m: u64, convention: BernoulliConvention, format: OutputFormat) -> String {
    let rows: Vec<BernoulliRow> = (0..=max_m)
        .map(|m| BernoulliRow {
            m,
            value: bernoulli_number(m, convention),
        })
        .collect();
    render::render_bernoulli(&rows, convention, format)
}

/// Which indices of [lo, hi] a suite evaluates.
#[derive(Clone, Copy)]
enum Stride {
    All,
    EvenOnly,
}

impl Stride {
    fn eligible(self, i: u64) -> bool {
        match self {
            Stride::All => true,
            Stride::EvenOnly => i % 2 == 0,
        }
    }

    /// Eligible indices in [lo, i].
    fn count_through(self, lo: u64, i: u64) -> u64 {
        match self {
            Stride::All => i - lo + 1,
            Stride::EvenOnly => i / 2 - (lo - 1) / 2,
        }
    }
}

/// Sweep [lo, hi] across `jobs` contiguous chunks; report the lowest
/// failing index. The merged report is identical whatever `jobs` is.
fn sweep(
    identity: &'static str,
    lo: u64,
    hi: u64,
    stride: Stride,
    jobs: usize,
    sides: &(dyn Fn(u64) -> (BigRational, BigRational) + Sync),
) -> IdentityReport {
    let all_pass = |checked: u64| IdentityReport {
        identity,
        lo,
        hi,
        checked,
        status: IdentityStatus::AllPass,
    };
    if hi < lo {
        return all_pass(0);
    }
    let total = hi - lo + 1;
    let jobs = jobs.clamp(1, total as usize);
    let chunk = total / jobs as u64;
    let rem = total % jobs as u64;
    let mut failures: Vec<Option<(u64, BigRational, BigRational)>> = Vec::with_capacity(jobs);
    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(jobs);
        let mut start = lo;
        for j in 0..jobs {
            let len = chunk + if (j as u64) < rem { 1 } else { 0 };
            let a = start;
            let b = start + len - 1;
            start = b + 1;
            handles.push(scope.spawn(move || {
                for i in a..=b {
                    if !stride.eligible(i) {
                        continue;
                    }
                    let (lhs, rhs) = sides(i);
                    if lhs != rhs {
                        return Some((i, lhs, rhs));
                    }
                }
                None
            }));
        }
        for h in handles {
            failures.push(h.join().expect("sweep worker panicked"));
        }
    });
    match failures.into_iter().flatten().min_by_key(|(i, _, _)| *i) {
        None => all_pass(stride.count_through(lo, hi)),
        Some((index, lhs, rhs)) => IdentityReport {
            identity,
            lo,
            hi,
            checked: stride.count_through(lo, index),
            status: IdentityStatus::FirstFailure { index, lhs, rhs },
        },
    }
}

fn cmd_verify(
    suite: SuiteArg,
    max_index: u64,
    jobs: usize,
    corrupt: Option<u64>,
    format: OutputFormat,
) -> (String, bool) {
    // Fill the shared memo tables once so worker threads mostly read.
    bernoulli_number(2 * max_index + 2, BernoulliConvention::Minus);
    basel::rational::factorial(4 * max_index + 4);
    if matches!(suite, SuiteArg::Lemma15 | SuiteArg::All) {
        zeta_even_recurrence(max_index);
    }

    let perturb = move |m: u64, v: BigRational| -> BigRational {
        if Some(m) == corrupt {
            v + BigRational::one()
        } else {
            v
        }
    };
    let minus = move |m: u64| perturb(m, bernoulli_number(m, BernoulliConvention::Minus));
    let plus = move |m: u64| perturb(m, bernoulli_number(m, BernoulliConvention::Plus));

    let run = |arg: SuiteArg| -> IdentityReport {
        match arg {
            SuiteArg::Lemma14 => sweep("lemma14", 1, max_index, Stride::All, jobs, &|k| {
                even_sum_identity_with(k, &minus)
            }),
            SuiteArg::Eq11 => sweep("eq11", 2, max_index, Stride::EvenOnly, jobs, &|m| {
                full_sum_identity_with(m, &plus).expect("even m only")
            }),
            SuiteArg::Eq12 => sweep("eq12", 1, max_index, Stride::All, jobs, &|k| {
                binomial_sum_identity_with(k, &plus)
            }),
            SuiteArg::Lemma15 => sweep("lemma15", 1, max_index, Stride::All, jobs, &|k| {
                (
                    zeta_even_recurrence(k).coefficient,
                    closed_coefficient_with(k, &minus),
                )
            }),
            SuiteArg::All => unreachable!("expanded by caller"),
        }
    };

    let reports: Vec<IdentityReport> = match suite {
        SuiteArg::All => [
            SuiteArg::Lemma14,
            SuiteArg::Eq11,
            SuiteArg::Eq12,
            SuiteArg::Lemma15,
        ]
        .into_iter()
        .map(run)
        .collect(),
        single => vec![run(single)],
    };

    let suite_name = match suite {
        SuiteArg::Lemma14 => "lemma14",
        SuiteArg::Eq11 => "eq11",
        SuiteArg::Eq12 => "eq12",
        SuiteArg::Lemma15 => "lemma15",
        SuiteArg::All => "all",
    };
    let passed = render::verify_passed(&reports);
    (
        render::render_verify(&reports, suite_name, max_index, jobs, format),
        passed,
    )
}

fn cmd_fourier(
    k: u64,
    n_max: u64,
    partial_n: u64,
    precision: u32,
    format: OutputFormat,
) -> (String, bool) {
    let moments: Vec<MomentRow> = (1..=n_max)
        .map(|n| {
            let closed = cosine_moment(n, k);
            let approx = closed.eval(precision);
            let quadrature = cosine_moment_quadrature(n, k, precision);
            let contained = quadrature
                .as_ref()
                .map(|q| q.contains_ball(&approx))
                .unwrap_or(false);
            MomentRow {
                n,
                closed,
                approx,
                quadrature,
                contained,
            }
        })
        .collect();

    let partial_sum_error = alternating_moment_partial_sum(k, partial_n)
        .sub(&alternating_moment_limit(k))
        .eval(precision)
        .abs_hi();

    let target = PiPolynomial::term(rat(1, 1), 2 * k as u32).eval(precision);
    let reconstruction_error = reconstruct_at(k, &EvalPoint::PiMultiple(rat(1, 1)), n_max, precision)
        .sub(&target)
        .abs_hi();

    let report = FourierReport {
        k,
        n_max,
        partial_n,
        precision_bits: precision,
        a0: fourier_coefficients(k, 0).a0,
        moments,
        partial_sum_error,
        reconstruction_error,
    };
    let passed = report.all_contained();
    (render::render_fourier(&report, format), passed)
}
