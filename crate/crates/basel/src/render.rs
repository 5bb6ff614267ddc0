//! Rendering of command results in the four output formats.
//!
//! Everything here is deterministic string building: exact fractions
//! render as `num/den`, validated decimals come from [`ApproxReal`]'s
//! directed-rounding printers, and the JSON tree is built with ordered
//! maps so the same data always serializes to the same bytes. The JSON
//! schema is uniform across commands: a top-level object with exactly
//! `command`, `params`, `rows`, `status`, fractions as
//! `{"num": "...", "den": "..."}` string pairs, decimals as strings.

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::ball::{decimal_upper_bound, ApproxReal};
use crate::bernoulli::BernoulliConvention;
use crate::error::Error;
use crate::identities::{IdentityReport, IdentityStatus};
use crate::pi_poly::{latex as pi_latex, PiPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
    Latex,
}

impl OutputFormat {
    pub fn name(self) -> &'static str {
        match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Latex => "latex",
        }
    }
}

/// Decimal digits that `precision_bits` of binary precision justify.
pub fn digits_for(precision_bits: u32) -> usize {
    ((precision_bits as usize) * 30_103 / 100_000).max(1)
}

fn fraction_json(q: &BigRational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

fn latex_rational(q: &BigRational) -> String {
    use num_traits::{One, Signed};
    if q.denom().is_one() {
        return q.numer().to_string();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", q.numer().magnitude(), q.denom())
}

pub struct ZetaRow {
    pub k: u64,
    pub coefficient: BigRational,
    pub approx: ApproxReal,
}

pub fn render_zeta(rows: &[ZetaRow], precision_bits: u32, format: OutputFormat) -> String {
    let digits = digits_for(precision_bits);
    match format {
        OutputFormat::Plain => {
            let mut out = format!(
                "zeta(2k) as exact rational multiples of pi^(2k), precision {precision_bits} bits\n"
            );
            for r in rows {
                out.push_str(&format!(
                    "k={}  zeta({}) = {} ~ {}  (radius <= {})\n",
                    r.k,
                    2 * r.k,
                    PiPolynomial::term(r.coefficient.clone(), 2 * r.k as u32),
                    r.approx.decimal(digits),
                    r.approx.radius_decimal(),
                ));
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("k,coefficient,value,approx,radius\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.k,
                    r.coefficient,
                    PiPolynomial::term(r.coefficient.clone(), 2 * r.k as u32),
                    r.approx.decimal(digits),
                    r.approx.radius_decimal(),
                ));
            }
            out
        }
        OutputFormat::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "k": r.k,
                        "coefficient": fraction_json(&r.coefficient),
                        "value": PiPolynomial::term(r.coefficient.clone(), 2 * r.k as u32).to_string(),
                        "approx": r.approx.decimal(digits),
                        "radius": r.approx.radius_decimal(),
                    })
                })
                .collect();
            let doc = json!({
                "command": "zeta",
                "params": { "max_k": rows.len() as u64, "precision": precision_bits, "format": "json" },
                "rows": rows_json,
                "status": "ok",
            });
            format!("{doc}\n")
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            for r in rows {
                out.push_str(&format!(
                    "\\zeta({}) = {}\\pi^{{{}}} \\approx {}\n",
                    2 * r.k,
                    latex_rational(&r.coefficient),
                    2 * r.k,
                    r.approx.decimal(digits),
                ));
            }
            out
        }
    }
}

pub struct BernoulliRow {
    pub m: u64,
    pub value: BigRational,
}

pub fn render_bernoulli(
    rows: &[BernoulliRow],
    convention: BernoulliConvention,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Plain => {
            let mut out = format!("Bernoulli numbers, {convention} convention\n");
            for r in rows {
                out.push_str(&format!("B_{} = {}\n", r.m, r.value));
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("m,value\n");
            for r in rows {
                out.push_str(&format!("{},{}\n", r.m, r.value));
            }
            out
        }
        OutputFormat::Json => {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "m": r.m, "value": fraction_json(&r.value) }))
                .collect();
            let doc = json!({
                "command": "bernoulli",
                "params": {
                    "max_m": rows.last().map_or(0, |r| r.m),
                    "convention": convention.to_string(),
                    "format": "json",
                },
                "rows": rows_json,
                "status": "ok",
            });
            format!("{doc}\n")
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            for r in rows {
                out.push_str(&format!("B_{{{}}} = {}\n", r.m, latex_rational(&r.value)));
            }
            out
        }
    }
}

pub fn verify_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}

pub fn render_verify(
    reports: &[IdentityReport],
    suite: &str,
    max_index: u64,
    jobs: usize,
    format: OutputFormat,
) -> String {
    let passed = verify_passed(reports);
    match format {
        OutputFormat::Plain => {
            let mut out = format!("verify suite {suite}, indices up to {max_index}\n");
            for r in reports {
                match &r.status {
                    IdentityStatus::AllPass => out.push_str(&format!(
                        "{}: PASS  (indices {}..={}, {} checked)\n",
                        r.identity, r.lo, r.hi, r.checked
                    )),
                    IdentityStatus::FirstFailure { index, lhs, rhs } => out.push_str(&format!(
                        "{}: FAIL at index {}: lhs = {} != rhs = {}\n",
                        r.identity, index, lhs, rhs
                    )),
                }
            }
            out.push_str(if passed { "result: pass\n" } else { "result: fail\n" });
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("suite,lo,hi,checked,status,fail_index,lhs,rhs\n");
            for r in reports {
                match &r.status {
                    IdentityStatus::AllPass => out.push_str(&format!(
                        "{},{},{},{},pass,,,\n",
                        r.identity, r.lo, r.hi, r.checked
                    )),
                    IdentityStatus::FirstFailure { index, lhs, rhs } => out.push_str(&format!(
                        "{},{},{},{},fail,{},{},{}\n",
                        r.identity, r.lo, r.hi, r.checked, index, lhs, rhs
                    )),
                }
            }
            out
        }
        OutputFormat::Json => {
            let rows_json: Vec<Value> = reports
                .iter()
                .map(|r| match &r.status {
                    IdentityStatus::AllPass => json!({
                        "suite": r.identity,
                        "lo": r.lo,
                        "hi": r.hi,
                        "checked": r.checked,
                        "status": "pass",
                    }),
                    IdentityStatus::FirstFailure { index, lhs, rhs } => json!({
                        "suite": r.identity,
                        "lo": r.lo,
                        "hi": r.hi,
                        "checked": r.checked,
                        "status": "fail",
                        "witness": {
                            "index": index,
                            "lhs": fraction_json(lhs),
                            "rhs": fraction_json(rhs),
                        },
                    }),
                })
                .collect();
            let doc = json!({
                "command": "verify",
                "params": { "suite": suite, "max_index": max_index, "jobs": jobs, "format": "json" },
                "rows": rows_json,
                "status": if passed { "pass" } else { "fail" },
            });
            format!("{doc}\n")
        }
        OutputFormat::Latex => {
            let mut out = String::new();
            for r in reports {
                match &r.status {
                    IdentityStatus::AllPass => out.push_str(&format!(
                        "\\texttt{{{}}} & {}\\ldots{} & \\text{{pass}} \\\\\n",
                        r.identity, r.lo, r.hi
                    )),
                    IdentityStatus::FirstFailure { index, lhs, rhs } => out.push_str(&format!(
                        "\\texttt{{{}}} & {}\\ldots{} & \\text{{fail at {}: {} \\neq {}}} \\\\\n",
                        r.identity, r.lo, r.hi, index, latex_rational(lhs), latex_rational(rhs)
                    )),
                }
            }
            out
        }
    }
}

pub struct MomentRow {
    pub n: u64,
    pub closed: PiPolynomial,
    pub approx: ApproxReal,
    pub quadrature: Result<ApproxReal, Error>,
    pub contained: bool,
}

pub struct FourierReport {
    pub k: u64,
    pub n_max: u64,
    pub partial_n: u64,
    pub precision_bits: u32,
    pub a0: PiPolynomial,
    pub moments: Vec<MomentRow>,
    /// Upper bound for |partial sum - limit| of the alternating moment
    /// series at N = partial_n.
    pub partial_sum_error: BigRational,
    /// Upper bound for |reconstruction at pi - pi^(2k)| with n_max terms.
    pub reconstruction_error: BigRational,
}

impl FourierReport {
    pub fn all_contained(&self) -> bool {
        self.moments.iter().all(|m| m.contained)
    }
}

pub fn render_fourier(report: &FourierReport, format: OutputFormat) -> String {
    let digits = digits_for(report.precision_bits).min(40);
    let passed = report.all_contained();
    match format {
        OutputFormat::Plain => {
            let mut out = format!(
                "fourier data for x^(2k), k = {}, precision {} bits\n",
                report.k, report.precision_bits
            );
            out.push_str(&format!("a0 = {}\n", report.a0));
            out.push_str("sine coefficients: all zero (even integrand)\n");
            for m in &report.moments {
                match &m.quadrature {
                    Ok(q) => out.push_str(&format!(
                        "n={}  I = {} ~ {}  quadrature ~ {} (radius <= {})  containment: {}\n",
                        m.n,
                        m.closed,
                        m.approx.decimal(digits),
                        q.decimal(digits),
                        q.radius_decimal(),
                        if m.contained { "ok" } else { "FAIL" },
                    )),
                    Err(e) => out.push_str(&format!(
                        "n={}  I = {} ~ {}  quadrature FAILED: {}\n",
                        m.n,
                        m.closed,
                        m.approx.decimal(digits),
                        e,
                    )),
                }
            }
            out.push_str(&format!(
                "alternating partial sum error at N={}: <= {}\n",
                report.partial_n,
                decimal_upper_bound(&report.partial_sum_error),
            ));
            out.push_str(&format!(
                "reconstruction error at x=pi with {} terms: <= {}\n",
                report.n_max,
                decimal_upper_bound(&report.reconstruction_error),
            ));
            out.push_str(if passed { "result: pass\n" } else { "result: fail\n" });
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("kind,index,value,approx,radius,status\n");
            out.push_str(&format!("a0,,{},,,\n", report.a0));
            for m in &report.moments {
                match &m.quadrature {
                    Ok(q) => out.push_str(&format!(
                        "moment,{},{},{},{},{}\n",
                        m.n,
                        m.closed,
                        q.decimal(digits),
                        q.radius_decimal(),
                        if m.contained { "contained" } else { "excluded" },
                    )),
                    Err(_) => out.push_str(&format!(
                        "moment,{},{},,,unreachable\n",
                        m.n, m.closed
                    )),
                }
            }
            out.push_str(&format!(
                "partial_sum_error,{},{},,,\n",
                report.partial_n,
                decimal_upper_bound(&report.partial_sum_error),
            ));
            out.push_str(&format!(
                "reconstruction_error,{},{},,,\n",
                report.n_max,
                decimal_upper_bound(&report.reconstruction_error),
            ));
            out
        }
        OutputFormat::Json => {
            let mut rows_json = vec![json!({ "kind": "a0", "value": report.a0.to_string() })];
            for m in &report.moments {
                rows_json.push(match &m.quadrature {
                    Ok(q) => json!({
                        "kind": "moment",
                        "n": m.n,
                        "value": m.closed.to_string(),
                        "approx": m.approx.decimal(digits),
                        "quadrature": q.decimal(digits),
                        "radius": q.radius_decimal(),
                        "contained": m.contained,
                    }),
                    Err(e) => json!({
                        "kind": "moment",
                        "n": m.n,
                        "value": m.closed.to_string(),
                        "approx": m.approx.decimal(digits),
                        "quadrature": Value::Null,
                        "error": e.to_string(),
                        "contained": false,
                    }),
                });
            }
            rows_json.push(json!({
                "kind": "partial_sum_error",
                "n_terms": report.partial_n,
                "bound": decimal_upper_bound(&report.partial_sum_error),
            }));
            rows_json.push(json!({
                "kind": "reconstruction_error",
                "point": "pi",
                "n_terms": report.n_max,
                "bound": decimal_upper_bound(&report.reconstruction_error),
            }));
            rows_json.push(json!({ "kind": "sine_terms", "all_zero": true }));
            let doc = json!({
                "command": "fourier",
                "params": {
                    "k": report.k,
                    "n_max": report.n_max,
                    "partial_N": report.partial_n,
                    "precision": report.precision_bits,
                    "format": "json",
                },
                "rows": rows_json,
                "status": if passed { "pass" } else { "fail" },
            });
            format!("{doc}\n")
        }
        OutputFormat::Latex => {
            let mut out = format!("a_0 = {}\n", pi_latex(&report.a0));
            for m in &report.moments {
                out.push_str(&format!(
                    "I({}, {}) = {}\n",
                    m.n,
                    report.k,
                    pi_latex(&m.closed)
                ));
            }
            out.push_str(&format!(
                "\\left|E({}, {})\\right| \\le {}\n",
                report.k,
                report.partial_n,
                decimal_upper_bound(&report.partial_sum_error),
            ));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::zeta::zeta_even_closed;

    fn zeta_rows(max_k: u64) -> Vec<ZetaRow> {
        (1..=max_k)
            .map(|k| {
                let v = zeta_even_closed(k);
                ZetaRow {
                    k,
                    approx: v.eval(64),
                    coefficient: v.coefficient,
                }
            })
            .collect()
    }

    #[test]
    fn zeta_plain_has_fraction_and_power() {
        let out = render_zeta(&zeta_rows(2), 64, OutputFormat::Plain);
        assert!(out.contains("1/6"));
        assert!(out.contains("pi^2"));
        assert!(out.contains("1/90"));
        assert!(out.contains("pi^4"));
        assert!(out.contains("1.6449340668"));
    }

    #[test]
    fn zeta_csv_and_plain_share_fraction_bytes() {
        let csv = render_zeta(&zeta_rows(3), 64, OutputFormat::Csv);
        let plain = render_zeta(&zeta_rows(3), 64, OutputFormat::Plain);
        for frac in ["1/6", "1/90", "1/945"] {
            assert!(csv.contains(frac));
            assert!(plain.contains(frac));
        }
        assert!(csv.starts_with("k,coefficient,value,approx,radius\n"));
    }

    #[test]
    fn zeta_latex_has_frac() {
        let out = render_zeta(&zeta_rows(1), 64, OutputFormat::Latex);
        assert!(out.contains("\\frac{1}{6}"));
        assert!(out.contains("\\zeta(2)"));
        assert!(out.contains("\\pi^{2}"));
    }

    #[test]
    fn zeta_json_round_trips_bytewise() {
        let out = render_zeta(&zeta_rows(2), 64, OutputFormat::Json);
        let parsed: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(format!("{parsed}\n"), out);
        assert_eq!(parsed["command"], "zeta");
        assert_eq!(parsed["rows"][0]["coefficient"]["num"], "1");
        assert_eq!(parsed["rows"][0]["coefficient"]["den"], "6");
        // Top-level key order is part of the contract.
        let keys: Vec<&String> = parsed.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["command", "params", "rows", "status"]);
    }

    #[test]
    fn bernoulli_formats() {
        let rows = vec![
            BernoulliRow { m: 0, value: rat(1, 1) },
            BernoulliRow { m: 1, value: rat(-1, 2) },
        ];
        let plain = render_bernoulli(&rows, BernoulliConvention::Minus, OutputFormat::Plain);
        assert!(plain.contains("B_1 = -1/2"));
        let csv = render_bernoulli(&rows, BernoulliConvention::Minus, OutputFormat::Csv);
        assert!(csv.contains("1,-1/2"));
        let latex = render_bernoulli(&rows, BernoulliConvention::Minus, OutputFormat::Latex);
        assert!(latex.contains("B_{1} = -\\frac{1}{2}"));
        let json_out = render_bernoulli(&rows, BernoulliConvention::Minus, OutputFormat::Json);
        let parsed: Value = serde_json::from_str(&json_out).unwrap();
        assert_eq!(parsed["rows"][1]["value"]["num"], "-1");
        assert_eq!(parsed["rows"][1]["value"]["den"], "2");
    }

    #[test]
    fn verify_rendering_carries_witness() {
        let reports = vec![IdentityReport {
            identity: "eq12",
            lo: 1,
            hi: 10,
            checked: 2,
            status: IdentityStatus::FirstFailure {
                index: 2,
                lhs: rat(26, 3),
                rhs: rat(9, 1),
            },
        }];
        let plain = render_verify(&reports, "eq12", 10, 1, OutputFormat::Plain);
        assert!(plain.contains("FAIL at index 2"));
        assert!(plain.contains("result: fail"));
        let json_out = render_verify(&reports, "eq12", 10, 1, OutputFormat::Json);
        let parsed: Value = serde_json::from_str(&json_out).unwrap();
        assert_eq!(parsed["status"], "fail");
        assert_eq!(parsed["rows"][0]["witness"]["index"], 2);
        assert_eq!(parsed["rows"][0]["witness"]["lhs"]["num"], "26");
    }
}
