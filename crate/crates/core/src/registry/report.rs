//! Check reports and their machine-readable serializations.
//!
//! JSON and CSV are written by hand so key order and float formatting are
//! fixed: floats render as C's `%.17g` (17 significant digits, shortest
//! trailing-zero-free form), which round-trips doubles exactly and makes
//! consecutive runs byte-identical. Tables use 9 significant digits.

use serde::Deserialize;

/// Aggregate verdict for one identity on one parameter preset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "SKIPPED_OUT_OF_REGION")]
    SkippedOutOfRegion,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::SkippedOutOfRegion => "SKIPPED_OUT_OF_REGION",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a single sample point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointStatus {
    Ok,
    Skipped,
    /// The oracle did not converge to its own tolerance; the recorded
    /// values are best estimates and are excluded from the verdict.
    Degraded,
}

impl PointStatus {
    pub fn name(&self) -> &'static str {
        match self {
            PointStatus::Ok => "ok",
            PointStatus::Skipped => "skipped",
            PointStatus::Degraded => "degraded",
        }
    }
}

/// One sample point of an identity check.
#[derive(Debug, Clone, Deserialize)]
pub struct PointRecord {
    pub x: f64,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub rel_err: Option<f64>,
    pub status: PointStatus,
}

/// Parameter values echoed into reports (fixed slots, defaults where a
/// family does not use one).
#[derive(Debug, Clone, Deserialize)]
pub struct ReportParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub alpha2: f64,
    pub beta2: f64,
}

/// Verification verdict for one identity over a sample grid.
#[derive(Debug, Clone, Deserialize)]
pub struct IdentityCheckReport {
    pub id: String,
    pub family: Option<String>,
    pub mode: String,
    pub params: ReportParams,
    pub grid: Vec<f64>,
    pub points: Vec<PointRecord>,
    pub max_rel_err: f64,
    pub verdict: Verdict,
    pub oracle_cost: u64,
    pub degraded: bool,
    pub erratum_note: Option<String>,
}

/// C `%.17g` formatting: fixed notation for exponents in [-4, 17),
/// scientific otherwise, trailing zeros stripped.
pub fn g17(x: f64) -> String {
    fmt_g(x, 17)
}

/// `%.9g`, the table precision.
pub fn g9(x: f64) -> String {
    fmt_g(x, 9)
}

fn fmt_g(x: f64, prec: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sci = format!("{:.*e}", prec - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent marker");
    let e: i32 = exp.parse().expect("exponent digits");
    if e >= -4 && e < prec as i32 {
        let frac = (prec as i32 - 1 - e).max(0) as usize;
        trim_zeros(format!("{x:.frac$}"))
    } else {
        let mant = trim_zeros(mant.to_string());
        format!("{}e{}{:02}", mant, if e < 0 { "-" } else { "+" }, e.abs())
    }
}

fn trim_zeros(mut t: String) -> String {
    if t.contains('.') {
        while t.ends_with('0') {
            t.pop();
        }
        if t.ends_with('.') {
            t.pop();
        }
    }
    t
}

fn json_str(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_opt_f64(v: Option<f64>) -> String {
    match v {
        Some(x) => g17(x),
        None => "null".to_string(),
    }
}

impl IdentityCheckReport {
    /// Stable single-report JSON object (keys in fixed order).
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        s.push_str("{\"id\":");
        s.push_str(&json_str(&self.id));
        s.push_str(",\"family\":");
        match &self.family {
            Some(f) => s.push_str(&json_str(f)),
            None => s.push_str("null"),
        }
        s.push_str(",\"mode\":");
        s.push_str(&json_str(&self.mode));
        s.push_str(",\"params\":{");
        s.push_str(&format!(
            "\"alpha\":{},\"beta\":{},\"gamma\":{},\"lambda\":{},\"alpha2\":{},\"beta2\":{}",
            g17(self.params.alpha),
            g17(self.params.beta),
            g17(self.params.gamma),
            g17(self.params.lambda),
            g17(self.params.alpha2),
            g17(self.params.beta2)
        ));
        s.push_str("},\"grid\":[");
        for (i, x) in self.grid.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&g17(*x));
        }
        s.push_str("],\"points\":[");
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!(
                "{{\"x\":{},\"lhs\":{},\"rhs\":{},\"rel_err\":{},\"status\":{}}}",
                g17(p.x),
                json_opt_f64(p.lhs),
                json_opt_f64(p.rhs),
                json_opt_f64(p.rel_err),
                json_str(p.status.name())
            ));
        }
        s.push_str("],\"max_rel_err\":");
        s.push_str(&g17(self.max_rel_err));
        s.push_str(",\"verdict\":");
        s.push_str(&json_str(self.verdict.name()));
        s.push_str(",\"oracle_cost\":");
        s.push_str(&self.oracle_cost.to_string());
        s.push_str(",\"degraded\":");
        s.push_str(if self.degraded { "true" } else { "false" });
        s.push_str(",\"erratum_note\":");
        match &self.erratum_note {
            Some(n) => s.push_str(&json_str(n)),
            None => s.push_str("null"),
        }
        s.push('}');
        s
    }

    /// CSV rows, one per sample point.
    pub fn to_csv_rows(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                self.id,
                self.family.as_deref().unwrap_or(""),
                self.mode,
                g17(self.params.alpha),
                g17(self.params.beta),
                g17(self.params.gamma),
                g17(self.params.lambda),
                g17(self.params.alpha2),
                g17(self.params.beta2),
                g17(p.x),
                p.lhs.map(g17).unwrap_or_default(),
                p.rhs.map(g17).unwrap_or_default(),
                p.rel_err.map(g17).unwrap_or_default(),
                p.status.name(),
                self.verdict.name(),
                csv_escape(self.erratum_note.as_deref().unwrap_or(""))
            ));
        }
        out
    }
}

pub const CSV_HEADER: &str =
    "id,family,mode,alpha,beta,gamma,lambda,alpha2,beta2,x,lhs,rhs,rel_err,status,verdict,erratum_note\n";

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Serializes a report list as a JSON array, one report per line.
pub fn reports_to_json(reports: &[IdentityCheckReport]) -> String {
    let mut s = String::from("[\n");
    for (i, r) in reports.iter().enumerate() {
        s.push_str(&r.to_json());
        if i + 1 < reports.len() {
            s.push(',');
        }
        s.push('\n');
    }
    s.push(']');
    s.push('\n');
    s
}

/// Serializes a report list as CSV with header.
pub fn reports_to_csv(reports: &[IdentityCheckReport]) -> String {
    let mut s = String::from(CSV_HEADER);
    for r in reports {
        s.push_str(&r.to_csv_rows());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g17_reference_cases() {
        assert_eq!(g17(0.0), "0");
        assert_eq!(g17(3.0), "3");
        assert_eq!(g17(0.5), "0.5");
        assert_eq!(g17(-2.0), "-2");
        assert_eq!(g17(1e-10), "1e-10");
        assert_eq!(g17(1.5e20), "1.5e+20");
        assert_eq!(g17(std::f64::consts::E), "2.7182818284590451");
        assert_eq!(g9(123.456789123), "123.456789");
    }

    #[test]
    fn g17_round_trips_doubles() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x617);
        for _ in 0..5000 {
            let x = f64::from_bits(rng.gen::<u64>());
            if !x.is_finite() {
                continue;
            }
            let s = g17(x);
            let y: f64 = s.parse().expect("parse back");
            assert!(
                x == y || (x == 0.0 && y == 0.0),
                "round-trip failed: {x:?} -> {s} -> {y:?}"
            );
            assert_eq!(g17(y), s, "re-format not stable for {x:?}");
        }
    }
}
