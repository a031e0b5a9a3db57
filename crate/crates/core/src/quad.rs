//! Adaptive quadrature: forward Laplace transforms on [0, ∞), finite
//! convolutions, and the logarithmic-kernel convolution.
//!
//! The engine is 15-point Gauss–Kronrod with worst-interval-first
//! subdivision. Endpoint singularities are declared by the caller
//! ([`Endpoint`]); the engine maps them away with a graded power
//! substitution t = b u^m, m chosen so the mapped integrand is at least C²
//! at the endpoint. Semi-infinite ranges are swept in geometric panels and
//! truncated once the panel contributions certify the tail below the
//! configured cutoff.
//!
//! Panels are summed in a fixed order with compensated accumulation, so
//! results are run-to-run identical.

use std::cell::RefCell;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Behaviour of an integrand at an interval endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Endpoint {
    /// No singularity.
    #[default]
    Smooth,
    /// Algebraic t^σ with σ > -1 (possibly times slowly varying factors).
    Algebraic(f64),
    /// Integrable logarithmic singularity, ln t times a smooth factor.
    Logarithmic,
}

/// Tolerances and budgets for the quadrature engine.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Stop sweeping once panel contributions fall this many decades below
    /// the running peak.
    pub tail_cutoff_decades: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
            tail_cutoff_decades: 16.0,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.rel_tol < 1e-13 {
            return Err(Error::domain("rel_tol must be at least 1e-13"));
        }
        if self.max_subdivisions < 10 {
            return Err(Error::domain("max_subdivisions must be at least 10"));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::domain("abs_tol must be positive"));
        }
        Ok(())
    }

    /// Loosened copy for inner integrals of nested compositions.
    pub(crate) fn scaled(&self, factor: f64) -> QuadratureConfig {
        QuadratureConfig {
            rel_tol: (self.rel_tol * factor).max(1e-13),
            abs_tol: self.abs_tol * factor,
            ..*self
        }
    }
}

/// Value with an a-posteriori error estimate and evaluation count.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_est: f64,
    pub evaluations: usize,
}

/// Borrowed time-function handle; evaluation failures propagate out of the
/// quadrature that consumed them.
pub type TimeFn<'a> = dyn Fn(f64) -> Result<f64> + 'a;

// 15-point Kronrod extension of the 7-point Gauss rule (positive nodes).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_64,
    0.949_107_912_342_758_52,
    0.864_864_423_359_769_07,
    0.741_531_185_599_394_44,
    0.586_087_235_467_691_13,
    0.405_845_151_377_397_17,
    0.207_784_955_007_898_47,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_553,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_41,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_69,
    0.279_705_391_489_276_67,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_39,
];

/// Captures the first integrand failure and poisons subsequent values, so
/// the driver can surface the real error instead of NaN garbage.
pub(crate) struct Capture<'a> {
    f: &'a TimeFn<'a>,
    err: RefCell<Option<Error>>,
    count: RefCell<usize>,
}

impl<'a> Capture<'a> {
    pub(crate) fn new(f: &'a TimeFn<'a>) -> Self {
        Capture {
            f,
            err: RefCell::new(None),
            count: RefCell::new(0),
        }
    }

    pub(crate) fn call(&self, t: f64) -> f64 {
        *self.count.borrow_mut() += 1;
        if self.err.borrow().is_some() {
            return f64::NAN;
        }
        match (self.f)(t) {
            Ok(v) => v,
            Err(e) => {
                *self.err.borrow_mut() = Some(e);
                f64::NAN
            }
        }
    }

    pub(crate) fn evaluations(&self) -> usize {
        *self.count.borrow()
    }

    pub(crate) fn take_err(&self) -> Option<Error> {
        self.err.borrow_mut().take()
    }
}

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let habs = h.abs();
    let fc = f(c);
    let mut fv = [0.0f64; 15];
    fv[7] = fc;
    let mut resk = WGK[7] * fc;
    let mut resabs = resk.abs();
    let mut resg = WG[3] * fc;
    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * resk;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    resasc *= habs;
    resabs *= habs;
    let value = resk * h;
    let mut err = ((resk - resg) * h).abs();
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    let floor = 50.0 * f64::EPSILON * resabs;
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) && floor > err {
        err = floor;
    }
    (value, err)
}

#[derive(Debug)]
struct Panel {
    err: f64,
    seq: u64,
    a: f64,
    b: f64,
    val: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.seq == other.seq
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err
            .total_cmp(&other.err)
            .then(other.seq.cmp(&self.seq))
    }
}

/// Adaptive integration over a finite interval. Returns (value, error
/// estimate); `used` accumulates the number of bisections consumed.
pub(crate) fn adaptive(
    f: &mut impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    budget: usize,
    used: &mut usize,
) -> Result<(f64, f64)> {
    let (v, e) = gk15(f, a, b);
    if !v.is_finite() {
        return Err(Error::Accuracy {
            value: v,
            error_est: f64::INFINITY,
        });
    }
    let mut heap = BinaryHeap::new();
    let mut seq = 0u64;
    heap.push(Panel { err: e, seq, a, b, val: v });
    let mut total_v = v;
    let mut total_e = e;
    let span = (b - a).abs();
    // Splits that stop improving the estimate signal a roundoff-limited
    // integrand; accept the best estimate instead of burning the budget.
    let mut stagnant = 0usize;

    while total_e > abs_tol.max(rel_tol * total_v.abs()) {
        if *used >= budget {
            return Err(Error::Accuracy {
                value: total_v,
                error_est: total_e,
            });
        }
        let worst = heap.pop().expect("heap not empty");
        let width = worst.b - worst.a;
        if width.abs() <= 8.0 * f64::EPSILON * span {
            // Cannot split further; accept whatever error remains.
            heap.push(worst);
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = gk15(f, worst.a, mid);
        let (v2, e2) = gk15(f, mid, worst.b);
        if !(v1.is_finite() && v2.is_finite()) {
            return Err(Error::Accuracy {
                value: total_v,
                error_est: f64::INFINITY,
            });
        }
        let prev_e = total_e;
        total_v += v1 + v2 - worst.val;
        total_e += e1 + e2 - worst.err;
        seq += 1;
        heap.push(Panel { err: e1, seq, a: worst.a, b: mid, val: v1 });
        seq += 1;
        heap.push(Panel { err: e2, seq, a: mid, b: worst.b, val: v2 });
        *used += 1;
        if total_e > 0.999 * prev_e {
            stagnant += 1;
            if stagnant >= 24 {
                break;
            }
        } else {
            stagnant = 0;
        }
    }

    // Deterministic final summation: panels in position order, compensated.
    let mut panels: Vec<Panel> = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a).then(p.b.total_cmp(&q.b)));
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut errs = 0.0;
    for p in &panels {
        let y = p.val;
        let t = sum + y;
        comp += if sum.abs() >= y.abs() { (sum - t) + y } else { (y - t) + sum };
        sum = t;
        errs += p.err;
    }
    Ok((sum + comp, errs))
}

/// Grading exponent making the mapped integrand at least C² at the origin.
fn grading(endpoint: Endpoint) -> i32 {
    match endpoint {
        Endpoint::Smooth => 1,
        Endpoint::Logarithmic => 6,
        Endpoint::Algebraic(sigma) => {
            if sigma >= 3.0 {
                1
            } else {
                (4.0 / (sigma + 1.0)).ceil().min(64.0) as i32
            }
        }
    }
}

/// ∫₀^b f with a declared singularity at 0, via t = b u^m.
pub(crate) fn graded_left(
    f: &mut impl FnMut(f64) -> f64,
    b: f64,
    endpoint: Endpoint,
    abs_tol: f64,
    rel_tol: f64,
    budget: usize,
    used: &mut usize,
) -> Result<(f64, f64)> {
    if let Endpoint::Algebraic(sigma) = endpoint {
        if sigma <= -1.0 {
            return Err(Error::domain(format!(
                "endpoint exponent {sigma} is not integrable"
            )));
        }
    }
    let m = grading(endpoint);
    if m == 1 {
        return adaptive(f, 0.0, b, abs_tol, rel_tol, budget, used);
    }
    let mf = m as f64;
    let mut mapped = |u: f64| {
        let t = b * u.powi(m);
        if t <= 0.0 {
            return 0.0;
        }
        mf * b * u.powi(m - 1) * f(t)
    };
    adaptive(&mut mapped, 0.0, 1.0, abs_tol, rel_tol, budget, used)
}

/// Forward Laplace transform ∫₀^∞ e^{-st} f(t) dt for s > 0.
///
/// `origin` declares the behaviour of `f` at t → 0 (an algebraic t^{β-1}
/// profile passes `Endpoint::Algebraic(beta - 1.0)`). The sweep truncates
/// once the exponential envelope certifies the tail below the cutoff.
pub fn laplace_forward(
    f: &TimeFn,
    origin: Endpoint,
    s: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    if !(s > 0.0) {
        return Err(Error::domain(format!("laplace_forward: requires s > 0 (s = {s})")));
    }
    let cap = Capture::new(f);
    let mut g = |t: f64| (-s * t).exp() * cap.call(t);

    let mut used = 0usize;
    let budget = cfg.max_subdivisions;
    let seg_abs = (cfg.abs_tol * 0.02).max(2e-15);
    let seg_rel = (cfg.rel_tol * 0.1).max(1e-13);

    let first = 1.0 / s;
    let mut segments: Vec<(f64, f64)> = Vec::new();
    let r = graded_left(&mut g, first, origin, seg_abs, seg_rel, budget, &mut used);
    if let Some(e) = cap.take_err() {
        return Err(e);
    }
    segments.push(r?);

    let cutoff_factor = 10f64.powf(-cfg.tail_cutoff_decades);
    let mut left = first;
    let mut peak = segments[0].0.abs();
    let mut quiet = 0;
    for _ in 0..64 {
        let right = left * 2.0;
        let r = adaptive(&mut g, left, right, seg_abs, seg_rel, budget, &mut used);
        if let Some(e) = cap.take_err() {
            return Err(e);
        }
        let (v, e) = r?;
        segments.push((v, e));
        peak = peak.max(v.abs());
        if v.abs() <= (cfg.abs_tol * 0.05).max(peak * cutoff_factor) {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        left = right;
    }
    if quiet < 2 {
        let (v, e) = totals(&segments);
        return Err(Error::Accuracy { value: v, error_est: e });
    }

    let (value, mut err) = totals(&segments);
    // Tail allowance: the next panel is no larger than the last one kept.
    err += segments.last().map(|s| s.0.abs()).unwrap_or(0.0);
    let result = QuadratureResult {
        value,
        abs_error_est: err,
        evaluations: cap.evaluations(),
    };
    if err <= cfg.abs_tol.max(cfg.rel_tol * value.abs()).max(cfg.abs_tol) {
        Ok(result)
    } else {
        Err(Error::Accuracy { value, error_est: err })
    }
}

fn totals(segments: &[(f64, f64)]) -> (f64, f64) {
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut err = 0.0;
    for &(v, e) in segments {
        let t = sum + v;
        comp += if sum.abs() >= v.abs() { (sum - t) + v } else { (v - t) + sum };
        sum = t;
        err += e;
    }
    (sum + comp, err)
}

/// Convolution (f * g)(t) = ∫₀^t f(τ) g(t-τ) dτ with declared endpoint
/// singularities of f and g at their own origins.
pub fn convolve(
    f: &TimeFn,
    f_origin: Endpoint,
    g: &TimeFn,
    g_origin: Endpoint,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    if !(t > 0.0) {
        return Err(Error::domain(format!("convolve: requires t > 0 (t = {t})")));
    }
    let cap_f = Capture::new(f);
    let cap_g = Capture::new(g);
    let mut used = 0usize;
    let budget = cfg.max_subdivisions;
    let half = 0.5 * t;
    let seg_abs = (cfg.abs_tol * 0.25).max(2e-15);
    let seg_rel = (cfg.rel_tol * 0.5).max(1e-13);

    // τ near 0: f's singularity.
    let mut lo = |tau: f64| cap_f.call(tau) * cap_g.call(t - tau);
    let r1 = graded_left(&mut lo, half, f_origin, seg_abs, seg_rel, budget, &mut used);
    check_caps(&cap_f, &cap_g)?;
    let (v1, e1) = r1?;

    // σ = t - τ near 0: g's singularity.
    let mut hi = |sig: f64| cap_f.call(t - sig) * cap_g.call(sig);
    let r2 = graded_left(&mut hi, half, g_origin, seg_abs, seg_rel, budget, &mut used);
    check_caps(&cap_f, &cap_g)?;
    let (v2, e2) = r2?;

    Ok(QuadratureResult {
        value: v1 + v2,
        abs_error_est: e1 + e2,
        evaluations: cap_f.evaluations() + cap_g.evaluations(),
    })
}

fn check_caps(a: &Capture, b: &Capture) -> Result<()> {
    if let Some(e) = a.take_err() {
        return Err(e);
    }
    if let Some(e) = b.take_err() {
        return Err(e);
    }
    Ok(())
}

/// Logarithmic-kernel convolution ∫₀^t (ln(t-t₁) + γ₀) g(t₁) dt₁.
///
/// The ln endpoint at t₁ = t is regularized by the graded substitution; the
/// origin follows `g_origin`.
pub fn log_kernel_convolve(
    g: &TimeFn,
    g_origin: Endpoint,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    cfg.validate()?;
    if !(t > 0.0) {
        return Err(Error::domain(format!(
            "log_kernel_convolve: requires t > 0 (t = {t})"
        )));
    }
    let g0 = crate::gamma::EULER_MASCHERONI;
    let cap = Capture::new(g);
    let mut used = 0usize;
    let budget = cfg.max_subdivisions;
    let half = 0.5 * t;
    let seg_abs = (cfg.abs_tol * 0.25).max(2e-15);
    let seg_rel = (cfg.rel_tol * 0.5).max(1e-13);

    let mut lo = |t1: f64| ((t - t1).ln() + g0) * cap.call(t1);
    let r1 = graded_left(&mut lo, half, g_origin, seg_abs, seg_rel, budget, &mut used);
    if let Some(e) = cap.take_err() {
        return Err(e);
    }
    let (v1, e1) = r1?;

    let mut hi = |sig: f64| (sig.ln() + g0) * cap.call(t - sig);
    let r2 = graded_left(
        &mut hi,
        half,
        Endpoint::Logarithmic,
        seg_abs,
        seg_rel,
        budget,
        &mut used,
    );
    if let Some(e) = cap.take_err() {
        return Err(e);
    }
    let (v2, e2) = r2?;

    Ok(QuadratureResult {
        value: v1 + v2,
        abs_error_est: e1 + e2,
        evaluations: cap.evaluations(),
    })
}

/// ∫₀^t g, used for the plain-integral auxiliaries; same graded handling.
pub fn integrate_to(
    g: &TimeFn,
    g_origin: Endpoint,
    t: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult> {
    let one = |_: f64| Ok(1.0);
    convolve(g, g_origin, &one, Endpoint::Smooth, t, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn laplace_of_constant_and_exponential() {
        let one = |_: f64| Ok(1.0);
        let r = laplace_forward(&one, Endpoint::Smooth, 2.0, &cfg()).unwrap();
        assert!((r.value - 0.5).abs() < 1e-10, "{}", r.value);
        assert!(r.abs_error_est <= 1e-9);

        let et = |t: f64| Ok(t.exp());
        let r = laplace_forward(&et, Endpoint::Smooth, 3.0, &cfg()).unwrap();
        assert!((r.value - 0.5).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn laplace_declared_singularity() {
        // L(t^{-1/2})(s) = sqrt(pi/s)
        let f = |t: f64| Ok(t.powf(-0.5));
        for s in [1.0, 4.0] {
            let r = laplace_forward(&f, Endpoint::Algebraic(-0.5), s, &cfg()).unwrap();
            let expect = (std::f64::consts::PI / s).sqrt();
            assert!(
                (r.value - expect).abs() <= 1e-8 * expect,
                "s={s}: {} vs {expect}",
                r.value
            );
        }
    }

    #[test]
    fn laplace_propagates_integrand_failure() {
        let bad = |_: f64| Err(Error::domain("boom"));
        assert!(matches!(
            laplace_forward(&bad, Endpoint::Smooth, 1.0, &cfg()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn convolution_reference_points() {
        let one = |_: f64| Ok(1.0);
        let r = convolve(&one, Endpoint::Smooth, &one, Endpoint::Smooth, 2.0, &cfg()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-10);

        let id = |t: f64| Ok(t);
        let r = convolve(&id, Endpoint::Smooth, &id, Endpoint::Smooth, 1.0, &cfg()).unwrap();
        assert!((r.value - 1.0 / 6.0).abs() < 1e-11);

        let et = |t: f64| Ok(t.exp());
        let r = convolve(&et, Endpoint::Smooth, &et, Endpoint::Smooth, 1.0, &cfg()).unwrap();
        assert!((r.value - std::f64::consts::E).abs() < 1e-10);
    }

    #[test]
    fn convolution_theorem_for_decaying_exponentials() {
        // L(f*f)(s) = (1/(s+1))² for f = e^{-τ}.
        let f = |t: f64| Ok((-t).exp());
        let conv = |t: f64| {
            convolve(&f, Endpoint::Smooth, &f, Endpoint::Smooth, t, &cfg()).map(|r| r.value)
        };
        for s in [1.0, 2.0, 5.0] {
            let lhs = laplace_forward(&conv, Endpoint::Smooth, s, &cfg()).unwrap().value;
            let rhs = 1.0 / ((s + 1.0) * (s + 1.0));
            assert!((lhs - rhs).abs() <= 1e-7, "s={s}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn log_kernel_reference_points() {
        let g0 = crate::gamma::EULER_MASCHERONI;
        let one = |_: f64| Ok(1.0);
        let r = log_kernel_convolve(&one, Endpoint::Smooth, 1.0, &cfg()).unwrap();
        assert!((r.value - (g0 - 1.0)).abs() < 1e-10, "{}", r.value);

        let id = |t: f64| Ok(t);
        let r = log_kernel_convolve(&id, Endpoint::Smooth, 1.0, &cfg()).unwrap();
        let expect = 0.5 * g0 - 0.75;
        assert!((r.value - expect).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn integrate_to_power() {
        let f = |t: f64| Ok(t.powf(-0.5));
        let r = integrate_to(&f, Endpoint::Algebraic(-0.5), 4.0, &cfg()).unwrap();
        assert!((r.value - 4.0).abs() < 1e-10);
    }
}
