//! Real-argument gamma-family primitives: Γ, ln Γ, 1/Γ, ψ, and the rising
//! factorial.
//!
//! Every series coefficient in this crate reduces to ratios, powers, and
//! logarithms of Γ(αk + β), and every derivative series carries a ψ(αk + β)
//! weight, so these functions get tight accuracy targets: Γ to ~1e-13
//! relative on (0, 170], ψ to ~1e-12 absolute on the positive axis.
//!
//! Γ uses the Lanczos rational approximation (g = 607/128, 15 terms) with
//! reflection below 1/2; ψ uses upward recurrence into the asymptotic region
//! followed by the Bernoulli-number expansion.

use crate::error::{Error, Result};

/// Euler–Mascheroni constant γ₀ = −ψ(1).
pub const EULER_MASCHERONI: f64 = 0.577_215_664_901_532_9;

/// Absolute tolerance for classifying an argument as a pole of Γ.
pub const POLE_TOL: f64 = 1e-12;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_74;
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;
/// ln(f64::MAX), the overflow threshold for exp.
const LN_MAX: f64 = 709.782_712_893_384;

const LANCZOS_G: f64 = 4.742_187_5; // 607/128, exact in binary
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_091_82,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    3.399_464_998_481_188_869_9e-5,
    4.652_362_892_704_857_566_5e-5,
    -9.837_447_530_487_956_467_7e-5,
    1.580_887_032_249_124_888_4e-4,
    -2.102_644_417_241_048_831_9e-4,
    2.174_396_181_152_126_432_0e-4,
    -1.643_181_065_367_638_902_2e-4,
    8.441_822_398_385_274_329_3e-5,
    -2.619_083_840_158_140_867_0e-5,
    3.689_918_265_953_162_270_4e-6,
];

/// B_{2k} / (2k) for the digamma asymptotic expansion, k = 1..=7.
const DIGAMMA_ASYMP: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// B_{2k} / ((2k)(2k-1)) for the Stirling series of ln Γ, k = 1..=8.
const LGAMMA_ASYMP: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    7.0 / 1092.0,
    -3617.0 / 122_400.0,
];

/// True when `x` lies within [`POLE_TOL`] of a non-positive integer, i.e. a
/// pole of Γ.
pub fn is_pole(x: f64) -> bool {
    if !(x < 0.5) {
        return false;
    }
    let n = x.round();
    n <= 0.0 && (x - n).abs() <= POLE_TOL
}

/// sin(πx) computed through the nearest-integer reduction, exact at integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (std::f64::consts::PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn lanczos_sum(xm1: f64) -> f64 {
    let mut s = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        s += c / (xm1 + i as f64);
    }
    s
}

/// Gamma function Γ(x) for real non-pole `x`.
///
/// Relative error stays below ~1e-13 on (0, 170]; arguments past the
/// representable range (x ≳ 171.62) report overflow with its sign.
///
/// ```
/// use paramlap_core::gamma::gamma;
/// assert!((gamma(5.0).unwrap() - 24.0).abs() < 1e-12);
/// assert!((gamma(0.5).unwrap() - std::f64::consts::PI.sqrt()).abs() < 1e-14);
/// ```
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("gamma: NaN argument"));
    }
    if is_pole(x) {
        return Err(Error::domain(format!(
            "gamma: pole at non-positive integer (x = {x})"
        )));
    }
    if x > 0.5 && x <= 170.5 && x == x.round() {
        // Positive integers: (n-1)! by direct product, exact through 18!.
        let n = x as u64;
        let mut p = 1.0f64;
        for i in 2..n {
            p *= i as f64;
        }
        return Ok(p);
    }
    if x < 0.5 {
        // Reflection: Γ(x) Γ(1-x) = π / sin(πx).
        let s = sin_pi(x);
        let y = 1.0 - x;
        if y > 171.0 {
            // |Γ(x)| underflows; go through logs to avoid overflow of Γ(1-x).
            let ln_mag = std::f64::consts::PI.ln() - s.abs().ln() - log_gamma(y)?;
            return Ok(s.signum() * ln_mag.exp());
        }
        return Ok(std::f64::consts::PI / (s * gamma(y)?));
    }

    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    let series = lanczos_sum(z);
    let ln_estimate = LN_SQRT_2PI + series.ln() + (z + 0.5) * t.ln() - t;
    if ln_estimate > LN_MAX {
        return Err(Error::Overflow { positive: true });
    }
    // Split the power so the intermediate never overflows before the final
    // product does.
    let q = t.powf((z + 0.5) / 2.0) * (-t / 2.0).exp();
    Ok(SQRT_2PI * series * q * q)
}

/// Natural log of Γ(x) for x > 0.
///
/// Uses the Stirling series with Bernoulli corrections for x ≥ 10 and
/// ln ∘ Γ below. Absolute error is at machine level for moderate x; for very
/// large x the result's own ulp dominates.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("log_gamma: requires x > 0 (x = {x})")));
    }
    if x < 10.0 {
        // Γ(x) cannot overflow here.
        return Ok(gamma(x)?.ln());
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in LGAMMA_ASYMP {
        corr += c * p;
        p *= inv2;
    }
    Ok((x - 0.5) * x.ln() - x + LN_SQRT_2PI + corr)
}

/// Reciprocal gamma 1/Γ(x), entire over the real line: exactly 0.0 at the
/// poles of Γ, saturating to ±∞ where 1/Γ itself is not representable.
pub fn recip_gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_pole(x) {
        return 0.0;
    }
    if x >= 0.5 {
        if x > 171.0 {
            // 1/Γ underflows smoothly.
            return match log_gamma(x) {
                Ok(lg) => (-lg).exp(),
                Err(_) => 0.0,
            };
        }
        return match gamma(x) {
            Ok(g) => 1.0 / g,
            Err(_) => 0.0,
        };
    }
    // 1/Γ(x) = sin(πx) Γ(1-x) / π
    let s = sin_pi(x);
    let y = 1.0 - x;
    if y > 171.0 {
        let ln_mag = match log_gamma(y) {
            Ok(lg) => lg + s.abs().ln() - std::f64::consts::PI.ln(),
            Err(_) => return 0.0,
        };
        return s.signum() * ln_mag.exp(); // may saturate to ±inf
    }
    match gamma(y) {
        Ok(g) => s * g / std::f64::consts::PI,
        Err(_) => 0.0,
    }
}

/// Digamma function ψ(x) = (ln Γ)'(x) for x > 0, absolute error ≤ ~1e-13.
///
/// ```
/// use paramlap_core::gamma::{digamma, EULER_MASCHERONI};
/// assert!((digamma(1.0).unwrap() + EULER_MASCHERONI).abs() < 1e-12);
/// ```
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain(format!("digamma: requires x > 0 (x = {x})")));
    }
    let mut shift = 0.0;
    let mut xx = x;
    while xx < 10.0 {
        shift -= 1.0 / xx;
        xx += 1.0;
    }
    let inv2 = 1.0 / (xx * xx);
    let mut corr = 0.0;
    let mut p = inv2;
    for c in DIGAMMA_ASYMP {
        corr -= c * p;
        p *= inv2;
    }
    Ok(shift + xx.ln() - 0.5 / xx + corr)
}

/// Rising factorial (g)_k = g (g+1) ⋯ (g+k-1) = Γ(g+k)/Γ(g) for g > 0.
pub fn pochhammer(g: f64, k: u32) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::domain(format!(
            "pochhammer: requires base > 0 (g = {g})"
        )));
    }
    if k == 0 {
        return Ok(1.0);
    }
    if k <= 30 {
        let mut p = 1.0;
        for i in 0..k {
            p *= g + i as f64;
        }
        if !p.is_finite() {
            return Err(Error::Overflow { positive: true });
        }
        return Ok(p);
    }
    let ln_p = ln_pochhammer(g, k)?;
    if ln_p > LN_MAX {
        return Err(Error::Overflow { positive: true });
    }
    Ok(ln_p.exp())
}

/// ln (g)_k via log-gamma differencing; requires g > 0.
pub fn ln_pochhammer(g: f64, k: u32) -> Result<f64> {
    if k == 0 {
        return Ok(0.0);
    }
    Ok(log_gamma(g + k as f64)? - log_gamma(g)?)
}
