//! Series families and their time-domain transform subjects.
//!
//! Seven families share one coefficient-driven evaluator:
//!
//! | tag              | term for z^k                          |
//! |------------------|----------------------------------------|
//! | `Ml2`            | 1 / Γ(αk + β)                          |
//! | `Prabhakar`      | (γ)_k / (k! Γ(αk + β))                 |
//! | `Ml4`            | 1 / (Γ(α₁k + β₁) Γ(α₂k + β₂))          |
//! | `Wright`         | 1 / (k! Γ(αk + β))                     |
//! | `LeRoy`          | 1 / [Γ(αk + β)]^γ                      |
//! | `LeRoyClassical` | 1 / (k!)^γ                             |
//! | `BesselI0`       | 1 / (k!)² — so eval(z) = I₀(2√z)       |
//!
//! [`time_profile`] evaluates the subjects the Laplace identities act on.
//! In the default [`ProfileMode::Beta`] the subject is t^{β-1} f(λ t^α)
//! (t^{β₁-1} f(λ t^{α₁}) for the four-parameter family). In
//! [`ProfileMode::Gamma`] it is t^{γ-1} f(λ t); in that mode the Prabhakar
//! weight flips to Γ(γ)/Γ(γ+k), the form whose transform collapses to
//! Γ(γ) s^{-γ} E_{α,β}(1/s). At γ = 1 the two Prabhakar conventions meet:
//! the Gamma-mode subject becomes the Wright function, matching the
//! transform pair L(W_{α,β}(λt)) = s^{-1} E_{α,β}(λ/s).

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gamma::{log_gamma, recip_gamma};
use crate::sum::sum_log_terms;

/// Tolerance bounds accepted by the series evaluators.
pub const TOL_MIN: f64 = 1e-14;
pub const TOL_MAX: f64 = 1e-2;

const MAX_TERMS: usize = 20_000;

/// Tag selecting one of the series families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionFamily {
    Ml2,
    Prabhakar,
    Ml4,
    Wright,
    LeRoy,
    LeRoyClassical,
    BesselI0,
}

impl FunctionFamily {
    pub fn name(&self) -> &'static str {
        match self {
            FunctionFamily::Ml2 => "ml2",
            FunctionFamily::Prabhakar => "prabhakar",
            FunctionFamily::Ml4 => "ml4",
            FunctionFamily::Wright => "wright",
            FunctionFamily::LeRoy => "leroy",
            FunctionFamily::LeRoyClassical => "leroy-classical",
            FunctionFamily::BesselI0 => "bessel-i0",
        }
    }
}

impl std::fmt::Display for FunctionFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for FunctionFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ml2" => Ok(FunctionFamily::Ml2),
            "prabhakar" => Ok(FunctionFamily::Prabhakar),
            "ml4" => Ok(FunctionFamily::Ml4),
            "wright" => Ok(FunctionFamily::Wright),
            "leroy" | "le-roy" => Ok(FunctionFamily::LeRoy),
            "leroy-classical" | "le-roy-classical" => Ok(FunctionFamily::LeRoyClassical),
            "bessel-i0" | "i0" => Ok(FunctionFamily::BesselI0),
            other => Err(Error::domain(format!("unknown function family '{other}'"))),
        }
    }
}

/// Which transform-subject shape [`time_profile`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileMode {
    /// t^{β-1} f(λ t^α)
    #[default]
    Beta,
    /// t^{γ-1} f(λ t), with the reciprocal Pochhammer weight for Prabhakar
    Gamma,
}

impl ProfileMode {
    pub fn name(&self) -> &'static str {
        match self {
            ProfileMode::Beta => "beta",
            ProfileMode::Gamma => "gamma",
        }
    }
}

/// Parameter tuple for all families. Unused slots keep their defaults.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
pub struct ParamSet {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub lambda: f64,
    /// α₂ of the four-parameter family (`alpha` doubles as α₁).
    pub alpha2: f64,
    /// β₂ of the four-parameter family (`beta` doubles as β₁).
    pub beta2: f64,
    #[serde(default)]
    pub mode: ProfileMode,
}

impl Default for ParamSet {
    fn default() -> Self {
        ParamSet {
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
            lambda: 0.0,
            alpha2: 1.0,
            beta2: 1.0,
            mode: ProfileMode::Beta,
        }
    }
}

impl ParamSet {
    pub fn ml2(alpha: f64, beta: f64, lambda: f64) -> Self {
        ParamSet { alpha, beta, lambda, ..Default::default() }
    }

    pub fn prabhakar(alpha: f64, beta: f64, gamma: f64, lambda: f64) -> Self {
        ParamSet { alpha, beta, gamma, lambda, ..Default::default() }
    }

    pub fn wright(alpha: f64, beta: f64, lambda: f64) -> Self {
        ParamSet { alpha, beta, lambda, ..Default::default() }
    }

    pub fn ml4(alpha1: f64, beta1: f64, alpha2: f64, beta2: f64, lambda: f64) -> Self {
        ParamSet { alpha: alpha1, beta: beta1, alpha2, beta2, lambda, ..Default::default() }
    }

    pub fn le_roy(alpha: f64, beta: f64, gamma: f64, lambda: f64) -> Self {
        ParamSet { alpha, beta, gamma, lambda, ..Default::default() }
    }

    pub fn with_mode(mut self, mode: ProfileMode) -> Self {
        self.mode = mode;
        self
    }

    /// Positivity constraints, per family.
    pub fn validate(&self, family: FunctionFamily) -> Result<()> {
        let check = |v: f64, name: &str| -> Result<()> {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::domain(format!("{name} must be positive (got {v})")))
            }
        };
        if !self.lambda.is_finite() {
            return Err(Error::domain("lambda must be finite"));
        }
        match family {
            FunctionFamily::Ml2 | FunctionFamily::Wright => {
                check(self.alpha, "alpha")?;
                check(self.beta, "beta")?;
            }
            FunctionFamily::Prabhakar | FunctionFamily::LeRoy => {
                check(self.alpha, "alpha")?;
                check(self.beta, "beta")?;
                check(self.gamma, "gamma")?;
            }
            FunctionFamily::Ml4 => {
                check(self.alpha, "alpha")?;
                check(self.beta, "beta")?;
                check(self.alpha2, "alpha2")?;
                check(self.beta2, "beta2")?;
            }
            FunctionFamily::LeRoyClassical => check(self.gamma, "gamma")?,
            FunctionFamily::BesselI0 => {}
        }
        if self.mode == ProfileMode::Gamma {
            match family {
                FunctionFamily::Ml2 | FunctionFamily::Wright | FunctionFamily::Prabhakar => {
                    check(self.gamma, "gamma")?;
                }
                _ => {
                    return Err(Error::domain(format!(
                        "gamma profile mode is not defined for {family}"
                    )))
                }
            }
        }
        Ok(())
    }
}

/// Numeric value with truncation bookkeeping.
#[derive(Debug, Clone, Copy)]
pub struct SeriesValue {
    pub value: f64,
    pub terms_used: usize,
    /// Upper estimate of the truncation error (plus the rounding floor).
    pub tail_bound: f64,
}

fn check_tol(tol: f64) -> Result<()> {
    if (TOL_MIN..=TOL_MAX).contains(&tol) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "tolerance {tol} outside [{TOL_MIN}, {TOL_MAX}]"
        )))
    }
}

/// ln of the (positive) coefficient of z^k for the family under `p`.
pub(crate) fn ln_coef(family: FunctionFamily, p: &ParamSet, k: usize) -> Result<f64> {
    let kf = k as f64;
    Ok(match family {
        FunctionFamily::Ml2 => -log_gamma(p.alpha * kf + p.beta)?,
        FunctionFamily::Prabhakar => match p.mode {
            ProfileMode::Beta => {
                log_gamma(p.gamma + kf)? - log_gamma(p.gamma)?
                    - log_gamma(kf + 1.0)?
                    - log_gamma(p.alpha * kf + p.beta)?
            }
            ProfileMode::Gamma => {
                log_gamma(p.gamma)? - log_gamma(p.gamma + kf)?
                    - log_gamma(p.alpha * kf + p.beta)?
            }
        },
        FunctionFamily::Ml4 => {
            -log_gamma(p.alpha * kf + p.beta)? - log_gamma(p.alpha2 * kf + p.beta2)?
        }
        FunctionFamily::Wright => {
            -log_gamma(kf + 1.0)? - log_gamma(p.alpha * kf + p.beta)?
        }
        FunctionFamily::LeRoy => -p.gamma * log_gamma(p.alpha * kf + p.beta)?,
        FunctionFamily::LeRoyClassical => -p.gamma * log_gamma(kf + 1.0)?,
        FunctionFamily::BesselI0 => -2.0 * log_gamma(kf + 1.0)?,
    })
}

/// Evaluates the family series at `z` with tail bound at most
/// `tol * max(1, |value|)`.
///
/// ```
/// use paramlap_core::series::{eval, FunctionFamily, ParamSet};
/// let p = ParamSet::ml2(1.0, 1.0, 0.0);
/// let v = eval(FunctionFamily::Ml2, &p, 1.0, 1e-12).unwrap();
/// assert!((v.value - std::f64::consts::E).abs() < 1e-12);
/// ```
pub fn eval(family: FunctionFamily, p: &ParamSet, z: f64, tol: f64) -> Result<SeriesValue> {
    p.validate(family)?;
    check_tol(tol)?;
    if !z.is_finite() {
        return Err(Error::domain("series argument must be finite"));
    }
    if z == 0.0 {
        return Ok(SeriesValue {
            value: ln_coef(family, p, 0)?.exp(),
            terms_used: 1,
            tail_bound: 0.0,
        });
    }
    let ln_z = z.abs().ln();
    let neg = z < 0.0;
    let r = sum_log_terms(
        |k| match ln_coef(family, p, k) {
            Ok(c) => {
                let sign = if neg && k % 2 == 1 { -1.0 } else { 1.0 };
                (k as f64 * ln_z + c, sign)
            }
            Err(_) => (f64::NEG_INFINITY, 0.0),
        },
        tol,
        MAX_TERMS,
    )?;
    Ok(SeriesValue {
        value: r.value,
        terms_used: r.terms,
        tail_bound: r.tail_bound,
    })
}

/// Smallest N such that the geometric tail bound on Σ_{k>N} |term_k| drops
/// below `tol`. Monotone non-decreasing in |z|.
pub fn tail_terms_needed(
    family: FunctionFamily,
    p: &ParamSet,
    z: f64,
    tol: f64,
) -> Result<usize> {
    p.validate(family)?;
    check_tol(tol)?;
    if z == 0.0 {
        return Ok(0);
    }
    let ln_z = z.abs().ln();
    let mut prev = f64::NEG_INFINITY;
    for k in 0..MAX_TERMS {
        let ln_mag = k as f64 * ln_z + ln_coef(family, p, k)?;
        if k >= 1 {
            let ratio = (ln_mag - prev).exp();
            // Tail after k-1 is |t_k| / (1 - r) once the ratio is < 0.7 and
            // still falling (coefficient ratios decay monotonically); a 2x
            // margin covers the slack in the geometric envelope.
            if ratio <= 0.7 && 2.0 * ln_mag.exp() / (1.0 - ratio) <= tol {
                return Ok(k - 1);
            }
        }
        prev = ln_mag;
    }
    Err(Error::Accuracy {
        value: f64::NAN,
        error_est: f64::INFINITY,
    })
}

/// The time-domain transform subject at `t` (see the module docs for the
/// two shapes). For β < 1 the t→0 singularity is the caller's concern; the
/// quadrature module handles it through declared endpoint exponents.
pub fn time_profile(family: FunctionFamily, p: &ParamSet, t: f64, tol: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("time_profile: requires t > 0 (t = {t})")));
    }
    match p.mode {
        ProfileMode::Beta => {
            let arg = p.lambda * t.powf(p.alpha);
            let v = eval(family, p, arg, tol)?;
            Ok(t.powf(p.beta - 1.0) * v.value)
        }
        ProfileMode::Gamma => {
            let v = eval(family, p, p.lambda * t, tol)?;
            Ok(t.powf(p.gamma - 1.0) * v.value)
        }
    }
}

/// Series form of the k=0 value, 1/Γ(β) and relatives; used by tests.
pub fn value_at_zero(family: FunctionFamily, p: &ParamSet) -> Result<f64> {
    p.validate(family)?;
    Ok(match family {
        FunctionFamily::Ml2 | FunctionFamily::Prabhakar | FunctionFamily::Wright => {
            recip_gamma(p.beta)
        }
        FunctionFamily::Ml4 => recip_gamma(p.beta) * recip_gamma(p.beta2),
        FunctionFamily::LeRoy => recip_gamma(p.beta).powf(p.gamma),
        FunctionFamily::LeRoyClassical | FunctionFamily::BesselI0 => 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1.0)
    }

    #[test]
    fn eval_reference_points() {
        let e = eval(FunctionFamily::Ml2, &ParamSet::ml2(1.0, 1.0, 0.0), 1.0, 1e-13).unwrap();
        assert!((e.value - std::f64::consts::E).abs() < 1e-13);

        // E_{2,1}(z²) = cosh z
        let c = eval(FunctionFamily::Ml2, &ParamSet::ml2(2.0, 1.0, 0.0), 4.0, 1e-13).unwrap();
        assert!((c.value - 2.0f64.cosh()).abs() < 1e-13);

        let z0 = eval(FunctionFamily::Ml2, &ParamSet::ml2(0.5, 2.0, 0.0), 0.0, 1e-12).unwrap();
        assert_eq!(z0.value, 1.0);
        assert_eq!(z0.tail_bound, 0.0);

        // W_{1,1}(1) = Σ 1/(k!)² = I₀(2)
        let w = eval(FunctionFamily::Wright, &ParamSet::wright(1.0, 1.0, 0.0), 1.0, 1e-13).unwrap();
        assert!((w.value - 2.279_585_302_336_067_3).abs() < 1e-13);
        let i0 = eval(FunctionFamily::BesselI0, &ParamSet::default(), 1.0, 1e-13).unwrap();
        assert!((w.value - i0.value).abs() < 1e-14);
    }

    #[test]
    fn eval_rejects_bad_input() {
        assert!(matches!(
            eval(FunctionFamily::Ml2, &ParamSet::ml2(-1.0, 1.0, 0.0), 1.0, 1e-10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            eval(FunctionFamily::Ml2, &ParamSet::ml2(1.0, 1.0, 0.0), 1.0, 1e-1),
            Err(Error::Domain(_))
        ));
        // |z| far past the representable partial-sum range
        assert!(matches!(
            eval(FunctionFamily::Ml2, &ParamSet::ml2(0.5, 1.0, 0.0), -60.0, 1e-10),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn prabhakar_gamma_one_reduces_to_ml2() {
        let mut rng = StdRng::seed_from_u64(0x5e11);
        for _ in 0..60 {
            let alpha = rng.gen_range(0.3..2.0);
            let beta = rng.gen_range(0.3..2.5);
            let z = rng.gen_range(-2.0..3.0);
            let ml = eval(FunctionFamily::Ml2, &ParamSet::ml2(alpha, beta, 0.0), z, 1e-12).unwrap();
            let pr = eval(
                FunctionFamily::Prabhakar,
                &ParamSet::prabhakar(alpha, beta, 1.0, 0.0),
                z,
                1e-12,
            )
            .unwrap();
            assert!(rel(pr.value, ml.value) < 1e-10, "alpha={alpha} beta={beta} z={z}");
        }
    }

    #[test]
    fn le_roy_reductions() {
        let mut rng = StdRng::seed_from_u64(0x5e12);
        for _ in 0..60 {
            let alpha = rng.gen_range(0.3..2.0);
            let beta = rng.gen_range(0.3..2.5);
            let gamma = rng.gen_range(0.4..3.0);
            let z = rng.gen_range(-2.0..3.0);
            // F^{(1)}_{α,β} = E_{α,β}
            let lr = eval(FunctionFamily::LeRoy, &ParamSet::le_roy(alpha, beta, 1.0, 0.0), z, 1e-12)
                .unwrap();
            let ml = eval(FunctionFamily::Ml2, &ParamSet::ml2(alpha, beta, 0.0), z, 1e-12).unwrap();
            assert!(rel(lr.value, ml.value) < 1e-10);
            // F^{(γ)}_{1,1} = R_γ
            let lr11 =
                eval(FunctionFamily::LeRoy, &ParamSet::le_roy(1.0, 1.0, gamma, 0.0), z, 1e-12)
                    .unwrap();
            let klass = eval(
                FunctionFamily::LeRoyClassical,
                &ParamSet { gamma, ..Default::default() },
                z,
                1e-12,
            )
            .unwrap();
            assert!(rel(lr11.value, klass.value) < 1e-10);
        }
    }

    #[test]
    fn ml4_vanishing_second_pair_approaches_ml2() {
        let p = ParamSet::ml4(0.8, 1.2, 1e-6, 1.0, 0.0);
        for z in [0.25, 1.0, 2.0] {
            let four = eval(FunctionFamily::Ml4, &p, z, 1e-12).unwrap();
            let two = eval(FunctionFamily::Ml2, &ParamSet::ml2(0.8, 1.2, 0.0), z, 1e-12).unwrap();
            assert!((four.value - two.value).abs() < 1e-4 * two.value.abs().max(1.0));
        }
    }

    #[test]
    fn value_at_zero_matches_eval() {
        let cases: Vec<(FunctionFamily, ParamSet)> = vec![
            (FunctionFamily::Ml2, ParamSet::ml2(0.7, 1.4, 2.0)),
            (FunctionFamily::Prabhakar, ParamSet::prabhakar(0.7, 1.4, 2.2, 2.0)),
            (FunctionFamily::Wright, ParamSet::wright(0.7, 0.6, 2.0)),
            (FunctionFamily::Ml4, ParamSet::ml4(0.7, 1.4, 1.1, 0.8, 2.0)),
            (FunctionFamily::LeRoy, ParamSet::le_roy(0.7, 1.4, 1.6, 2.0)),
        ];
        for (fam, p) in cases {
            let direct = eval(fam, &p, 0.0, 1e-12).unwrap().value;
            let expect = value_at_zero(fam, &p).unwrap();
            assert!((direct - expect).abs() <= 1e-13 * expect.abs().max(1.0), "{fam}");
        }
    }

    #[test]
    fn tail_bound_is_honest() {
        let mut rng = StdRng::seed_from_u64(0x5e13);
        for _ in 0..40 {
            let alpha = rng.gen_range(0.4..2.0);
            let beta = rng.gen_range(0.4..2.0);
            let z = rng.gen_range(-3.0..4.0);
            let coarse = eval(FunctionFamily::Ml2, &ParamSet::ml2(alpha, beta, 0.0), z, 1e-6).unwrap();
            let fine = eval(FunctionFamily::Ml2, &ParamSet::ml2(alpha, beta, 0.0), z, 1e-9).unwrap();
            assert!(
                (coarse.value - fine.value).abs() <= coarse.tail_bound.max(1e-15),
                "tail bound too small at alpha={alpha} beta={beta} z={z}"
            );
            assert!(coarse.tail_bound <= 1e-6 * coarse.value.abs().max(1.0));
        }
    }

    #[test]
    fn tail_terms_examples() {
        let p = ParamSet::ml2(1.0, 1.0, 0.0);
        assert_eq!(tail_terms_needed(FunctionFamily::Ml2, &p, 0.0, 1e-12).unwrap(), 0);
        let n = tail_terms_needed(FunctionFamily::Ml2, &p, 1.0, 1e-12).unwrap();
        assert!((15..=25).contains(&n), "N = {n}");
        // Faster gamma decay needs no more terms than the plain series.
        let lr = ParamSet::le_roy(1.0, 1.0, 2.0, 0.0);
        let n_lr = tail_terms_needed(FunctionFamily::LeRoy, &lr, 1.0, 1e-12).unwrap();
        assert!(n_lr <= n);
    }

    #[test]
    fn tail_terms_monotone_in_z() {
        let p = ParamSet::wright(0.6, 1.1, 0.0);
        let mut prev = 0;
        for i in 1..30 {
            let z = 0.4 * i as f64;
            let n = tail_terms_needed(FunctionFamily::Wright, &p, z, 1e-10).unwrap();
            assert!(n >= prev, "not monotone at z = {z}");
            prev = n;
        }
    }

    #[test]
    fn time_profile_reference_points() {
        let p = ParamSet::ml2(1.0, 1.0, 1.0);
        let v = time_profile(FunctionFamily::Ml2, &p, 1.0, 1e-12).unwrap();
        assert!((v - std::f64::consts::E).abs() < 1e-12);

        let p = ParamSet::ml2(1.0, 2.0, 0.0);
        let v = time_profile(FunctionFamily::Ml2, &p, 3.0, 1e-12).unwrap();
        assert!((v - 3.0).abs() < 1e-12);

        let p = ParamSet::wright(0.5, 1.0, 1.0);
        let direct = eval(FunctionFamily::Wright, &p, 1.0, 1e-12).unwrap().value;
        let prof = time_profile(FunctionFamily::Wright, &p, 1.0, 1e-12).unwrap();
        assert!((prof - direct).abs() < 1e-13);

        assert!(matches!(
            time_profile(FunctionFamily::Ml2, &p, 0.0, 1e-12),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gamma_mode_prabhakar_at_one_is_wright() {
        // t^{γ-1} with γ=1 and the reciprocal weight turn the Prabhakar
        // subject into the Wright function.
        let p = ParamSet::prabhakar(0.7, 1.2, 1.0, 1.0).with_mode(ProfileMode::Gamma);
        let w = ParamSet::wright(0.7, 1.2, 1.0);
        for t in [0.3, 1.0, 2.5] {
            let a = time_profile(FunctionFamily::Prabhakar, &p, t, 1e-12).unwrap();
            let b = eval(FunctionFamily::Wright, &w, t, 1e-12).unwrap().value;
            assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn series_monotone_in_nonnegative_z(
            alpha in 0.3f64..2.0,
            beta in 0.3f64..2.5,
            z1 in 0.0f64..4.0,
            dz in 0.0f64..2.0,
        ) {
            let p = ParamSet::ml2(alpha, beta, 0.0);
            let lo = eval(FunctionFamily::Ml2, &p, z1, 1e-11).unwrap().value;
            let hi = eval(FunctionFamily::Ml2, &p, z1 + dz, 1e-11).unwrap().value;
            prop_assert!(hi >= lo - 1e-11 * hi.abs().max(1.0));
        }

        #[test]
        fn wright_equals_prabhakar_gamma_mode_gamma_one(
            alpha in 0.3f64..1.8,
            beta in 0.4f64..2.0,
            z in -2.0f64..3.0,
        ) {
            let w = eval(FunctionFamily::Wright, &ParamSet::wright(alpha, beta, 0.0), z, 1e-11).unwrap();
            let p = ParamSet::prabhakar(alpha, beta, 1.0, 0.0).with_mode(ProfileMode::Gamma);
            let pr = eval(FunctionFamily::Prabhakar, &p, z, 1e-11).unwrap();
            prop_assert!((w.value - pr.value).abs() <= 1e-10 * w.value.abs().max(1.0));
        }
    }
}
