//! Term-wise differentiated series for the transform subjects, with respect
//! to the order parameters, plus an independent finite-difference oracle.
//!
//! Differentiating t^{β-1} Σ c_k(p) λ^k t^{αk} under the sum is licensed by
//! the uniform convergence of the differentiated series in the parameter;
//! each term picks up a weight:
//!
//! - ∂/∂α: k (ln t − ψ(αk+β)) (γ ψ for the Le Roy power, the matching
//!   ψ(αⱼk+βⱼ) for the four-parameter family),
//! - ∂/∂β: the same without the factor k,
//! - ∂/∂γ: ψ(γ+k) − ψ(γ) for the Prabhakar weight, −ln Γ(αk+β) for the
//!   Le Roy power.
//!
//! In the Gamma profile mode (subject t^{γ-1} f(λt)) the argument does not
//! depend on α, so ∂/∂α drops the ln t and keeps −k ψ(αk+β); ∂/∂γ picks up
//! ln t + ψ(γ) − ψ(γ+k) from the prefactor and the reciprocal weight.

use crate::error::{Error, Result};
use crate::gamma::{digamma, log_gamma};
use crate::series::{time_profile, FunctionFamily, ParamSet, ProfileMode, SeriesValue};
use crate::sum::{sum_log_terms, weighted};

const MAX_TERMS: usize = 20_000;

/// Which parameter a derivative is taken with respect to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamKind {
    Alpha,
    Beta,
    Gamma,
    Alpha1,
    Beta1,
    Alpha2,
    Beta2,
}

impl ParamKind {
    pub fn name(&self) -> &'static str {
        match self {
            ParamKind::Alpha => "alpha",
            ParamKind::Beta => "beta",
            ParamKind::Gamma => "gamma",
            ParamKind::Alpha1 => "alpha1",
            ParamKind::Beta1 => "beta1",
            ParamKind::Alpha2 => "alpha2",
            ParamKind::Beta2 => "beta2",
        }
    }
}

impl std::fmt::Display for ParamKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ParamKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alpha" => Ok(ParamKind::Alpha),
            "beta" => Ok(ParamKind::Beta),
            "gamma" => Ok(ParamKind::Gamma),
            "alpha1" => Ok(ParamKind::Alpha1),
            "beta1" => Ok(ParamKind::Beta1),
            "alpha2" => Ok(ParamKind::Alpha2),
            "beta2" => Ok(ParamKind::Beta2),
            other => Err(Error::domain(format!("unknown parameter '{other}'"))),
        }
    }
}

/// A (family, parameter) pair to differentiate; the profile shape comes from
/// the [`ParamSet`]'s mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivTarget {
    pub family: FunctionFamily,
    pub wrt: ParamKind,
}

impl DerivTarget {
    pub fn new(family: FunctionFamily, wrt: ParamKind) -> Self {
        DerivTarget { family, wrt }
    }

    /// The family must actually possess the parameter (α₁/β₁ are accepted as
    /// aliases of α/β for the four-parameter family).
    pub fn validate(&self, mode: ProfileMode) -> Result<()> {
        use FunctionFamily::*;
        use ParamKind::*;
        let ok = match (self.family, mode) {
            (Ml2 | Wright, ProfileMode::Beta) => matches!(self.wrt, Alpha | Beta),
            (Ml2 | Wright, ProfileMode::Gamma) => matches!(self.wrt, Alpha | Beta),
            (Prabhakar, _) => matches!(self.wrt, Alpha | Beta | Gamma),
            (LeRoy, ProfileMode::Beta) => matches!(self.wrt, Alpha | Beta | Gamma),
            (Ml4, ProfileMode::Beta) => matches!(self.wrt, Alpha1 | Beta1 | Alpha2 | Beta2),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{} is not a differentiable parameter of {} in {} profile mode",
                self.wrt,
                self.family,
                mode.name()
            )))
        }
    }
}

/// Value of the term-wise differentiated transform subject at `t`.
pub fn deriv_series(target: DerivTarget, p: &ParamSet, t: f64, tol: f64) -> Result<SeriesValue> {
    p.validate(target.family)?;
    target.validate(p.mode)?;
    if !(t > 0.0) {
        return Err(Error::domain(format!("deriv_series: requires t > 0 (t = {t})")));
    }
    let ln_t = t.ln();
    let ln_lam = p.lambda.abs().ln();
    let lam_neg = p.lambda < 0.0;

    let r = sum_log_terms(
        |k| {
            if k > 0 && p.lambda == 0.0 {
                return (f64::NEG_INFINITY, 0.0);
            }
            let kf = k as f64;
            let sign = if lam_neg && k % 2 == 1 { -1.0 } else { 1.0 };
            match term_parts(target, p, k, ln_t) {
                Ok((ln_base, weight)) => {
                    let ln_mag = kf * if k == 0 { 0.0 } else { ln_lam } + ln_base;
                    weighted(ln_mag, sign, weight)
                }
                Err(_) => (f64::NEG_INFINITY, 0.0),
            }
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

/// (ln of the positive term base, real weight) for term k.
fn term_parts(target: DerivTarget, p: &ParamSet, k: usize, ln_t: f64) -> Result<(f64, f64)> {
    use FunctionFamily::*;
    use ParamKind::*;
    let kf = k as f64;
    match p.mode {
        ProfileMode::Beta => {
            let a = p.alpha * kf + p.beta;
            let ln_pow = (a - 1.0) * ln_t;
            match target.family {
                Ml2 => {
                    let base = ln_pow - log_gamma(a)?;
                    let psi = digamma(a)?;
                    let w = match target.wrt {
                        Alpha => kf * (ln_t - psi),
                        Beta => ln_t - psi,
                        _ => unreachable!(),
                    };
                    Ok((base, w))
                }
                Wright => {
                    let base = ln_pow - log_gamma(kf + 1.0)? - log_gamma(a)?;
                    let psi = digamma(a)?;
                    let w = match target.wrt {
                        Alpha => kf * (ln_t - psi),
                        Beta => ln_t - psi,
                        _ => unreachable!(),
                    };
                    Ok((base, w))
                }
                Prabhakar => {
                    let base = ln_pow + log_gamma(p.gamma + kf)? - log_gamma(p.gamma)?
                        - log_gamma(kf + 1.0)?
                        - log_gamma(a)?;
                    let w = match target.wrt {
                        Alpha => kf * (ln_t - digamma(a)?),
                        Beta => ln_t - digamma(a)?,
                        Gamma => digamma(p.gamma + kf)? - digamma(p.gamma)?,
                        _ => unreachable!(),
                    };
                    Ok((base, w))
                }
                LeRoy => {
                    let base = ln_pow - p.gamma * log_gamma(a)?;
                    let w = match target.wrt {
                        Alpha => kf * (ln_t - p.gamma * digamma(a)?),
                        Beta => ln_t - p.gamma * digamma(a)?,
                        Gamma => -log_gamma(a)?,
                        _ => unreachable!(),
                    };
                    Ok((base, w))
                }
                Ml4 => {
                    let a1 = p.alpha * kf + p.beta;
                    let a2 = p.alpha2 * kf + p.beta2;
                    let base = (a1 - 1.0) * ln_t - log_gamma(a1)? - log_gamma(a2)?;
                    let w = match target.wrt {
                        Alpha1 => kf * (ln_t - digamma(a1)?),
                        Beta1 => ln_t - digamma(a1)?,
                        Alpha2 => -kf * digamma(a2)?,
                        Beta2 => -digamma(a2)?,
                        _ => unreachable!(),
                    };
                    Ok((base, w))
                }
                LeRoyClassical | BesselI0 => unreachable!("validated"),
            }
        }
        ProfileMode::Gamma => {
            let a = p.alpha * kf + p.beta;
            let ln_pow = (kf + p.gamma - 1.0) * ln_t;
            let ln_coef = match target.family {
                Ml2 => -log_gamma(a)?,
                Wright => -log_gamma(kf + 1.0)? - log_gamma(a)?,
                Prabhakar => {
                    log_gamma(p.gamma)? - log_gamma(p.gamma + kf)? - log_gamma(a)?
                }
                _ => unreachable!("validated"),
            };
            let w = match target.wrt {
                Alpha => -kf * digamma(a)?,
                Beta => -digamma(a)?,
                Gamma => ln_t + digamma(p.gamma)? - digamma(p.gamma + kf)?,
                _ => unreachable!(),
            };
            Ok((ln_pow + ln_coef, w))
        }
    }
}

/// Central-difference derivative of the transform subject with one
/// Richardson extrapolation step (steps h and h/2).
///
/// Default step: `1e-4 * max(1, |parameter|)`.
pub fn deriv_fd_oracle(target: DerivTarget, p: &ParamSet, t: f64, h: f64) -> Result<f64> {
    p.validate(target.family)?;
    target.validate(p.mode)?;
    if !(h > 0.0) {
        return Err(Error::domain("finite-difference step must be positive"));
    }
    let d_h = central(target, p, t, h)?;
    let d_h2 = central(target, p, t, h / 2.0)?;
    Ok((4.0 * d_h2 - d_h) / 3.0)
}

fn central(target: DerivTarget, p: &ParamSet, t: f64, h: f64) -> Result<f64> {
    let up = shifted(target, p, h)?;
    let dn = shifted(target, p, -h)?;
    let tol = 1e-13;
    let f_up = time_profile(target.family, &up, t, tol)?;
    let f_dn = time_profile(target.family, &dn, t, tol)?;
    Ok((f_up - f_dn) / (2.0 * h))
}

fn shifted(target: DerivTarget, p: &ParamSet, dh: f64) -> Result<ParamSet> {
    let mut q = *p;
    let slot = match target.wrt {
        ParamKind::Alpha | ParamKind::Alpha1 => &mut q.alpha,
        ParamKind::Beta | ParamKind::Beta1 => &mut q.beta,
        ParamKind::Gamma => &mut q.gamma,
        ParamKind::Alpha2 => &mut q.alpha2,
        ParamKind::Beta2 => &mut q.beta2,
    };
    *slot += dh;
    q.validate(target.family).map_err(|_| {
        Error::domain(format!(
            "finite-difference step leaves the domain ({} {} {dh})",
            target.wrt,
            if dh > 0.0 { "+" } else { "-" }
        ))
    })?;
    Ok(q)
}

/// Default finite-difference step for a parameter value.
pub fn default_fd_step(param_value: f64) -> f64 {
    1e-4 * param_value.abs().max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::EULER_MASCHERONI;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn target(f: FunctionFamily, w: ParamKind) -> DerivTarget {
        DerivTarget::new(f, w)
    }

    #[test]
    fn alpha_derivative_vanishes_at_lambda_zero() {
        let p = ParamSet::ml2(0.7, 1.2, 0.0);
        let v = deriv_series(target(FunctionFamily::Ml2, ParamKind::Alpha), &p, 2.0, 1e-12)
            .unwrap();
        assert_eq!(v.value, 0.0);
        for fam in [FunctionFamily::Prabhakar, FunctionFamily::LeRoy] {
            let p = ParamSet::prabhakar(0.7, 1.2, 1.4, 0.0);
            let v = deriv_series(target(fam, ParamKind::Alpha), &p, 0.5, 1e-12).unwrap();
            assert_eq!(v.value, 0.0, "{fam}");
        }
        let p4 = ParamSet::ml4(0.7, 1.2, 0.5, 0.9, 0.0);
        let v = deriv_series(target(FunctionFamily::Ml4, ParamKind::Alpha1), &p4, 1.5, 1e-12)
            .unwrap();
        assert_eq!(v.value, 0.0);
    }

    #[test]
    fn beta_derivative_k0_term() {
        // At λ=0 only k=0 survives: t^{β-1} (ln t - ψ(β)) / Γ(β).
        let p = ParamSet::ml2(1.0, 1.0, 0.0);
        let v = deriv_series(target(FunctionFamily::Ml2, ParamKind::Beta), &p, 1.0, 1e-12)
            .unwrap();
        assert!((v.value - EULER_MASCHERONI).abs() < 1e-13);

        let p = ParamSet::ml2(0.8, 1.7, 0.0);
        let t: f64 = 2.3;
        let expect = t.powf(0.7) * (t.ln() - digamma(1.7).unwrap())
            / crate::gamma::gamma(1.7).unwrap();
        let v = deriv_series(target(FunctionFamily::Ml2, ParamKind::Beta), &p, t, 1e-12)
            .unwrap();
        assert!((v.value - expect).abs() < 1e-12 * expect.abs());
    }

    #[test]
    fn fd_oracle_matches_analytic_case() {
        let p = ParamSet::ml2(1.0, 1.0, 0.0);
        let d = deriv_fd_oracle(target(FunctionFamily::Ml2, ParamKind::Beta), &p, 1.0, 1e-4)
            .unwrap();
        assert!((d - EULER_MASCHERONI).abs() < 1e-7);
    }

    #[test]
    fn fd_oracle_step_halving_consistency() {
        let p = ParamSet::ml2(1.0, 1.0, 1.0);
        let tgt = target(FunctionFamily::Ml2, ParamKind::Alpha);
        let d1 = deriv_fd_oracle(tgt, &p, 1.0, 1e-4).unwrap();
        let d2 = deriv_fd_oracle(tgt, &p, 1.0, 5e-5).unwrap();
        assert!((d1 - d2).abs() < 1e-7, "{d1} vs {d2}");
    }

    #[test]
    fn fd_oracle_domain_excursion() {
        let p = ParamSet::ml2(1e-5, 1.0, 0.5);
        assert!(matches!(
            deriv_fd_oracle(target(FunctionFamily::Ml2, ParamKind::Alpha), &p, 1.0, 1e-4),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn wrt_must_be_possessed() {
        let p = ParamSet::ml2(1.0, 1.0, 0.5);
        assert!(matches!(
            deriv_series(target(FunctionFamily::Ml2, ParamKind::Gamma), &p, 1.0, 1e-10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            deriv_series(target(FunctionFamily::Ml4, ParamKind::Alpha), &p, 1.0, 1e-10),
            Err(Error::Domain(_))
        ));
    }

    /// All (family, wrt) pairs in Beta mode, randomized points.
    #[test]
    fn series_matches_fd_oracle_randomized() {
        let mut rng = StdRng::seed_from_u64(0xde41);
        let pairs: Vec<(FunctionFamily, ParamKind)> = vec![
            (FunctionFamily::Ml2, ParamKind::Alpha),
            (FunctionFamily::Ml2, ParamKind::Beta),
            (FunctionFamily::Prabhakar, ParamKind::Alpha),
            (FunctionFamily::Prabhakar, ParamKind::Beta),
            (FunctionFamily::Prabhakar, ParamKind::Gamma),
            (FunctionFamily::Wright, ParamKind::Alpha),
            (FunctionFamily::Wright, ParamKind::Beta),
            (FunctionFamily::Ml4, ParamKind::Alpha1),
            (FunctionFamily::Ml4, ParamKind::Beta1),
            (FunctionFamily::Ml4, ParamKind::Alpha2),
            (FunctionFamily::Ml4, ParamKind::Beta2),
            (FunctionFamily::LeRoy, ParamKind::Alpha),
            (FunctionFamily::LeRoy, ParamKind::Beta),
            (FunctionFamily::LeRoy, ParamKind::Gamma),
        ];
        for (fam, wrt) in pairs {
            for _ in 0..5 {
                let p = ParamSet {
                    alpha: rng.gen_range(0.5..2.0),
                    beta: rng.gen_range(0.8..2.2),
                    gamma: rng.gen_range(0.6..2.2),
                    lambda: rng.gen_range(-0.9..0.9),
                    alpha2: rng.gen_range(0.5..1.8),
                    beta2: rng.gen_range(0.8..2.0),
                    mode: ProfileMode::Beta,
                };
                let t = rng.gen_range(0.25..4.0);
                let tgt = target(fam, wrt);
                let series = deriv_series(tgt, &p, t, 1e-12).unwrap().value;
                let fd = deriv_fd_oracle(tgt, &p, t, 1e-4).unwrap();
                assert!(
                    (series - fd).abs() <= 1e-6 * series.abs().max(1.0),
                    "{fam}/{wrt}: series {series} vs fd {fd} at t={t}, p={p:?}"
                );
            }
        }
    }

    #[test]
    fn gamma_mode_series_matches_fd_oracle() {
        let mut rng = StdRng::seed_from_u64(0xde42);
        let combos: Vec<(FunctionFamily, ParamKind)> = vec![
            (FunctionFamily::Ml2, ParamKind::Alpha),
            (FunctionFamily::Ml2, ParamKind::Beta),
            (FunctionFamily::Wright, ParamKind::Alpha),
            (FunctionFamily::Prabhakar, ParamKind::Alpha),
            (FunctionFamily::Prabhakar, ParamKind::Beta),
            (FunctionFamily::Prabhakar, ParamKind::Gamma),
        ];
        for (fam, wrt) in combos {
            for _ in 0..5 {
                let p = ParamSet {
                    alpha: rng.gen_range(0.6..2.0),
                    beta: rng.gen_range(0.8..2.0),
                    gamma: rng.gen_range(0.7..2.0),
                    lambda: rng.gen_range(-0.9..0.9),
                    mode: ProfileMode::Gamma,
                    ..Default::default()
                };
                let t = rng.gen_range(0.25..3.0);
                let tgt = target(fam, wrt);
                let series = deriv_series(tgt, &p, t, 1e-12).unwrap().value;
                let fd = deriv_fd_oracle(tgt, &p, t, 1e-4).unwrap();
                assert!(
                    (series - fd).abs() <= 1e-6 * series.abs().max(1.0),
                    "{fam}/{wrt} gamma mode: {series} vs {fd} at t={t}"
                );
            }
        }
    }
}
