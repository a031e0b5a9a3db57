//! Shared log-space series summation.
//!
//! Terms arrive as (ln |t_k|, sign); the accumulator keeps the running sum
//! scaled by exp(-m) where m tracks the largest term magnitude seen, so
//! partial sums stay representable even when individual terms approach the
//! overflow threshold.

use crate::error::{Error, Result};

const LN_MAX: f64 = 709.0;

pub(crate) struct SeriesResult {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: usize,
}

/// Sums Σ_k sign_k exp(ln_mag_k) until the tail is certified below
/// `0.3 * tol * max(1, |sum|)`.
///
/// `term(k)` returns `(ln |t_k|, sign)`; a zero term is `(NEG_INFINITY, 0.)`.
/// Stops at the first k where the magnitude ratio has fallen under 0.7 and
/// two consecutive terms clear the smallness test, so the geometric tail
/// bound |t_k| r/(1-r) is valid. Errors: overflow when any term or the sum
/// exceeds the double range, accuracy when `max_terms` is exhausted.
pub(crate) fn sum_log_terms(
    term: impl Fn(usize) -> (f64, f64),
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    let mut scale = f64::NEG_INFINITY; // current scale m
    let mut sum = 0.0f64; // Σ sign exp(ln_mag - m)
    let mut prev_ln = f64::NEG_INFINITY;
    let mut max_ln = f64::NEG_INFINITY;
    let mut streak = 0usize;
    let ln_tol = (0.3 * tol).ln();

    for k in 0..max_terms {
        let (ln_mag, sign) = term(k);
        if ln_mag > LN_MAX {
            return Err(Error::Overflow {
                positive: sign >= 0.0,
            });
        }
        if sign != 0.0 && ln_mag > f64::NEG_INFINITY {
            if ln_mag > scale {
                sum *= (scale - ln_mag).exp();
                scale = ln_mag;
            }
            sum += sign * (ln_mag - scale).exp();
            max_ln = max_ln.max(ln_mag);
        }

        // |t_k| <= 0.3 tol max(1, |S|), evaluated in logs.
        let ln_sum_abs = if sum == 0.0 {
            f64::NEG_INFINITY
        } else {
            scale + sum.abs().ln()
        };
        let small = ln_mag <= ln_tol + ln_sum_abs.max(0.0);
        let ratio = (ln_mag - prev_ln).exp(); // 0 for a zero term
        prev_ln = ln_mag;
        streak = if small { streak + 1 } else { 0 };

        if k >= 1 && streak >= 2 && !(ratio > 0.7) {
            let value = finish(scale, sum)?;
            let tail = if ln_mag.is_finite() {
                (ln_mag.exp()) * (ratio / (1.0 - ratio)).max(1.0) * 2.0
            } else {
                0.0
            };
            // Rounding floor: cancellation leaves noise at eps * max |t_k|.
            let rounding = if max_ln.is_finite() {
                (k as f64).sqrt() * f64::EPSILON * max_ln.exp()
            } else {
                0.0
            };
            return Ok(SeriesResult {
                value,
                tail_bound: tail + rounding,
                terms: k + 1,
            });
        }
    }
    let value = finish(scale, sum).unwrap_or(f64::NAN);
    Err(Error::Accuracy {
        value,
        error_est: prev_ln.exp(),
    })
}

fn finish(scale: f64, sum: f64) -> Result<f64> {
    if sum == 0.0 || scale == f64::NEG_INFINITY {
        return Ok(0.0);
    }
    let ln_total = scale + sum.abs().ln();
    if ln_total > LN_MAX {
        return Err(Error::Overflow {
            positive: sum > 0.0,
        });
    }
    Ok(sum.signum() * ln_total.exp())
}

/// Folds a real weight into a (ln-magnitude, sign) pair.
pub(crate) fn weighted(ln_mag: f64, sign: f64, weight: f64) -> (f64, f64) {
    if weight == 0.0 || sign == 0.0 {
        (f64::NEG_INFINITY, 0.0)
    } else {
        (ln_mag + weight.abs().ln(), sign * weight.signum())
    }
}
