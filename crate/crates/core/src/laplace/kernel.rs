use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};

/// Kernel exponent used when no other value is configured.
pub const DEFAULT_BETA: f64 = 0.8;

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if beta > 0.0 && beta < 1.0 {
        Ok(())
    } else {
        Err(domain(format!("beta must lie in (0, 1), got {beta}")))
    }
}

/// LCHS kernel `f(k) = 1 / (2π e^{-2^β} e^{(1+ik)^β})`.
///
/// `(1+ik)^β` is taken on the principal branch; `1+ik` has positive real
/// part so the branch cut is never approached.
pub fn kernel_f(k: f64, beta: f64) -> Result<Complex64> {
    check_beta(beta)?;
    let power = Complex64::new(1.0, k).powf(beta);
    // 1 / (e^{-2^β} e^{p}) = e^{2^β - p}
    Ok((Complex64::new(2f64.powf(beta), 0.0) - power).exp() / (2.0 * PI))
}
