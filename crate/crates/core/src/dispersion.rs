//! Dispersion relation, unperturbed eigenvalues, and the resonance solver.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Constants fixed by the first transverse resonance.
#[derive(Clone, Copy, Debug)]
pub struct ResonanceData {
    /// square of the resonant transverse wavenumber
    pub beta_star: f64,
    /// imaginary part of the double eigenvalue
    pub sigma: f64,
    pub gamma1: f64,
    pub gamma2: f64,
}

impl ResonanceData {
    pub fn omega(&self, k: f64) -> f64 {
        (k * k + self.beta_star).sqrt()
    }
}

/// Omega(k) = (k^2 + beta)^(1/2); even in k.
pub fn omega(k: f64, beta: f64) -> Result<f64> {
    if beta <= 0.0 {
        return Err(Error::Domain(format!("omega needs beta > 0, got {beta}")));
    }
    Ok((k * k + beta).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// lambda^0_(+/-)(k, beta) = i [ k +/- (k^2 + beta)^(1/4) ].
pub fn lambda0(k: i64, beta: f64, branch: Branch) -> Result<Complex64> {
    let root = omega(k as f64, beta)?.sqrt();
    let s = match branch {
        Branch::Plus => 1.0,
        Branch::Minus => -1.0,
    };
    Ok(Complex64::new(0.0, k as f64 + s * root))
}

fn resonance_residual(beta: f64) -> f64 {
    (beta + 4.0).powf(0.25) + (beta + 1.0).powf(0.25) - 3.0
}

/// Solve the resonance condition -2 + (beta+4)^(1/4) = 1 - (beta+1)^(1/4)
/// by bisection on [1e-3, 1e2] followed by a Newton polish.
pub fn solve_resonance() -> ResonanceData {
    let (mut lo, mut hi) = (1e-3_f64, 1e2_f64);
    debug_assert!(resonance_residual(lo) < 0.0 && resonance_residual(hi) > 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if resonance_residual(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut beta = 0.5 * (lo + hi);
    for _ in 0..8 {
        let d = 0.25 * ((beta + 4.0).powf(-0.75) + (beta + 1.0).powf(-0.75));
        beta -= resonance_residual(beta) / d;
    }
    debug_assert!(resonance_residual(beta).abs() < 1e-14);
    let gamma1 = (beta + 1.0).powf(0.25);
    let gamma2 = (beta + 4.0).powf(0.25);
    ResonanceData {
        beta_star: beta,
        sigma: 1.0 - gamma1,
        gamma1,
        gamma2,
    }
}

/// Distance from i*sigma to the rest of the unperturbed spectrum:
/// min over k in [-k_max, k_max] and both branches, excluding the two modes
/// (k, branch) = (1, -) and (-2, +) that form the double eigenvalue.
pub fn spectral_gap(res: &ResonanceData, k_max: i64) -> Result<f64> {
    if k_max < 8 {
        return Err(Error::Domain(format!(
            "spectral_gap needs k_max >= 8, got {k_max}"
        )));
    }
    let target = Complex64::new(0.0, res.sigma);
    let mut best = f64::INFINITY;
    for k in -k_max..=k_max {
        for branch in [Branch::Plus, Branch::Minus] {
            if (k, branch) == (1, Branch::Minus) || (k, branch) == (-2, Branch::Plus) {
                continue;
            }
            let d = (lambda0(k, res.beta_star, branch)? - target).norm();
            best = best.min(d);
        }
    }
    Ok(best)
}
