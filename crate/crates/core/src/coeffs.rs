//! Taylor coefficients of the co-analytic part g (via g' = ω·h') and the
//! coefficient / distortion bound checks.

use num_complex::Complex64;

use crate::error::Result;
use crate::map::HarmonicMap;
use crate::series::series_from;

/// Coefficients b_1..b_{n_max} of g, where g' = ω·h' and g(0) = 0.
pub fn g_coefficients(f: &HarmonicMap, n_max: usize) -> Result<Vec<Complex64>> {
    let order = n_max.saturating_sub(1);
    let hp = series_from(f.hp(), order)?;
    let omega = series_from(f.omega(), order)?;
    let gp = omega.mul(&hp);
    Ok((1..=n_max)
        .map(|n| gp.coeff(n - 1) / n as f64)
        .collect())
}

#[derive(Debug, Clone)]
pub struct CoefficientReport {
    pub max_modulus: f64,
    pub worst_n: usize,
    pub pass: bool,
}

/// Checks |b_n| ≤ 1 for n ≤ n_max (slack 1e−10).
pub fn coefficient_bound_check(f: &HarmonicMap, n_max: usize) -> Result<CoefficientReport> {
    let coeffs = g_coefficients(f, n_max)?;
    let mut max_modulus: f64 = 0.0;
    let mut worst_n = 1;
    for (i, b) in coeffs.iter().enumerate() {
        let m = b.norm();
        if m > max_modulus {
            max_modulus = m;
            worst_n = i + 1;
        }
    }
    Ok(CoefficientReport {
        max_modulus,
        worst_n,
        pass: max_modulus <= 1.0 + 1e-10,
    })
}

#[derive(Debug, Clone)]
pub struct DistortionReport {
    /// Largest amount by which any band was exceeded (0 when all hold).
    pub max_violation: f64,
    pub pass: bool,
}

const DISTORTION_SLACK: f64 = 1e-9;
const N_ANGLES: usize = 256;

/// Distortion bands at the given radii for a family with automorphism
/// dilatation of modulus parameter γ:
/// 1/(1+r)² ≤ |h'| ≤ 1/(1−r)², |r−γ|/(1−γr) ≤ |ω| ≤ (r+γ)/(1+γr),
/// and |g'| ≤ 1/(1−r)².
pub fn distortion_check(f: &HarmonicMap, radii: &[f64], gamma: f64) -> Result<DistortionReport> {
    let mut max_violation: f64 = 0.0;
    for &r in radii {
        let hp_lo = 1.0 / ((1.0 + r) * (1.0 + r));
        let hp_hi = 1.0 / ((1.0 - r) * (1.0 - r));
        let w_lo = (r - gamma).abs() / (1.0 - gamma * r);
        let w_hi = (r + gamma) / (1.0 + gamma * r);
        for j in 0..N_ANGLES {
            let theta = std::f64::consts::TAU * j as f64 / N_ANGLES as f64;
            let z = Complex64::from_polar(r, theta);
            let hp = f.hp().eval(z)?.norm();
            let w = f.dilatation(z)?.norm();
            let gp = hp * w;
            max_violation = max_violation
                .max(hp_lo - hp)
                .max(hp - hp_hi)
                .max(w_lo - w)
                .max(w - w_hi)
                .max(gp - hp_hi);
        }
    }
    Ok(DistortionReport {
        max_violation,
        pass: max_violation <= DISTORTION_SLACK,
    })
}
