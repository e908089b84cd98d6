//! Registry of the concrete extremal functions and test families, each with
//! its closed-form reference values. These are the fixtures behind the
//! verification suites and the CLI.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::analytic::{mobius, AnalyticFn, MobiusParams};
use crate::error::{Error, Result};
use crate::map::HarmonicMap;

pub type Params = BTreeMap<String, f64>;

/// Names of all registry families.
pub const FAMILY_NAMES: &[&str] = &[
    "cubic-cdo",
    "thm42-extremal",
    "thm43-extremal",
    "coeff-family",
    "bloch-unbounded",
    "bloch-bounded",
    "cor32-family",
    "cor33-family",
];

/// Families whose analytic part is convex and whose dilatation is a disk
/// automorphism.
pub const F0_NAMES: &[&str] = &[
    "thm42-extremal",
    "thm43-extremal",
    "coeff-family",
    "bloch-unbounded",
    "bloch-bounded",
];

/// Families carrying a square-root dilatation q.
pub const Q_EQUIPPED_NAMES: &[&str] = &["cubic-cdo", "cor32-family", "cor33-family"];

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn get(params: &Params, key: &str) -> Result<f64> {
    params
        .get(key)
        .copied()
        .ok_or_else(|| Error::Param(format!("missing parameter '{key}'")))
}

fn get_or(params: &Params, key: &str, default: f64) -> f64 {
    params.get(key).copied().unwrap_or(default)
}

fn check_range(name: &str, key: &str, value: f64, lo: f64, hi: f64) -> Result<()> {
    if value < lo || value >= hi {
        return Err(Error::Param(format!(
            "{name}: parameter {key} = {value} out of range [{lo}, {hi})"
        )));
    }
    Ok(())
}

/// (1−z)^p as an expression tree.
fn one_minus_z_pow(p: f64) -> AnalyticFn {
    AnalyticFn::linear_power(re(1.0), re(1.0), p)
}

/// The automorphism (z+γ)/(1+γz) for real γ ∈ [0,1).
fn automorphism_plus(gamma: f64) -> Result<AnalyticFn> {
    Ok(mobius(MobiusParams::new(re(-gamma), 0.0)?))
}

/// Default parameter set for a family, usable as CLI defaults.
pub fn default_params(name: &str) -> Result<Params> {
    let mut p = Params::new();
    match name {
        "cubic-cdo" | "bloch-bounded" => {}
        "thm42-extremal" => {
            p.insert("t".into(), 0.5);
        }
        "thm43-extremal" => {
            p.insert("t".into(), 0.5);
        }
        "coeff-family" | "cor32-family" | "cor33-family" => {
            p.insert("gamma".into(), 0.5);
        }
        "bloch-unbounded" => {
            p.insert("theta".into(), 0.0);
            p.insert("alpha".into(), 0.0);
        }
        _ => return Err(Error::Key(name.into())),
    }
    Ok(p)
}

/// Builds a registry family.
pub fn build(name: &str, params: &Params) -> Result<HarmonicMap> {
    match name {
        "cubic-cdo" => {
            // F(z) = z + conj(z³/3): h' = 1, ω = z², q = z
            let omega = AnalyticFn::identity().mul(&AnalyticFn::identity());
            Ok(HarmonicMap::with_q(
                AnalyticFn::one(),
                omega,
                AnalyticFn::identity(),
            ))
        }
        "thm42-extremal" => {
            let t = get(params, "t")?;
            check_range(name, "t", t, 0.5, 1.0)?;
            // h' = (1−z)^{−2}, ω_t = (z−t)/(1−tz)
            let omega = mobius(MobiusParams::new(re(t), 0.0)?);
            Ok(HarmonicMap::new(one_minus_z_pow(-2.0), omega))
        }
        "thm43-extremal" => {
            let t = get(params, "t")?;
            check_range(name, "t", t, 0.0, 1.0)?;
            // 1 + z h''/h' = (1+ε_t)/(1−ε_t) with ε_t = z(z+t/2)/(1+tz/2)
            // integrates to h' = (1−z)^{−(2+t)/2}(1+z)^{−(2−t)/2}.
            let hp = AnalyticFn::linear_power(re(1.0), re(1.0), -(2.0 + t) / 2.0)
                .mul(&AnalyticFn::linear_power(re(1.0), re(-1.0), -(2.0 - t) / 2.0));
            let omega = mobius(MobiusParams::new(re(-t), 0.0)?);
            Ok(HarmonicMap::new(hp, omega))
        }
        "coeff-family" => {
            let gamma = get(params, "gamma")?;
            check_range(name, "gamma", gamma, 0.0, 1.0)?;
            // h = z/(1−z), ω = (z+γ)/(1+γz)
            Ok(HarmonicMap::new(
                one_minus_z_pow(-2.0),
                automorphism_plus(gamma)?,
            ))
        }
        "bloch-unbounded" => {
            let theta = get_or(params, "theta", 0.0);
            let alpha = get_or(params, "alpha", 0.0);
            // h = z/(1−e^{iθ}z), ω = e^{iα}z
            let hp = AnalyticFn::linear_power(re(1.0), Complex64::from_polar(1.0, theta), -2.0);
            let omega =
                AnalyticFn::polynomial(vec![re(0.0), Complex64::from_polar(1.0, alpha)]);
            Ok(HarmonicMap::new(hp, omega))
        }
        "bloch-bounded" => {
            // h' = 1/(1−z), ω = z
            Ok(HarmonicMap::new(
                one_minus_z_pow(-1.0),
                AnalyticFn::identity(),
            ))
        }
        "cor32-family" => {
            let gamma = get(params, "gamma")?;
            check_range(name, "gamma", gamma, 0.0, 1.0)?;
            // h' = (1−z)^{−3} (Re Q_h > −1/2), q an automorphism, ω = q²
            let q = automorphism_plus(gamma)?;
            Ok(HarmonicMap::with_q(
                one_minus_z_pow(-3.0),
                q.mul(&q),
                q,
            ))
        }
        "cor33-family" => {
            let gamma = get(params, "gamma")?;
            check_range(name, "gamma", gamma, 0.0, 1.0)?;
            // h' = 1−z (Re Q_h < 3/2), q an automorphism, ω = q²
            let hp = AnalyticFn::polynomial(vec![re(1.0), re(-1.0)]);
            let q = automorphism_plus(gamma)?;
            Ok(HarmonicMap::with_q(hp, q.mul(&q), q))
        }
        _ => Err(Error::Key(name.into())),
    }
}

/// r₀ = √(√5 − 2), the maximizer of 2r(1−r²)/(1+r²).
pub fn gap_radius() -> f64 {
    (5f64.sqrt() - 2.0).sqrt()
}

/// The gap constant 2r₀(1−r₀²)/(1+r₀²) ≈ 0.600566.
pub fn gap_constant() -> f64 {
    let r0 = gap_radius();
    2.0 * r0 * (1.0 - r0 * r0) / (1.0 + r0 * r0)
}

/// ψ(r) = 2(1+r) − (r−t)/(1−tr), the real-axis profile for the t-extremal
/// pre-Schwarzian family.
pub fn psi(t: f64, r: f64) -> f64 {
    2.0 * (1.0 + r) - (r - t) / (1.0 - t * r)
}

/// Maximizer of ψ on [0,1): r₀(t) = (1/t)(1 − √((1−t²)/2)).
pub fn psi_argmax(t: f64) -> f64 {
    (1.0 - ((1.0 - t * t) / 2.0).sqrt()) / t
}

/// M_t = ψ(r₀(t)) = 2 + 3/t − (4/t)√((1−t²)/2).
pub fn m_t(t: f64) -> f64 {
    2.0 + 3.0 / t - (4.0 / t) * ((1.0 - t * t) / 2.0).sqrt()
}

/// Closed-form coefficient b_n(γ) = 1 − (1/n)((1−γ)/(1+γ))(1−(−γ)ⁿ).
pub fn b_n(gamma: f64, n: usize) -> f64 {
    let n_f = n as f64;
    1.0 - (1.0 / n_f) * ((1.0 - gamma) / (1.0 + gamma)) * (1.0 - (-gamma).powi(n as i32))
}

/// Closed-form reference values declared by each family.
pub fn reference(name: &str, key: &str, params: &Params) -> Result<f64> {
    match (name, key) {
        ("cubic-cdo", "gap") => Ok(gap_constant()),
        ("thm42-extremal", "M") => {
            let t = get(params, "t")?;
            check_range(name, "t", t, 0.5, 1.0)?;
            Ok(m_t(t))
        }
        ("thm42-extremal", "r0") => {
            let t = get(params, "t")?;
            check_range(name, "t", t, 0.5, 1.0)?;
            Ok(psi_argmax(t))
        }
        ("thm42-extremal", "psi") => {
            let t = get(params, "t")?;
            let r = get(params, "r")?;
            Ok(psi(t, r))
        }
        ("thm43-extremal", "S0") => {
            let t = get(params, "t")?;
            check_range(name, "t", t, 0.0, 1.0)?;
            Ok(2.0 + t * t)
        }
        ("coeff-family", "b_n") => {
            let gamma = get(params, "gamma")?;
            let n = get(params, "n")? as usize;
            if n == 0 {
                return Err(Error::Param("b_n needs n >= 1".into()));
            }
            Ok(b_n(gamma, n))
        }
        ("bloch-bounded", "bloch") => Ok(4.0),
        _ => Err(Error::Key(format!("{name}/{key}"))),
    }
}

/// The reference key a family exposes for sweep output, if any, for a given
/// norm functional.
pub fn sweep_reference_key(name: &str, which: crate::norm::Which) -> Option<&'static str> {
    use crate::norm::Which;
    match (name, which) {
        ("thm42-extremal", Which::Pre) => Some("M"),
        ("thm43-extremal", Which::Schwarzian) => Some("S0"),
        ("bloch-bounded", Which::Bloch) => Some("bloch"),
        _ => None,
    }
}
