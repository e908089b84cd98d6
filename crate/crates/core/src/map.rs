//! Harmonic mappings f = h + conj(g) on the disk, represented by the pair
//! (h', ω) with g' = ω·h', and the analytic, Hernández–Martín and
//! Chuaqui–Duren–Osgood differential operators.

use num_complex::Complex64;

use crate::analytic::AnalyticFn;
use crate::error::{Error, Result};
use crate::jet::Jet3;

/// |ω(z)| at or above 1 − SENSE_TOL counts as a sense violation.
pub const SENSE_TOL: f64 = 1e-12;

/// Sense-preserving harmonic map. The analytic part is stored through its
/// derivative h'; every operator below consumes only h', h'', h''' ratios.
#[derive(Debug, Clone)]
pub struct HarmonicMap {
    hp: AnalyticFn,
    omega: AnalyticFn,
    q: Option<AnalyticFn>,
}

/// All derivative flavors of a map at one point.
#[derive(Debug, Clone, Copy)]
pub struct DerivativeBundle {
    pub p_analytic: Complex64,
    pub s_analytic: Complex64,
    pub p_hm: Complex64,
    pub s_hm: Complex64,
    pub p_cdo: Option<Complex64>,
    pub s_cdo: Option<Complex64>,
    pub jacobian: f64,
    pub omega_value: Complex64,
}

/// P_h = h''/h' from the jet of h'.
pub fn pre_schwarzian_analytic(hp: &AnalyticFn, z: Complex64) -> Result<Complex64> {
    let j = hp.jet(z)?;
    check_nonvanishing(&j, z)?;
    Ok(j.d1 / j.v)
}

/// S_h = h'''/h' − (3/2)(h''/h')² from the jet of h'.
pub fn schwarzian_analytic(hp: &AnalyticFn, z: Complex64) -> Result<Complex64> {
    let j = hp.jet(z)?;
    check_nonvanishing(&j, z)?;
    let p = j.d1 / j.v;
    Ok(j.d2 / j.v - 1.5 * p * p)
}

/// Q_h = 1 + z h''/h'.
pub fn q_functional(hp: &AnalyticFn, z: Complex64) -> Result<Complex64> {
    Ok(1.0 + z * pre_schwarzian_analytic(hp, z)?)
}

fn check_nonvanishing(j: &Jet3, z: Complex64) -> Result<()> {
    if j.v.norm() < 1e-12 {
        return Err(Error::Singularity {
            z,
            modulus: j.v.norm(),
        });
    }
    Ok(())
}

impl HarmonicMap {
    pub fn new(hp: AnalyticFn, omega: AnalyticFn) -> Self {
        HarmonicMap {
            hp,
            omega,
            q: None,
        }
    }

    pub fn with_q(hp: AnalyticFn, omega: AnalyticFn, q: AnalyticFn) -> Self {
        HarmonicMap {
            hp,
            omega,
            q: Some(q),
        }
    }

    pub fn hp(&self) -> &AnalyticFn {
        &self.hp
    }

    pub fn omega(&self) -> &AnalyticFn {
        &self.omega
    }

    pub fn q(&self) -> Option<&AnalyticFn> {
        self.q.as_ref()
    }

    /// h'(0) = 1 within tolerance (h(0) = 0 is definitional here).
    pub fn is_normalized(&self) -> Result<bool> {
        let v = self.hp.eval(Complex64::new(0.0, 0.0))?;
        Ok((v - 1.0).norm() < 1e-10)
    }

    /// ω(z), failing when sense-preservation is violated within tolerance.
    pub fn dilatation(&self, z: Complex64) -> Result<Complex64> {
        let w = self.omega.eval(z)?;
        if w.norm() >= 1.0 - SENSE_TOL {
            return Err(Error::Sense {
                z,
                modulus: w.norm(),
            });
        }
        Ok(w)
    }

    /// J_f = |h'|²(1 − |ω|²).
    pub fn jacobian(&self, z: Complex64) -> Result<f64> {
        let hp = self.hp.eval(z)?;
        let w = self.dilatation(z)?;
        Ok(hp.norm_sqr() * (1.0 - w.norm_sqr()))
    }

    pub fn pre_schwarzian_analytic(&self, z: Complex64) -> Result<Complex64> {
        pre_schwarzian_analytic(&self.hp, z)
    }

    pub fn schwarzian_analytic(&self, z: Complex64) -> Result<Complex64> {
        schwarzian_analytic(&self.hp, z)
    }

    /// Hernández–Martín pre-Schwarzian P_f = h''/h' − ω̄ω'/(1−|ω|²).
    pub fn pre_schwarzian_hm(&self, z: Complex64) -> Result<Complex64> {
        let p_h = self.pre_schwarzian_analytic(z)?;
        let w = self.omega.jet(z)?;
        self.check_sense(z, w.v)?;
        Ok(p_h - w.v.conj() * w.d1 / (1.0 - w.v.norm_sqr()))
    }

    /// Hernández–Martín Schwarzian
    /// S_f = S_h + (ω̄/(1−|ω|²))((h''/h')ω' − ω'') − (3/2)(ω'ω̄/(1−|ω|²))².
    pub fn schwarzian_hm(&self, z: Complex64) -> Result<Complex64> {
        let hpj = self.hp.jet(z)?;
        check_nonvanishing(&hpj, z)?;
        let p_h = hpj.d1 / hpj.v;
        let s_h = hpj.d2 / hpj.v - 1.5 * p_h * p_h;
        let w = self.omega.jet(z)?;
        self.check_sense(z, w.v)?;
        let denom = 1.0 - w.v.norm_sqr();
        let t = w.d1 * w.v.conj() / denom;
        Ok(s_h + (w.v.conj() / denom) * (p_h * w.d1 - w.d2) - 1.5 * t * t)
    }

    /// Chuaqui–Duren–Osgood pre-Schwarzian 𝓟_f = h''/h' + 2q̄q'/(1+|q|²).
    pub fn pre_schwarzian_cdo(&self, z: Complex64) -> Result<Complex64> {
        let q = self.q.as_ref().ok_or(Error::MissingQ)?;
        let p_h = self.pre_schwarzian_analytic(z)?;
        let qj = q.jet(z)?;
        Ok(p_h + 2.0 * qj.v.conj() * qj.d1 / (1.0 + qj.v.norm_sqr()))
    }

    /// Chuaqui–Duren–Osgood Schwarzian
    /// 𝕊_f = S_h + (2q̄/(1+|q|²))(q'' − (h''/h')q') − 4(q'q̄/(1+|q|²))².
    pub fn schwarzian_cdo(&self, z: Complex64) -> Result<Complex64> {
        let q = self.q.as_ref().ok_or(Error::MissingQ)?;
        let hpj = self.hp.jet(z)?;
        check_nonvanishing(&hpj, z)?;
        let p_h = hpj.d1 / hpj.v;
        let s_h = hpj.d2 / hpj.v - 1.5 * p_h * p_h;
        let qj = q.jet(z)?;
        let denom = 1.0 + qj.v.norm_sqr();
        let t = qj.d1 * qj.v.conj() / denom;
        Ok(s_h + (2.0 * qj.v.conj() / denom) * (qj.d2 - p_h * qj.d1) - 4.0 * t * t)
    }

    /// All operator values at one point.
    pub fn derivative_bundle(&self, z: Complex64) -> Result<DerivativeBundle> {
        let p_analytic = self.pre_schwarzian_analytic(z)?;
        let s_analytic = self.schwarzian_analytic(z)?;
        let p_hm = self.pre_schwarzian_hm(z)?;
        let s_hm = self.schwarzian_hm(z)?;
        let (p_cdo, s_cdo) = match self.q {
            Some(_) => (
                Some(self.pre_schwarzian_cdo(z)?),
                Some(self.schwarzian_cdo(z)?),
            ),
            None => (None, None),
        };
        Ok(DerivativeBundle {
            p_analytic,
            s_analytic,
            p_hm,
            s_hm,
            p_cdo,
            s_cdo,
            jacobian: self.jacobian(z)?,
            omega_value: self.dilatation(z)?,
        })
    }

    /// |q²(z) − ω(z)| at a point; used for the q consistency check.
    pub fn q_residual(&self, z: Complex64) -> Result<f64> {
        let q = self.q.as_ref().ok_or(Error::MissingQ)?;
        let qv = q.eval(z)?;
        let wv = self.omega.eval(z)?;
        Ok((qv * qv - wv).norm())
    }

    fn check_sense(&self, z: Complex64, w: Complex64) -> Result<()> {
        if w.norm() >= 1.0 - SENSE_TOL {
            return Err(Error::Sense {
                z,
                modulus: w.norm(),
            });
        }
        Ok(())
    }
}
