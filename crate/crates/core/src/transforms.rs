//! Koebe and affine transforms of harmonic maps, plus the chain-rule
//! residual check. Transforms are built algebraically on the (h', ω)
//! representation so the downstream operators stay exact.

use num_complex::Complex64;

use crate::analytic::{mobius, AnalyticFn, MobiusParams};
use crate::error::{Error, Result};
use crate::map::HarmonicMap;

#[derive(Debug, Clone, Copy)]
pub struct AffineParams {
    epsilon: Complex64,
}

impl AffineParams {
    pub fn new(epsilon: Complex64) -> Result<Self> {
        if epsilon.norm() >= 1.0 {
            return Err(Error::Construction(format!(
                "affine parameter |eps| = {} must be < 1",
                epsilon.norm()
            )));
        }
        Ok(AffineParams { epsilon })
    }

    pub fn epsilon(&self) -> Complex64 {
        self.epsilon
    }
}

/// Koebe transform L_φ(f) = (f∘φ − f(φ(0)))/(f_z(φ(0))φ'(0)), returned in
/// normalized (H', ω_F) form with H(0) = 0, H'(0) = 1, G(0) = 0.
pub fn koebe_transform(f: &HarmonicMap, phi: MobiusParams) -> Result<HarmonicMap> {
    let phi0 = phi.eval(Complex64::new(0.0, 0.0));
    // Sense-preservation at the new origin.
    f.dilatation(phi0)?;
    let c = f.hp().eval(phi0)? * phi.deriv(Complex64::new(0.0, 0.0));

    let phi_fn = mobius(phi);
    let phi_deriv = AnalyticFn::linear_power(
        phi.phase() * (1.0 - phi.a().norm_sqr()),
        phi.a().conj(),
        -2.0,
    );

    // H'(z) = h'(φ(z)) φ'(z) / c
    let new_hp = f
        .hp()
        .compose(&phi_fn)
        .mul(&phi_deriv)
        .scale(1.0 / c);
    // ω_F(z) = (c/c̄) (ω∘φ)(z); the unimodular phase comes straight from c.
    let new_omega = f.omega().compose(&phi_fn).scale(c / c.conj());
    Ok(HarmonicMap::new(new_hp, new_omega))
}

/// Affine transform A_ε(f) = (f − conj(εf))/(1 − ε̄ g'(0)) on the (h', ω)
/// representation: H' = h'(1 − ε̄ω)/c and ω_A = (c/c̄)(ω − ε)/(1 − ε̄ω)
/// with c = 1 − ε̄ g'(0).
pub fn affine_transform(f: &HarmonicMap, params: AffineParams) -> Result<HarmonicMap> {
    let eps = params.epsilon();
    let origin = Complex64::new(0.0, 0.0);
    let gp0 = f.omega().eval(origin)? * f.hp().eval(origin)?;
    let c = 1.0 - eps.conj() * gp0;
    if c.norm() < 1e-12 {
        return Err(Error::Degenerate(c.norm()));
    }

    let one_minus_eps_omega = AnalyticFn::one().sub(&f.omega().scale(eps.conj()));
    let new_hp = f.hp().mul(&one_minus_eps_omega).scale(1.0 / c);
    let new_omega = f
        .omega()
        .sub(&AnalyticFn::constant(eps))
        .div(&one_minus_eps_omega)
        .scale(c / c.conj());
    Ok(HarmonicMap::new(new_hp, new_omega))
}

/// Max residuals of the pre-Schwarzian and Schwarzian chain rules
/// P_{f∘φ} = (P_f∘φ)·φ' + P_φ and S_{f∘φ} = (S_f∘φ)·φ'² + S_φ over the
/// given sample points.
pub fn chain_rule_residuals(
    f: &HarmonicMap,
    phi: MobiusParams,
    samples: &[Complex64],
) -> Result<(f64, f64)> {
    let phi_fn = mobius(phi);
    let phi_deriv = AnalyticFn::linear_power(
        phi.phase() * (1.0 - phi.a().norm_sqr()),
        phi.a().conj(),
        -2.0,
    );
    let composed = HarmonicMap::new(
        f.hp().compose(&phi_fn).mul(&phi_deriv),
        f.omega().compose(&phi_fn),
    );

    let mut worst_p: f64 = 0.0;
    let mut worst_s: f64 = 0.0;
    for &z in samples {
        let pj = phi_fn.jet(z)?;
        let p_phi = pj.d2 / pj.d1;
        let s_phi = pj.d3 / pj.d1 - 1.5 * p_phi * p_phi;
        let w = pj.v;

        let lhs_p = composed.pre_schwarzian_hm(z)?;
        let rhs_p = f.pre_schwarzian_hm(w)? * pj.d1 + p_phi;
        worst_p = worst_p.max((lhs_p - rhs_p).norm());

        let lhs_s = composed.schwarzian_hm(z)?;
        let rhs_s = f.schwarzian_hm(w)? * pj.d1 * pj.d1 + s_phi;
        worst_s = worst_s.max((lhs_s - rhs_s).norm());
    }
    Ok((worst_p, worst_s))
}
