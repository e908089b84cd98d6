//! Evaluable analytic functions on the unit disk, built from closed-form
//! primitives and combinators. Derivatives come from jet arithmetic, never
//! from numeric differentiation, so evaluation stays accurate arbitrarily
//! close to |z| = 1.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jet::Jet3;

/// Denominator moduli below this are treated as a pole.
pub const SINGULARITY_TOL: f64 = 1e-12;

#[derive(Debug)]
pub(crate) enum Expr {
    Identity,
    Const(Complex64),
    /// c_0 + c_1 z + ... in ascending order.
    Polynomial(Vec<Complex64>),
    /// scale * (1 - k z)^p, principal branch.
    LinearPower {
        scale: Complex64,
        k: Complex64,
        p: f64,
    },
    Sum(AnalyticFn, AnalyticFn),
    Product(AnalyticFn, AnalyticFn),
    Quotient(AnalyticFn, AnalyticFn),
    /// Compose(f, g) is f(g(z)).
    Compose(AnalyticFn, AnalyticFn),
}

/// An analytic function on the disk as an immutable expression tree.
#[derive(Debug, Clone)]
pub struct AnalyticFn(pub(crate) Arc<Expr>);

/// Parameters of a disk automorphism e^{iθ}(z−a)/(1−āz).
#[derive(Debug, Clone, Copy)]
pub struct MobiusParams {
    a: Complex64,
    theta: f64,
}

impl MobiusParams {
    pub fn new(a: Complex64, theta: f64) -> Result<Self> {
        if a.norm() >= 1.0 {
            return Err(Error::Construction(format!(
                "Mobius parameter |a| = {} must be < 1",
                a.norm()
            )));
        }
        Ok(MobiusParams { a, theta })
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phase(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.theta)
    }

    /// Value of the automorphism at a point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.phase() * (z - self.a) / (1.0 - self.a.conj() * z)
    }

    /// Derivative e^{iθ}(1−|a|²)/(1−āz)².
    pub fn deriv(&self, z: Complex64) -> Complex64 {
        let den = 1.0 - self.a.conj() * z;
        self.phase() * (1.0 - self.a.norm_sqr()) / (den * den)
    }
}

impl AnalyticFn {
    pub fn identity() -> Self {
        AnalyticFn(Arc::new(Expr::Identity))
    }

    pub fn constant(c: Complex64) -> Self {
        AnalyticFn(Arc::new(Expr::Const(c)))
    }

    pub fn zero() -> Self {
        Self::constant(Complex64::new(0.0, 0.0))
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn polynomial(coeffs: Vec<Complex64>) -> Self {
        AnalyticFn(Arc::new(Expr::Polynomial(coeffs)))
    }

    /// scale * (1 - k z)^p with the principal branch of the power.
    pub fn linear_power(scale: Complex64, k: Complex64, p: f64) -> Self {
        AnalyticFn(Arc::new(Expr::LinearPower { scale, k, p }))
    }

    pub fn add(&self, other: &AnalyticFn) -> Self {
        AnalyticFn(Arc::new(Expr::Sum(self.clone(), other.clone())))
    }

    pub fn sub(&self, other: &AnalyticFn) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &AnalyticFn) -> Self {
        AnalyticFn(Arc::new(Expr::Product(self.clone(), other.clone())))
    }

    pub fn div(&self, other: &AnalyticFn) -> Self {
        AnalyticFn(Arc::new(Expr::Quotient(self.clone(), other.clone())))
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &AnalyticFn) -> Self {
        AnalyticFn(Arc::new(Expr::Compose(self.clone(), inner.clone())))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.mul(&Self::constant(c))
    }

    /// Value and first three derivatives at `z` (|z| < 1).
    pub fn jet(&self, z: Complex64) -> Result<Jet3> {
        if z.norm() >= 1.0 {
            return Err(Error::Domain { z });
        }
        let j = self.jet_unchecked(z)?;
        if !j.is_finite() {
            return Err(Error::Singularity { z, modulus: 0.0 });
        }
        Ok(j)
    }

    /// Function value only (|z| < 1).
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.jet(z)?.v)
    }

    fn jet_unchecked(&self, z: Complex64) -> Result<Jet3> {
        match &*self.0 {
            Expr::Identity => Ok(Jet3::variable(z)),
            Expr::Const(c) => Ok(Jet3::constant(*c)),
            Expr::Polynomial(coeffs) => Ok(poly_jet(coeffs, z)),
            Expr::LinearPower { scale, k, p } => {
                let u = 1.0 - k * z;
                if u.norm() < SINGULARITY_TOL && *p < 0.0 {
                    return Err(Error::Singularity {
                        z,
                        modulus: u.norm(),
                    });
                }
                let base = u.powf(*p);
                let v = scale * base;
                let d1 = -scale * p * k * u.powf(p - 1.0);
                let d2 = scale * p * (p - 1.0) * k * k * u.powf(p - 2.0);
                let d3 = -scale * p * (p - 1.0) * (p - 2.0) * k * k * k * u.powf(p - 3.0);
                Ok(Jet3 { v, d1, d2, d3 })
            }
            Expr::Sum(a, b) => Ok(a.jet_unchecked(z)?.add(&b.jet_unchecked(z)?)),
            Expr::Product(a, b) => Ok(a.jet_unchecked(z)?.mul(&b.jet_unchecked(z)?)),
            Expr::Quotient(a, b) => {
                let den = b.jet_unchecked(z)?;
                if den.v.norm() < SINGULARITY_TOL {
                    return Err(Error::Singularity {
                        z,
                        modulus: den.v.norm(),
                    });
                }
                Ok(a.jet_unchecked(z)?.div(&den))
            }
            Expr::Compose(f, g) => {
                let inner = g.jet_unchecked(z)?;
                let outer = f.jet_unchecked(inner.v)?;
                Ok(outer.compose(&inner))
            }
        }
    }
}

fn poly_jet(coeffs: &[Complex64], z: Complex64) -> Jet3 {
    // Horner evaluation carrying the derivative jets along.
    let zero = Complex64::new(0.0, 0.0);
    let mut v = zero;
    let mut d1 = zero;
    let mut d2 = zero;
    let mut d3 = zero;
    for &c in coeffs.iter().rev() {
        d3 = d3 * z + d2;
        d2 = d2 * z + d1;
        d1 = d1 * z + v;
        v = v * z + c;
    }
    // The repeated-Horner accumulators carry p''/2! and p'''/3!.
    Jet3 {
        v,
        d1,
        d2: 2.0 * d2,
        d3: 6.0 * d3,
    }
}

/// The disk automorphism e^{iθ}(z−a)/(1−āz) as an expression tree.
pub fn mobius(params: MobiusParams) -> AnalyticFn {
    let phase = params.phase();
    let a = params.a();
    let num = AnalyticFn::polynomial(vec![-a * phase, phase]);
    let den = AnalyticFn::polynomial(vec![Complex64::new(1.0, 0.0), -a.conj()]);
    num.div(&den)
}

/// Möbius map through three point pairs, as a coefficient matrix (az+b)/(cz+d).
#[derive(Debug, Clone, Copy)]
pub struct MobiusFit {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MobiusFit {
    /// Fits the unique Möbius map sending z_i to w_i.
    pub fn through(zs: [Complex64; 3], ws: [Complex64; 3]) -> Self {
        // M1 sends z1,z2,z3 to 0,1,∞; result is M2^{-1} ∘ M1.
        let m1 = to_standard_triple(zs);
        let m2 = to_standard_triple(ws);
        let inv2 = [m2[3], -m2[1], -m2[2], m2[0]];
        let a = inv2[0] * m1[0] + inv2[1] * m1[2];
        let b = inv2[0] * m1[1] + inv2[1] * m1[3];
        let c = inv2[2] * m1[0] + inv2[3] * m1[2];
        let d = inv2[2] * m1[1] + inv2[3] * m1[3];
        MobiusFit { a, b, c, d }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }
}

fn to_standard_triple(p: [Complex64; 3]) -> [Complex64; 4] {
    let [p1, p2, p3] = p;
    [p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1)]
}

/// Max deviation of `f` from the Möbius map interpolating it at three base
/// points, measured over `samples`. Small residual means `f` is Möbius.
pub fn mobius_fit_residual(f: &AnalyticFn, samples: &[Complex64]) -> Result<f64> {
    let base = [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, -0.5),
    ];
    let images = [f.eval(base[0])?, f.eval(base[1])?, f.eval(base[2])?];
    let fit = MobiusFit::through(base, images);
    let mut worst: f64 = 0.0;
    for &z in samples {
        let r = (fit.eval(z) - f.eval(z)?).norm();
        worst = worst.max(r);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_jet_matches_spec() {
        let f = AnalyticFn::identity();
        let j = f.jet(c(0.3, 0.1)).unwrap();
        assert_eq!(j.v, c(0.3, 0.1));
        assert_eq!(j.d1, c(1.0, 0.0));
        assert_eq!(j.d2, c(0.0, 0.0));
        assert_eq!(j.d3, c(0.0, 0.0));
    }

    #[test]
    fn z_over_one_minus_z_at_zero() {
        let f = AnalyticFn::identity().div(&AnalyticFn::polynomial(vec![c(1.0, 0.0), c(-1.0, 0.0)]));
        let j = f.jet(c(0.0, 0.0)).unwrap();
        assert!((j.v - c(0.0, 0.0)).norm() < 1e-15);
        assert!((j.d1 - c(1.0, 0.0)).norm() < 1e-15);
        assert!((j.d2 - c(2.0, 0.0)).norm() < 1e-15);
        assert!((j.d3 - c(6.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn mobius_jet_at_zero() {
        // (z-0.5)/(1-0.5z) at 0: value -0.5, then 0.75, 0.75, 1.125 by finite
        // differences of the closed form (frozen oracle values).
        let params = MobiusParams::new(c(0.5, 0.0), 0.0).unwrap();
        let f = mobius(params);
        let j = f.jet(c(0.0, 0.0)).unwrap();
        assert!((j.v - c(-0.5, 0.0)).norm() < 1e-12);
        assert!((j.d1 - c(0.75, 0.0)).norm() < 1e-12);
        assert!((j.d2 - c(0.75, 0.0)).norm() < 1e-12);
        assert!((j.d3 - c(1.125, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn mobius_derivative_identities_at_zero() {
        // ω(z) = (z+α)/(1+ᾱz) is mobius(a = -α): ω'(0) = 1-|α|², ω''(0) = -2ᾱ(1-|α|²)
        let alpha = c(0.5, 0.0);
        let f = mobius(MobiusParams::new(-alpha, 0.0).unwrap());
        let j = f.jet(c(0.0, 0.0)).unwrap();
        assert!((j.d1 - c(0.75, 0.0)).norm() < 1e-12);
        assert!((j.d2 - c(-0.75, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn mobius_rejects_boundary_parameter() {
        assert!(MobiusParams::new(c(1.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn domain_error_outside_disk() {
        let f = AnalyticFn::identity();
        assert!(matches!(f.jet(c(1.0, 0.5)), Err(Error::Domain { .. })));
    }

    #[test]
    fn quotient_pole_is_hard_error() {
        let f = AnalyticFn::one().div(&AnalyticFn::polynomial(vec![c(0.5, 0.0), c(-1.0, 0.0)]));
        assert!(matches!(
            f.jet(c(0.5, 0.0)),
            Err(Error::Singularity { .. })
        ));
    }

    #[test]
    fn linear_power_matches_quotient_route() {
        // (1-z)^{-2} via LinearPower vs 1/((1-z)(1-z))
        let lp = AnalyticFn::linear_power(c(1.0, 0.0), c(1.0, 0.0), -2.0);
        let lin = AnalyticFn::polynomial(vec![c(1.0, 0.0), c(-1.0, 0.0)]);
        let quo = AnalyticFn::one().div(&lin.mul(&lin));
        for &z in &[c(0.3, 0.2), c(-0.7, 0.1), c(0.0, 0.9)] {
            let a = lp.jet(z).unwrap();
            let b = quo.jet(z).unwrap();
            assert!((a.v - b.v).norm() < 1e-12);
            assert!((a.d1 - b.d1).norm() < 1e-11);
            assert!((a.d2 - b.d2).norm() < 1e-10);
            assert!((a.d3 - b.d3).norm() < 1e-9);
        }
    }

    #[test]
    fn composition_of_automorphisms_is_automorphism() {
        let p1 = MobiusParams::new(c(0.3, 0.1), 0.7).unwrap();
        let p2 = MobiusParams::new(c(-0.2, 0.4), -1.1).unwrap();
        let f = mobius(p1).compose(&mobius(p2));
        let pts: Vec<Complex64> = (0..10)
            .map(|i| {
                let t = i as f64 / 10.0 * std::f64::consts::TAU;
                Complex64::from_polar(0.6, t) + c(0.05, -0.02)
            })
            .collect();
        let res = mobius_fit_residual(&f, &pts).unwrap();
        assert!(res < 1e-10, "residual {res}");
    }
}
