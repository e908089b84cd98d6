//! Truncated Taylor series over complex doubles. Arithmetic is exact on
//! coefficients up to the truncation degree.

use num_complex::Complex64;

use crate::analytic::{AnalyticFn, Expr};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    /// c_0..c_N in ascending order; never empty.
    coeffs: Vec<Complex64>,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl PowerSeries {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![ZERO; order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(order + 1, ZERO);
        PowerSeries { coeffs: c }
    }

    pub fn add(&self, other: &PowerSeries) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        PowerSeries { coeffs }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|x| c * x).collect(),
        }
    }

    /// Product truncated at max of the operand orders.
    pub fn mul(&self, other: &PowerSeries) -> Self {
        let order = self.order().max(other.order());
        let mut coeffs = vec![ZERO; order + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > order {
                break;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// Quotient; the divisor needs a nonzero constant term.
    pub fn div(&self, other: &PowerSeries) -> Result<Self> {
        let b0 = other.coeff(0);
        if b0.norm() < crate::analytic::SINGULARITY_TOL {
            return Err(Error::Series(
                "series division by divisor with zero constant term".into(),
            ));
        }
        let order = self.order().max(other.order());
        let mut q = vec![ZERO; order + 1];
        for n in 0..=order {
            let mut acc = self.coeff(n);
            for j in 1..=n {
                acc -= other.coeff(j) * q[n - j];
            }
            q[n] = acc / b0;
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Formal composition self(inner); inner must vanish at 0.
    pub fn compose(&self, inner: &PowerSeries) -> Result<Self> {
        if inner.coeff(0).norm() != 0.0 {
            return Err(Error::Series(
                "series composition requires inner constant term 0".into(),
            ));
        }
        let order = self.order().max(inner.order());
        let mut acc = PowerSeries::zero(order);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner.truncate(order));
            acc.coeffs[0] += c;
        }
        Ok(acc.truncate(order))
    }

    /// Termwise antiderivative with constant term 0; order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![ZERO; self.coeffs.len() + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            coeffs[j + 1] = c / (j as f64 + 1.0);
        }
        PowerSeries { coeffs }
    }

    /// Termwise derivative; order shrinks by one.
    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return PowerSeries::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &c)| c * j as f64)
            .collect();
        PowerSeries { coeffs }
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut v = ZERO;
        for &c in self.coeffs.iter().rev() {
            v = v * z + c;
        }
        v
    }

    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Taylor coefficients of `f` at 0 through degree `order`, by exact series
/// algebra on the expression tree.
pub fn series_from(f: &AnalyticFn, order: usize) -> Result<PowerSeries> {
    let s = expand(f, order)?;
    Ok(s.truncate(order))
}

fn expand(f: &AnalyticFn, order: usize) -> Result<PowerSeries> {
    match &*f.0 {
        Expr::Identity => {
            let mut s = PowerSeries::zero(order);
            if order >= 1 {
                s.coeffs[1] = Complex64::new(1.0, 0.0);
            }
            Ok(s)
        }
        Expr::Const(c) => {
            let mut s = PowerSeries::zero(order);
            s.coeffs[0] = *c;
            Ok(s)
        }
        Expr::Polynomial(coeffs) => Ok(PowerSeries::new(coeffs.clone()).truncate(order)),
        Expr::LinearPower { scale, k, p } => {
            // scale * Σ_j binom(p, j) (-k)^j z^j
            let mut s = PowerSeries::zero(order);
            let mut term = *scale;
            s.coeffs[0] = term;
            for j in 1..=order {
                term *= (p - (j as f64 - 1.0)) / j as f64 * (-k);
                s.coeffs[j] = term;
            }
            Ok(s)
        }
        Expr::Sum(a, b) => Ok(expand(a, order)?.add(&expand(b, order)?)),
        Expr::Product(a, b) => Ok(expand(a, order)?.mul(&expand(b, order)?)),
        Expr::Quotient(a, b) => expand(a, order)?.div(&expand(b, order)?),
        Expr::Compose(outer, inner) => expand(outer, order)?.compose(&expand(inner, order)?),
    }
}
