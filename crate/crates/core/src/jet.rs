//! Third-order complex jets: a function value together with its first three
//! derivatives, combined by Leibniz, quotient and Faà di Bruno rules.

use num_complex::Complex64;

/// Value and first three derivatives of an analytic function at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet3 {
    pub v: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub d3: Complex64,
}

impl Jet3 {
    pub fn constant(c: Complex64) -> Self {
        Jet3 {
            v: c,
            d1: Complex64::new(0.0, 0.0),
            d2: Complex64::new(0.0, 0.0),
            d3: Complex64::new(0.0, 0.0),
        }
    }

    /// Jet of the identity map at `z`.
    pub fn variable(z: Complex64) -> Self {
        Jet3 {
            v: z,
            d1: Complex64::new(1.0, 0.0),
            d2: Complex64::new(0.0, 0.0),
            d3: Complex64::new(0.0, 0.0),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.v.is_finite() && self.d1.is_finite() && self.d2.is_finite() && self.d3.is_finite()
    }

    pub fn add(&self, other: &Jet3) -> Jet3 {
        Jet3 {
            v: self.v + other.v,
            d1: self.d1 + other.d1,
            d2: self.d2 + other.d2,
            d3: self.d3 + other.d3,
        }
    }

    pub fn mul(&self, other: &Jet3) -> Jet3 {
        let (f, g) = (self, other);
        Jet3 {
            v: f.v * g.v,
            d1: f.d1 * g.v + f.v * g.d1,
            d2: f.d2 * g.v + 2.0 * f.d1 * g.d1 + f.v * g.d2,
            d3: f.d3 * g.v + 3.0 * f.d2 * g.d1 + 3.0 * f.d1 * g.d2 + f.v * g.d3,
        }
    }

    pub fn scale(&self, c: Complex64) -> Jet3 {
        Jet3 {
            v: c * self.v,
            d1: c * self.d1,
            d2: c * self.d2,
            d3: c * self.d3,
        }
    }

    /// Jet of 1/g given the jet of g; caller checks g.v away from zero.
    pub fn recip(&self) -> Jet3 {
        let g = self;
        let inv = 1.0 / g.v;
        let inv2 = inv * inv;
        let v = inv;
        let d1 = -g.d1 * inv2;
        let d2 = (2.0 * g.d1 * g.d1 - g.v * g.d2) * inv2 * inv;
        let d3 = (-6.0 * g.d1 * g.d1 * g.d1 + 6.0 * g.v * g.d1 * g.d2 - g.v * g.v * g.d3)
            * inv2
            * inv2;
        Jet3 { v, d1, d2, d3 }
    }

    pub fn div(&self, other: &Jet3) -> Jet3 {
        self.mul(&other.recip())
    }

    /// Jet of f∘g: `self` is the jet of f at g(z), `inner` the jet of g at z.
    pub fn compose(&self, inner: &Jet3) -> Jet3 {
        let f = self;
        let g = inner;
        Jet3 {
            v: f.v,
            d1: f.d1 * g.d1,
            d2: f.d2 * g.d1 * g.d1 + f.d1 * g.d2,
            d3: f.d3 * g.d1 * g.d1 * g.d1 + 3.0 * f.d2 * g.d1 * g.d2 + f.d1 * g.d3,
        }
    }
}
