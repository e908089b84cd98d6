//! Disk-supremum estimation for the weighted derivative functionals:
//! boundary-aware grid sampling followed by derivative-free local refinement.
//! Estimates are sampled lower bounds; they never certify a supremum from
//! above.

use num_complex::Complex64;

use crate::error::Result;
use crate::map::HarmonicMap;

/// Which operator family a functional uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Analytic,
    Hm,
    Cdo,
}

/// Which weighted functional to maximize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    /// (1−|z|²)|P(z)|
    Pre,
    /// (1−|z|²)²|S(z)|
    Schwarzian,
    /// (1−|z|²)|h'(z)|(1+|ω(z)|)
    Bloch,
}

/// Sampling grid: radii log-spaced in (1−r) down to 1−r_max, uniform angles.
#[derive(Debug, Clone)]
pub struct GridConfig {
    pub n_theta: usize,
    pub n_radii: usize,
    pub r_max: f64,
    pub refine: bool,
    pub refine_tol: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            n_theta: 256,
            n_radii: 200,
            r_max: 1.0 - 1e-6,
            refine: true,
            refine_tol: 1e-9,
        }
    }
}

impl GridConfig {
    /// Strictly increasing radii from 0 to r_max, log-spaced in 1−r.
    pub fn radii(&self) -> Vec<f64> {
        let n = self.n_radii.max(2);
        let log_end = (1.0 - self.r_max).ln();
        (0..n)
            .map(|i| {
                let s = i as f64 / (n - 1) as f64;
                1.0 - (s * log_end).exp()
            })
            .collect()
    }
}

/// Sampled lower bound for a disk supremum.
#[derive(Debug, Clone, Copy)]
pub struct NormEstimate {
    pub value: f64,
    pub argmax: Complex64,
    /// True when the argmax radius sits within one grid step of r_max.
    pub boundary_limit: bool,
    pub evaluations: usize,
}

/// The weighted functional behind each norm, evaluated at one point.
pub fn functional_value(
    f: &HarmonicMap,
    which: Which,
    flavor: Flavor,
    z: Complex64,
) -> Result<f64> {
    let w = 1.0 - z.norm_sqr();
    match which {
        Which::Pre => {
            let p = match flavor {
                Flavor::Analytic => f.pre_schwarzian_analytic(z)?,
                Flavor::Hm => f.pre_schwarzian_hm(z)?,
                Flavor::Cdo => f.pre_schwarzian_cdo(z)?,
            };
            Ok(w * p.norm())
        }
        Which::Schwarzian => {
            let s = match flavor {
                Flavor::Analytic => f.schwarzian_analytic(z)?,
                Flavor::Hm => f.schwarzian_hm(z)?,
                Flavor::Cdo => f.schwarzian_cdo(z)?,
            };
            Ok(w * w * s.norm())
        }
        Which::Bloch => {
            let hp = f.hp().eval(z)?;
            let omega = f.dilatation(z)?;
            Ok(w * hp.norm() * (1.0 + omega.norm()))
        }
    }
}

pub fn norm_pre_schwarzian(
    f: &HarmonicMap,
    flavor: Flavor,
    cfg: &GridConfig,
) -> Result<NormEstimate> {
    estimate(f, Which::Pre, flavor, cfg)
}

pub fn norm_schwarzian(f: &HarmonicMap, flavor: Flavor, cfg: &GridConfig) -> Result<NormEstimate> {
    estimate(f, Which::Schwarzian, flavor, cfg)
}

pub fn bloch_constant(f: &HarmonicMap, cfg: &GridConfig) -> Result<NormEstimate> {
    estimate(f, Which::Bloch, Flavor::Hm, cfg)
}

/// A grid cell candidate; ordering is value-desc, then radius-asc, then
/// angle-asc for deterministic tie-breaking.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    r: f64,
    theta: f64,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        if self.value != other.value {
            return self.value > other.value;
        }
        if self.r != other.r {
            return self.r < other.r;
        }
        self.theta < other.theta
    }
}

pub fn estimate(
    f: &HarmonicMap,
    which: Which,
    flavor: Flavor,
    cfg: &GridConfig,
) -> Result<NormEstimate> {
    let radii = cfg.radii();
    let mut evaluations = 0usize;
    let mut top: Vec<Candidate> = Vec::new();

    for &r in &radii {
        for j in 0..cfg.n_theta {
            let theta = std::f64::consts::TAU * j as f64 / cfg.n_theta as f64;
            let z = Complex64::from_polar(r, theta);
            let value = functional_value(f, which, flavor, z)?;
            evaluations += 1;
            push_top(&mut top, Candidate { value, r, theta }, 5);
        }
    }

    let mut best = top[0];
    if cfg.refine {
        let dtheta = std::f64::consts::TAU / cfg.n_theta as f64;
        for start in top.clone() {
            let (r, theta, evals) = nelder_mead_max(
                |r, theta| {
                    let z = Complex64::from_polar(r, theta);
                    functional_value(f, which, flavor, z).unwrap_or(f64::NEG_INFINITY)
                },
                start.r,
                start.theta,
                grid_step(&radii, start.r).max(1e-9),
                dtheta,
                cfg.r_max,
                cfg.refine_tol,
            );
            evaluations += evals;
            let z = Complex64::from_polar(r, theta);
            if let Ok(value) = functional_value(f, which, flavor, z) {
                let cand = Candidate { value, r, theta };
                if cand.better_than(&best) {
                    best = cand;
                }
            }
        }
    }

    let argmax = Complex64::from_polar(best.r, best.theta);
    // The reported value is the functional re-evaluated exactly at argmax.
    let value = functional_value(f, which, flavor, argmax)?;
    evaluations += 1;
    let second_last = radii[radii.len() - 2];
    Ok(NormEstimate {
        value,
        argmax,
        boundary_limit: best.r >= second_last,
        evaluations,
    })
}

fn grid_step(radii: &[f64], r: f64) -> f64 {
    let idx = radii.partition_point(|&x| x < r).min(radii.len() - 1);
    let lo = idx.saturating_sub(1);
    (radii[idx] - radii[lo]).abs().max(1e-12)
}

fn push_top(top: &mut Vec<Candidate>, cand: Candidate, keep: usize) {
    let pos = top.iter().position(|c| cand.better_than(c));
    match pos {
        Some(i) => top.insert(i, cand),
        None => top.push(cand),
    }
    top.truncate(keep);
}

/// Maximizes `f(r, θ)` with a plain Nelder–Mead simplex over (r, θ), r clamped
/// to [0, r_max]. Returns the best vertex and the evaluation count.
fn nelder_mead_max<F: Fn(f64, f64) -> f64>(
    f: F,
    r0: f64,
    theta0: f64,
    dr: f64,
    dtheta: f64,
    r_max: f64,
    tol: f64,
) -> (f64, f64, usize) {
    let clamp = |r: f64| r.clamp(0.0, r_max);
    let mut evals = 0usize;
    let mut eval = |p: [f64; 2]| {
        evals += 1;
        f(clamp(p[0]), p[1])
    };

    let mut simplex = [
        [r0, theta0],
        [clamp(r0 + dr), theta0],
        [r0, theta0 + dtheta],
    ];
    let mut values = [eval(simplex[0]), eval(simplex[1]), eval(simplex[2])];

    for _ in 0..300 {
        // Sort descending (maximization).
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| values[b].partial_cmp(&values[a]).unwrap());
        simplex = [simplex[idx[0]], simplex[idx[1]], simplex[idx[2]]];
        values = [values[idx[0]], values[idx[1]], values[idx[2]]];

        let spread = (simplex[0][0] - simplex[2][0]).abs().max(
            (simplex[0][1] - simplex[2][1]).abs(),
        );
        if spread < tol {
            break;
        }

        let centroid = [
            0.5 * (simplex[0][0] + simplex[1][0]),
            0.5 * (simplex[0][1] + simplex[1][1]),
        ];
        let worst = simplex[2];
        let reflect = [
            centroid[0] + (centroid[0] - worst[0]),
            centroid[1] + (centroid[1] - worst[1]),
        ];
        let fr = eval(reflect);
        if fr > values[0] {
            let expand = [
                centroid[0] + 2.0 * (centroid[0] - worst[0]),
                centroid[1] + 2.0 * (centroid[1] - worst[1]),
            ];
            let fe = eval(expand);
            if fe > fr {
                simplex[2] = expand;
                values[2] = fe;
            } else {
                simplex[2] = reflect;
                values[2] = fr;
            }
        } else if fr > values[1] {
            simplex[2] = reflect;
            values[2] = fr;
        } else {
            let contract = [
                centroid[0] + 0.5 * (worst[0] - centroid[0]),
                centroid[1] + 0.5 * (worst[1] - centroid[1]),
            ];
            let fc = eval(contract);
            if fc > values[2] {
                simplex[2] = contract;
                values[2] = fc;
            } else {
                // Shrink toward the best vertex.
                for i in 1..3 {
                    simplex[i] = [
                        simplex[0][0] + 0.5 * (simplex[i][0] - simplex[0][0]),
                        simplex[0][1] + 0.5 * (simplex[i][1] - simplex[0][1]),
                    ];
                    values[i] = eval(simplex[i]);
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..3 {
        if values[i] > values[best] {
            best = i;
        }
    }
    (
        clamp(simplex[best][0]),
        simplex[best][1].rem_euclid(std::f64::consts::TAU),
        evals,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{mobius, AnalyticFn, MobiusParams};

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn radii_are_increasing_and_bounded() {
        let cfg = GridConfig::default();
        let radii = cfg.radii();
        assert_eq!(radii.len(), cfg.n_radii);
        assert_eq!(radii[0], 0.0);
        assert!((radii[radii.len() - 1] - cfg.r_max).abs() < 1e-12);
        for w in radii.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn identity_map_has_zero_norms() {
        let f = HarmonicMap::new(AnalyticFn::one(), AnalyticFn::zero());
        let cfg = GridConfig {
            n_theta: 16,
            n_radii: 20,
            ..Default::default()
        };
        assert_eq!(norm_pre_schwarzian(&f, Flavor::Hm, &cfg).unwrap().value, 0.0);
        assert_eq!(norm_schwarzian(&f, Flavor::Hm, &cfg).unwrap().value, 0.0);
    }

    #[test]
    fn mobius_schwarzian_norm_is_zero() {
        let h = mobius(MobiusParams::new(re(0.3), 0.4).unwrap());
        // Treat the Möbius map's derivative as h' by composing jets: use
        // h' = (1−|a|²)e^{iθ}/(1−āz)² directly.
        let a = Complex64::new(0.3, 0.0);
        let hp = AnalyticFn::linear_power(
            Complex64::from_polar(1.0 - a.norm_sqr(), 0.4),
            a.conj(),
            -2.0,
        );
        let _ = h;
        let f = HarmonicMap::new(hp, AnalyticFn::zero());
        let cfg = GridConfig {
            n_theta: 16,
            n_radii: 20,
            ..Default::default()
        };
        let est = norm_schwarzian(&f, Flavor::Analytic, &cfg).unwrap();
        assert!(est.value < 1e-10);
    }

    #[test]
    fn bloch_of_identity_is_one() {
        let f = HarmonicMap::new(AnalyticFn::one(), AnalyticFn::zero());
        let cfg = GridConfig {
            n_theta: 8,
            n_radii: 50,
            ..Default::default()
        };
        let est = bloch_constant(&f, &cfg).unwrap();
        assert!((est.value - 1.0).abs() < 1e-12);
        assert!(!est.boundary_limit);
    }

    #[test]
    fn cubic_cdo_gap_constant() {
        // F = z + conj(z³/3), q = z: sup (1−r²)·2r/(1+r²) at r₀ = √(√5−2)
        let omega = AnalyticFn::identity().mul(&AnalyticFn::identity());
        let f = HarmonicMap::with_q(AnalyticFn::one(), omega, AnalyticFn::identity());
        let cfg = GridConfig::default();
        let est = norm_pre_schwarzian(&f, Flavor::Cdo, &cfg).unwrap();
        let r0 = (5f64.sqrt() - 2.0).sqrt();
        let target = 2.0 * r0 * (1.0 - r0 * r0) / (1.0 + r0 * r0);
        assert!((est.value - target).abs() < 1e-9, "value {}", est.value);
        assert!((est.argmax.norm() - r0).abs() < 1e-3);
        assert!(!est.boundary_limit);
    }

    #[test]
    fn lower_bound_soundness() {
        let omega = mobius(MobiusParams::new(re(0.5), 0.0).unwrap());
        let hp = AnalyticFn::linear_power(re(1.0), re(1.0), -2.0);
        let f = HarmonicMap::new(hp, omega);
        let cfg = GridConfig {
            n_theta: 64,
            n_radii: 60,
            ..Default::default()
        };
        let est = norm_pre_schwarzian(&f, Flavor::Hm, &cfg).unwrap();
        let re_eval = functional_value(&f, Which::Pre, Flavor::Hm, est.argmax).unwrap();
        assert!((re_eval - est.value).abs() < 1e-12);
    }

    #[test]
    fn grid_monotonicity() {
        let omega = mobius(MobiusParams::new(re(0.5), 0.0).unwrap());
        let hp = AnalyticFn::linear_power(re(1.0), re(1.0), -2.0);
        let f = HarmonicMap::new(hp, omega);
        let coarse = GridConfig {
            n_theta: 32,
            n_radii: 40,
            ..Default::default()
        };
        let fine = GridConfig {
            n_theta: 64,
            n_radii: 80,
            ..Default::default()
        };
        let a = norm_pre_schwarzian(&f, Flavor::Hm, &coarse).unwrap().value;
        let b = norm_pre_schwarzian(&f, Flavor::Hm, &fine).unwrap().value;
        assert!(b >= a - 1e-12, "coarse {a} fine {b}");
    }
}
