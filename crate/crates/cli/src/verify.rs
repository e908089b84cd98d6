//! The named verification suites behind `harmdisk verify`. Each check pins a
//! closed-form target or bound and reports pass/fail with the measured value.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use harmdisk::families::{self, Params, FAMILY_NAMES, F0_NAMES};
use harmdisk::map::q_functional;
use harmdisk::norm::{estimate, Flavor, GridConfig, Which};
use harmdisk::transforms::{affine_transform, chain_rule_residuals, AffineParams};
use harmdisk::{
    coefficient_bound_check, distortion_check, g_coefficients, AnalyticFn, HarmonicMap,
    MobiusParams,
};

pub const SUITE_NAMES: &[&str] = &[
    "thm31", "cor32", "cor33", "cor34", "thm42", "thm43", "thm45", "thm46", "identities",
];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn collect(suite: &str, checks: Vec<Check>) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

pub fn rand_disk(rng: &mut ChaCha8Rng, max_mod: f64) -> Complex64 {
    let r = max_mod * rng.gen::<f64>().sqrt();
    let t = rng.gen::<f64>() * std::f64::consts::TAU;
    Complex64::from_polar(r, t)
}

pub fn build1(name: &str, key: &str, value: f64) -> harmdisk::Result<HarmonicMap> {
    let mut p = Params::new();
    p.insert(key.into(), value);
    families::build(name, &p)
}

const GAMMA_GRID: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 0.9];

/// Every q-equipped fixture used by the gap and corollary checks.
pub fn q_equipped_fixtures() -> harmdisk::Result<Vec<(String, HarmonicMap)>> {
    let mut out = vec![(
        "cubic-cdo".to_string(),
        families::build("cubic-cdo", &Params::new())?,
    )];
    for name in ["cor32-family", "cor33-family"] {
        for g in GAMMA_GRID {
            out.push((format!("{name} gamma={g}"), build1(name, "gamma", g)?));
        }
    }
    Ok(out)
}

/// The F₀ fixtures used by the norm-bound checks.
pub fn f0_fixtures() -> harmdisk::Result<Vec<(String, HarmonicMap)>> {
    let mut out = Vec::new();
    for &t in &[0.5, 0.7, 0.9, 0.99] {
        out.push((format!("thm42-extremal t={t}"), build1("thm42-extremal", "t", t)?));
    }
    for &t in &[0.0, 0.5, 0.9, 0.99] {
        out.push((format!("thm43-extremal t={t}"), build1("thm43-extremal", "t", t)?));
    }
    for &g in &[0.0, 0.5, 0.9] {
        out.push((format!("coeff-family gamma={g}"), build1("coeff-family", "gamma", g)?));
    }
    for &(theta, alpha) in &[(0.0, 0.0), (1.0, 2.0)] {
        let mut p = Params::new();
        p.insert("theta".into(), theta);
        p.insert("alpha".into(), alpha);
        out.push((
            format!("bloch-unbounded theta={theta} alpha={alpha}"),
            families::build("bloch-unbounded", &p)?,
        ));
    }
    out.push((
        "bloch-bounded".to_string(),
        families::build("bloch-bounded", &Params::new())?,
    ));
    Ok(out)
}

pub fn run_suite(suite: &str, seed: u64) -> harmdisk::Result<SuiteReport> {
    let checks = match suite {
        "thm31" => thm31(seed)?,
        "cor32" => corollary_suite("cor32-family", 6.600566, QhBand::Above(-0.5), seed)?,
        "cor33" => corollary_suite("cor33-family", 2.600566, QhBand::Below(1.5), seed)?,
        "cor34" => cor34(seed)?,
        "thm42" => thm42()?,
        "thm43" => thm43()?,
        "thm45" => thm45()?,
        "thm46" => thm46()?,
        "identities" => identities(seed)?,
        other => {
            return Err(harmdisk::Error::Key(format!("unknown suite '{other}'")));
        }
    };
    Ok(SuiteReport::collect(suite, checks))
}

fn thm31(seed: u64) -> harmdisk::Result<Vec<Check>> {
    let gap = families::gap_constant();
    let cfg = GridConfig::default();
    let mut checks = Vec::new();

    let cubic = families::build("cubic-cdo", &Params::new())?;
    let est = estimate(&cubic, Which::Pre, Flavor::Cdo, &cfg)?;
    checks.push(check(
        "thm31/gap-sharpness",
        (est.value - gap).abs() <= 1e-3,
        format!("cdo pre-Schwarzian norm {} vs target {gap}", est.value),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fixtures = q_equipped_fixtures()?;
    let mut worst = f64::MIN;
    for _ in 0..10_000 {
        let (_, f) = &fixtures[rng.gen_range(0..fixtures.len())];
        let z = rand_disk(&mut rng, 0.999);
        let diff = f.pre_schwarzian_cdo(z)? - f.pre_schwarzian_analytic(z)?;
        worst = worst.max((1.0 - z.norm_sqr()) * diff.norm());
    }
    checks.push(check(
        "thm31/gap-universality",
        worst <= gap + 1e-6,
        format!("max weighted |P_cdo - P_h| = {worst} over 10000 samples, bound {gap}"),
    ));

    let mut worst_gap = 0.0f64;
    for (label, f) in &fixtures {
        let cdo = estimate(f, Which::Pre, Flavor::Cdo, &cfg)?.value;
        let ana = estimate(f, Which::Pre, Flavor::Analytic, &cfg)?.value;
        let d = (cdo - ana).abs();
        if d > worst_gap {
            worst_gap = d;
        }
        if d > gap + 1e-6 {
            checks.push(check(
                "thm31/norm-gap",
                false,
                format!("{label}: |norm_cdo - norm_analytic| = {d} exceeds {gap}"),
            ));
            return Ok(checks);
        }
    }
    checks.push(check(
        "thm31/norm-gap",
        true,
        format!("max |norm_cdo - norm_analytic| = {worst_gap}, bound {gap}"),
    ));
    Ok(checks)
}

enum QhBand {
    Above(f64),
    Below(f64),
}

fn corollary_suite(
    family: &str,
    bound: f64,
    band: QhBand,
    seed: u64,
) -> harmdisk::Result<Vec<Check>> {
    let cfg = GridConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut worst_norm = f64::MIN;
    let mut band_ok = true;
    let mut band_detail = String::new();
    for g in GAMMA_GRID {
        let f = build1(family, "gamma", g)?;
        worst_norm = worst_norm.max(estimate(&f, Which::Pre, Flavor::Cdo, &cfg)?.value);
        for _ in 0..1000 {
            let z = rand_disk(&mut rng, 0.999);
            let q = q_functional(f.hp(), z)?;
            let ok = match band {
                QhBand::Above(lo) => q.re > lo,
                QhBand::Below(hi) => q.re < hi,
            };
            if !ok && band_ok {
                band_ok = false;
                band_detail = format!("Re Q_h = {} at {z} (gamma={g})", q.re);
            }
        }
    }
    checks.push(check(
        &format!("{}/qh-band", family.trim_end_matches("-family")),
        band_ok,
        if band_ok {
            "Re Q_h stayed inside the defining half-plane at 5000 samples".to_string()
        } else {
            band_detail
        },
    ));
    checks.push(check(
        &format!("{}/cdo-norm-bound", family.trim_end_matches("-family")),
        worst_norm <= bound + 1e-6,
        format!("max cdo pre-Schwarzian norm {worst_norm}, bound {bound}"),
    ));
    Ok(checks)
}

fn cor34(seed: u64) -> harmdisk::Result<Vec<Check>> {
    // Witness with -1/2 < Re Q_h < 3/2: h' = 1 - z/2 gives Re Q_h in (0, 4/3).
    let one = Complex64::new(1.0, 0.0);
    let hp = AnalyticFn::polynomial(vec![one, Complex64::new(-0.5, 0.0)]);
    let cfg = GridConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut worst_norm = f64::MIN;
    let mut band_ok = true;
    let mut band_detail = String::new();
    for g in GAMMA_GRID {
        let q = harmdisk::mobius(MobiusParams::new(Complex64::new(-g, 0.0), 0.0)?);
        let f = HarmonicMap::with_q(hp.clone(), q.mul(&q), q);
        worst_norm = worst_norm.max(estimate(&f, Which::Pre, Flavor::Cdo, &cfg)?.value);
        for _ in 0..1000 {
            let z = rand_disk(&mut rng, 0.999);
            let qh = q_functional(f.hp(), z)?;
            if !(qh.re > -0.5 && qh.re < 1.5) && band_ok {
                band_ok = false;
                band_detail = format!("Re Q_h = {} at {z} (gamma={g})", qh.re);
            }
        }
    }
    checks.push(check(
        "cor34/qh-band",
        band_ok,
        if band_ok {
            "-1/2 < Re Q_h < 3/2 held at 5000 samples".to_string()
        } else {
            band_detail
        },
    ));
    checks.push(check(
        "cor34/cdo-norm-bound",
        worst_norm <= 2.600566 + 1e-6,
        format!("max cdo pre-Schwarzian norm {worst_norm}, bound 2.600566"),
    ));
    Ok(checks)
}

fn thm42() -> harmdisk::Result<Vec<Check>> {
    let mut checks = Vec::new();

    // Brute-force real-axis supremum of (1-r²)|P_{f_t}(r)| vs the closed form.
    let mut worst = 0.0f64;
    for &t in &[0.5, 0.7, 0.9] {
        let f = build1("thm42-extremal", "t", t)?;
        let mut sup = f64::MIN;
        let steps = 1_000_000usize;
        for i in 0..steps {
            let r = i as f64 / steps as f64 * (1.0 - 1e-6);
            let z = Complex64::new(r, 0.0);
            let p = f.pre_schwarzian_hm(z)?;
            sup = sup.max((1.0 - r * r) * p.norm());
        }
        worst = worst.max((sup - families::m_t(t)).abs());
    }
    checks.push(check(
        "thm42/real-axis-sup",
        worst <= 1e-5,
        format!("max |brute-force sup - M_t| = {worst} for t in {{0.5, 0.7, 0.9}}"),
    ));

    let grid: Vec<f64> = (0..10).map(|i| 0.5 + 0.05 * i as f64).collect();
    let monotone = grid.windows(2).all(|w| families::m_t(w[1]) > families::m_t(w[0]));
    checks.push(check(
        "thm42/m-monotone",
        monotone,
        "M_t strictly increasing on t in {0.5, 0.55, ..., 0.95}".to_string(),
    ));

    let cfg = GridConfig::default();
    let mut worst_norm = f64::MIN;
    let mut worst_label = String::new();
    for (label, f) in f0_fixtures()? {
        let v = estimate(&f, Which::Pre, Flavor::Hm, &cfg)?.value;
        if v > worst_norm {
            worst_norm = v;
            worst_label = label;
        }
    }
    checks.push(check(
        "thm42/full-disk-bound",
        worst_norm <= 5.0 + 1e-6,
        format!("max hm pre-Schwarzian norm {worst_norm} ({worst_label}), bound 5"),
    ));

    let f = build1("thm42-extremal", "t", 0.99)?;
    let v = estimate(&f, Which::Pre, Flavor::Hm, &cfg)?.value;
    let m = families::m_t(0.99);
    checks.push(check(
        "thm42/sharpness-approach",
        v >= m - 1e-9,
        format!("sampled norm {v} at t=0.99 vs M = {m}"),
    ));
    Ok(checks)
}

fn thm43() -> harmdisk::Result<Vec<Check>> {
    let mut checks = Vec::new();
    let origin = Complex64::new(0.0, 0.0);

    let mut worst = 0.0f64;
    for &t in &[0.0, 0.5, 0.9, 0.99] {
        let f = build1("thm43-extremal", "t", t)?;
        let s = f.schwarzian_hm(origin)?;
        worst = worst.max((s - Complex64::new(2.0 + t * t, 0.0)).norm());
    }
    checks.push(check(
        "thm43/s0-closed-form",
        worst <= 1e-9,
        format!("max |S(0) - (2 + t²)| = {worst} for t in {{0, 0.5, 0.9, 0.99}}"),
    ));

    let cfg = GridConfig::default();
    let mut worst_norm = f64::MIN;
    let mut worst_label = String::new();
    for (label, f) in f0_fixtures()? {
        let v = estimate(&f, Which::Schwarzian, Flavor::Hm, &cfg)?.value;
        if v > worst_norm {
            worst_norm = v;
            worst_label = label;
        }
    }
    checks.push(check(
        "thm43/full-disk-bound",
        worst_norm <= 3.0 + 1e-6,
        format!("max hm Schwarzian norm {worst_norm} ({worst_label}), bound 3"),
    ));

    let f = build1("thm43-extremal", "t", 0.99)?;
    let v = estimate(&f, Which::Schwarzian, Flavor::Hm, &cfg)?.value;
    checks.push(check(
        "thm43/approach-3",
        v >= 2.98,
        format!("sampled Schwarzian norm {v} at t=0.99, target >= 2.98"),
    ));
    Ok(checks)
}

fn thm45() -> harmdisk::Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut worst = 0.0f64;
    for &g in &[0.0, 0.25, 0.5, 0.75, 0.9, 0.99] {
        let f = build1("coeff-family", "gamma", g)?;
        let bs = g_coefficients(&f, 50)?;
        for (i, b) in bs.iter().enumerate() {
            let want = families::b_n(g, i + 1);
            worst = worst.max((b - Complex64::new(want, 0.0)).norm());
        }
    }
    checks.push(check(
        "thm45/bn-closed-form",
        worst <= 1e-10,
        format!("max |b_n - closed form| = {worst}, n <= 50, six gamma values"),
    ));

    let mut worst_mod = 0.0f64;
    let mut worst_label = String::new();
    for (label, f) in f0_fixtures()? {
        let rep = coefficient_bound_check(&f, 50)?;
        if rep.max_modulus > worst_mod {
            worst_mod = rep.max_modulus;
            worst_label = format!("{label} (n={})", rep.worst_n);
        }
    }
    checks.push(check(
        "thm45/bn-bound",
        worst_mod <= 1.0 + 1e-10,
        format!("max |b_n| = {worst_mod} ({worst_label}), bound 1"),
    ));

    // Coefficient of z^n in zg' is n·b_n; majorization by |h| caps it at n.
    let mut worst_ratio = 0.0f64;
    for (_, f) in f0_fixtures()? {
        let bs = g_coefficients(&f, 50)?;
        for (i, b) in bs.iter().enumerate() {
            let n = (i + 1) as f64;
            worst_ratio = worst_ratio.max(n * b.norm() / n);
        }
    }
    checks.push(check(
        "thm45/zgp-majorization",
        worst_ratio <= 1.0 + 1e-10,
        format!("max |coeff(z^n in zg')|/n = {worst_ratio}, bound 1"),
    ));

    let f = build1("coeff-family", "gamma", 0.999)?;
    let bs = g_coefficients(&f, 10)?;
    let min_b = bs.iter().map(|b| b.re).fold(f64::MAX, f64::min);
    checks.push(check(
        "thm45/bn-to-one",
        min_b > 0.99,
        format!("min b_n = {min_b} at gamma=0.999, n <= 10, target > 0.99"),
    ));
    Ok(checks)
}

fn thm46() -> harmdisk::Result<Vec<Check>> {
    let mut checks = Vec::new();
    let radii = [0.1, 0.3, 0.5, 0.7, 0.9, 0.99];

    let mut worst = f64::MIN;
    for &g in &[0.0, 0.5, 0.9] {
        let f = build1("coeff-family", "gamma", g)?;
        let rep = distortion_check(&f, &radii, g)?;
        worst = worst.max(rep.max_violation);
        if !rep.pass {
            checks.push(check(
                "thm46/distortion-bands",
                false,
                format!("gamma={g}: band violated by {}", rep.max_violation),
            ));
            return Ok(checks);
        }
    }
    checks.push(check(
        "thm46/distortion-bands",
        true,
        format!("max band violation {worst} (slack 1e-9)"),
    ));

    let mut worst_gp = 0.0f64;
    for &r in &[0.2, 0.37, 0.5] {
        let f = build1("coeff-family", "gamma", r)?;
        let z = Complex64::new(-r, 0.0);
        let gp = f.omega().eval(z)? * f.hp().eval(z)?;
        worst_gp = worst_gp.max(gp.norm());
    }
    checks.push(check(
        "thm46/gp-zero-at-minus-r",
        worst_gp <= 1e-12,
        format!("max |g'(-r)| = {worst_gp} at gamma = r"),
    ));

    let f = build1("coeff-family", "gamma", 0.999)?;
    let r = 0.5;
    let z = Complex64::new(r, 0.0);
    let gp = (f.omega().eval(z)? * f.hp().eval(z)?).norm();
    let scaled = gp * (1.0 - r) * (1.0 - r);
    checks.push(check(
        "thm46/gp-approaches-limit",
        scaled >= 0.999,
        format!("g'(r)(1-r)² = {scaled} at gamma=0.999, r=0.5, target >= 0.999"),
    ));
    Ok(checks)
}

fn random_f0(rng: &mut ChaCha8Rng) -> harmdisk::Result<HarmonicMap> {
    let name = F0_NAMES[rng.gen_range(0..F0_NAMES.len())];
    match name {
        "thm42-extremal" => build1(name, "t", 0.5 + 0.45 * rng.gen::<f64>()),
        "thm43-extremal" => build1(name, "t", 0.95 * rng.gen::<f64>()),
        "coeff-family" => build1(name, "gamma", 0.95 * rng.gen::<f64>()),
        "bloch-unbounded" => {
            let mut p = Params::new();
            p.insert("theta".into(), rng.gen::<f64>() * std::f64::consts::TAU);
            p.insert("alpha".into(), rng.gen::<f64>() * std::f64::consts::TAU);
            families::build(name, &p)
        }
        _ => families::build(name, &Params::new()),
    }
}

fn identities(seed: u64) -> harmdisk::Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut worst_p = 0.0f64;
    let mut worst_s = 0.0f64;
    for _ in 0..3 {
        let f = random_f0(&mut rng)?;
        let phi = MobiusParams::new(rand_disk(&mut rng, 0.6), rng.gen::<f64>())?;
        let samples: Vec<Complex64> = (0..100).map(|_| rand_disk(&mut rng, 0.8)).collect();
        let (p, s) = chain_rule_residuals(&f, phi, &samples)?;
        worst_p = worst_p.max(p);
        worst_s = worst_s.max(s);
    }
    checks.push(check(
        "identities/chain-rule",
        worst_p < 1e-6 && worst_s < 1e-6,
        format!("max residuals P: {worst_p}, S: {worst_s}, bound 1e-6"),
    ));

    let mut worst_aff = 0.0f64;
    for _ in 0..3 {
        let f = random_f0(&mut rng)?;
        let eps = rand_disk(&mut rng, 0.8);
        let g = affine_transform(&f, AffineParams::new(eps)?)?;
        for _ in 0..100 {
            let z = rand_disk(&mut rng, 0.8);
            worst_aff = worst_aff
                .max((f.pre_schwarzian_hm(z)? - g.pre_schwarzian_hm(z)?).norm())
                .max((f.schwarzian_hm(z)? - g.schwarzian_hm(z)?).norm());
        }
    }
    checks.push(check(
        "identities/affine-invariance",
        worst_aff < 1e-9,
        format!("max residual {worst_aff}, bound 1e-9"),
    ));

    // S_f = ∂_z P_f - ½P_f² with ∂_z by central differences, step 1e-5.
    let h = 1e-5;
    let i = Complex64::new(0.0, 1.0);
    let mut worst_w = 0.0f64;
    for _ in 0..5 {
        let f = random_f0(&mut rng)?;
        for _ in 0..100 {
            let z = rand_disk(&mut rng, 0.9);
            let p = |w: Complex64| f.pre_schwarzian_hm(w);
            let dx = (p(z + h)? - p(z - h)?) / (2.0 * h);
            let dy = (p(z + i * h)? - p(z - i * h)?) / (2.0 * h);
            let dz = 0.5 * (dx - i * dy);
            let pv = p(z)?;
            worst_w = worst_w.max((f.schwarzian_hm(z)? - (dz - 0.5 * pv * pv)).norm());
        }
    }
    checks.push(check(
        "identities/wirtinger",
        worst_w < 1e-4,
        format!("max residual {worst_w}, bound 1e-4 (finite-difference limited)"),
    ));

    let mut worst_sp = f64::MIN;
    for _ in 0..10_000 {
        let name = FAMILY_NAMES[rng.gen_range(0..FAMILY_NAMES.len())];
        let f = families::build(name, &families::default_params(name)?)?;
        let z = rand_disk(&mut rng, 0.999);
        let w = f.omega().jet(z)?;
        let lhs = (1.0 - z.norm_sqr()) * w.d1.norm();
        let rhs = (1.0 - w.v.norm_sqr()) * (1.0 + 1e-12);
        worst_sp = worst_sp.max(lhs - rhs);
    }
    checks.push(check(
        "identities/schwarz-pick",
        worst_sp <= 0.0,
        format!("max (1-|z|²)|ω'| - (1-|ω|²) = {worst_sp} over 10000 samples"),
    ));

    let mut worst_mob = 0.0f64;
    for _ in 0..50 {
        let a = rand_disk(&mut rng, 0.9);
        let theta = rng.gen::<f64>() * std::f64::consts::TAU;
        let hp = AnalyticFn::linear_power(
            Complex64::from_polar(1.0, theta) * (1.0 - a.norm_sqr()),
            a.conj(),
            -2.0,
        );
        let z = rand_disk(&mut rng, 0.95);
        worst_mob = worst_mob.max(harmdisk::map::schwarzian_analytic(&hp, z)?.norm());
    }
    checks.push(check(
        "identities/mobius-schwarzian-vanishes",
        worst_mob < 1e-10,
        format!("max |S| = {worst_mob} over random automorphisms"),
    ));
    Ok(checks)
}
