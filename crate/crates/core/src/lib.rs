//! Numerical toolkit for pre-Schwarzian and Schwarzian derivatives of
//! locally univalent harmonic mappings in the unit disk: complex jet
//! arithmetic, the analytic / Hernández–Martín / Chuaqui–Duren–Osgood
//! operator pairs, disk-supremum norm estimation, Koebe and affine
//! transforms, and the extremal family registry.

pub mod analytic;
pub mod coeffs;
pub mod error;
pub mod families;
pub mod jet;
pub mod map;
pub mod norm;
pub mod series;
pub mod transforms;

pub use analytic::{mobius, mobius_fit_residual, AnalyticFn, MobiusFit, MobiusParams};
pub use coeffs::{coefficient_bound_check, distortion_check, g_coefficients};
pub use error::{Error, Result};
pub use jet::Jet3;
pub use map::{DerivativeBundle, HarmonicMap};
pub use norm::{bloch_constant, norm_pre_schwarzian, norm_schwarzian, Flavor, GridConfig, NormEstimate, Which};
pub use series::{series_from, PowerSeries};
pub use transforms::{affine_transform, chain_rule_residuals, koebe_transform, AffineParams};
