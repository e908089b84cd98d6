use num_complex::Complex64;
use thiserror::Error;

/// Errors raised while building or evaluating functions and maps on the disk.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("quotient denominator vanishes near z = {z} (|den| = {modulus:.3e})")]
    Singularity { z: Complex64, modulus: f64 },
    #[error("evaluation point z = {z} lies outside the open unit disk")]
    Domain { z: Complex64 },
    #[error("sense-preservation violated at z = {z}: |omega| = {modulus}")]
    Sense { z: Complex64, modulus: f64 },
    #[error("operation requires a square-root dilatation q, but none was supplied")]
    MissingQ,
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("degenerate affine transform: |1 - conj(eps) g'(0)| = {0:.3e}")]
    Degenerate(f64),
    #[error("parameter out of range: {0}")]
    Param(String),
    #[error("series expansion failed: {0}")]
    Series(String),
    #[error("unknown key: {0}")]
    Key(String),
}

pub type Result<T> = std::result::Result<T, Error>;
