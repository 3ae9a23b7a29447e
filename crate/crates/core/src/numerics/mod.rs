//! Precision-managed scalar arithmetic and the numerical tools built on it.

pub mod branch;
pub mod complex;
pub mod elementary;
pub mod gamma;
pub mod point;
pub mod precision;
pub mod quad;
pub mod real;
pub mod scalar;
pub mod signed_log;

pub use branch::{arccos_principal, sqrt_cut};
pub use complex::ApComplex;
pub use gamma::{log_gamma, LogGamma};
pub use point::Point;
pub use precision::{Agree, Precision, PrecisionPolicy, DEFAULT_MAX_BITS};
pub use quad::{integrate, QuadOptions, QuadValue};
pub use real::{parse_rational, ApReal};
pub use scalar::Scalar;
pub use signed_log::{sl_rel_err, Phase, SignedLog};
