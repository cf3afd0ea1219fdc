//! Integrated mean squared prediction error (IMSPE) for Gaussian-process
//! designs on `[-1, 1]^d`, with closed-form kernel integrals, a quadrature
//! oracle, small-separation expansions and optimal-design search.

pub mod cluster;
pub mod dd;
pub mod error;
pub mod imspe;
pub mod integrals;
pub mod kernels;
pub mod linalg;
pub mod optimize;
pub mod oracle;
pub mod real;
pub mod validate;

pub use dd::Dd;
pub use error::{ImspeError, Result};
pub use kernels::{Family, KernelSpec, Point};
pub use real::Real;
