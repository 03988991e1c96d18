//! Numerical and exact-arithmetic toolkit for the transverse-instability
//! analysis of small-amplitude deep-water Stokes waves: resonance constants,
//! the expanded flattened Dirichlet-Neumann multipliers, contour-quadrature
//! spectral projectors with the Kato similarity reduction to a 2x2 matrix,
//! the unstable-eigenvalue isola with its ellipse asymptotics, and an exact
//! polynomial certificate that the leading off-diagonal coefficient is
//! nonzero.

pub mod assembly;
pub mod certificate;
pub mod dispersion;
pub mod dn;
pub mod error;
pub mod instability;
pub mod kato;
pub mod linalg;
pub mod scalar;
pub mod series;
pub mod stokes;
pub mod validation;

pub use error::{Error, Result};
