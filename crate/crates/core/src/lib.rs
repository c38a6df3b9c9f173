//! Exact homology of real Grassmannians G_k(R^n).
//!
//! Two independent computations of the same answer:
//!
//! * a formula side — mod-2 and rational Poincare polynomials from Gaussian
//!   binomial coefficients and restricted partition counts, combined into the
//!   2-torsion generating functions of integral homology and cohomology;
//! * an oracle side — the integral Schubert-cell chain complex reduced by
//!   Smith normal form.
//!
//! All arithmetic is exact over arbitrary-precision integers. The
//! [`crosscheck`] module compares the two sides degree by degree.

pub mod betti;
pub mod crosscheck;
pub mod error;
pub mod partitions;
pub mod poly;
pub mod schubert;
pub mod snf;
pub mod torsion;

pub use betti::GrassmannianParams;
pub use error::Error;
pub use poly::Polynomial;
