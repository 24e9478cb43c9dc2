//! Exact computer algebra for Clifford-valued analysis on polynomial
//! truncations.
//!
//! Coefficients live in the complex Clifford algebra `C_n` over Gaussian
//! rationals, so every identity is checked by structural equality rather
//! than within a tolerance. The layers build on each other:
//!
//! - [`clifford`]: blades, the geometric product and Hermitian conjugation.
//! - [`poly`]: sparse polynomials in `(x₀, x₁, …, x_n)` with right
//!   Clifford coefficients, partial derivatives, the Dirac operator and
//!   the Cauchy-Riemann operator.
//! - [`gauss`]: closed-form moments of the standard and half-variance
//!   Gaussian measures and the induced inner products.
//! - [`transform`]: the heat operator, Hermite polynomials, the
//!   Cauchy-Kowalevski extension and the Segal-Bargmann transform.
//! - [`fock`]: Fock-space elements and the Taylor map.
//! - [`json`], [`verify`], [`cli`]: canonical serialization, the seeded
//!   verification suite and the command-line front end.

pub mod clifford;
pub mod error;
pub mod poly;
pub mod gauss;
pub mod transform;
pub mod fock;
pub mod json;
pub mod oracle;
pub mod random;
pub mod verify;
pub mod cli;
