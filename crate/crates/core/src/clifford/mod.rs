//! Exact arithmetic in the complex Clifford algebra `C_n`, generated by
//! `e₁, …, e_n` subject to `e_i e_j + e_j e_i = -2δ_ij`.
//!
//! Blades are bitmasks over at most 16 generators. Coefficients are
//! [`GaussianRational`]s, so every identity is checked by exact equality.

mod blade;
mod gaussian;
mod number;

pub use blade::{blade_product, Blade, Dimension};
pub use gaussian::{format_rational, parse_rational, GaussianRational};
pub use number::CliffordNumber;

#[cfg(test)]
pub(crate) use gaussian::rational_to_f64;
