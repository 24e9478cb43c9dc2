//! Heat operator, Hermite polynomials, Cauchy-Kowalevski extension and the
//! Clifford-valued Segal-Bargmann transform `Ũ = e^{-x₀D} ∘ e^{Δ/2}`.
//!
//! Everything acts on polynomials, where each exponential series
//! terminates: `Δ` and `D` are nilpotent on a polynomial of fixed degree.
//! All expansion coefficients sit to the right of `H_β` and `P_β`, which is
//! the side `Ũ` is linear over.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::clifford::{CliffordNumber, Dimension};
use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, MultiIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeatDirection {
    /// `e^{Δ/2}`
    Forward,
    /// `e^{-Δ/2}`
    Inverse,
}

/// `e^{±Δ/2} f = Σ_k (±1)^k Δ^k f / (2^k k!)`.
///
/// `Δ` only differentiates `x₁…x_n`, so any `x₀` dependence is carried along
/// as a parameter.
pub fn heat(f: &CliffordPolynomial, direction: HeatDirection) -> CliffordPolynomial {
    let mut acc = f.clone();
    let mut term = f.clone();
    let mut k = 0i64;
    loop {
        term = term.laplacian();
        if term.is_zero() {
            return acc;
        }
        k += 1;
        // term_k = Δ^k f · (±1)^k / (2^k k!), built incrementally.
        let sign = if direction == HeatDirection::Inverse { -1 } else { 1 };
        term = term.scale_rational(&BigRational::new(sign.into(), (2 * k).into()));
        acc = &acc + &term;
    }
}

/// Probabilists' Hermite polynomial `H_β = Π H_{β_i}(x_i)`, computed as
/// `e^{-Δ/2} x^β` so that `e^{Δ/2} H_β = x^β` holds by construction.
pub fn hermite(n: Dimension, beta: &MultiIndex) -> Result<CliffordPolynomial> {
    Ok(heat(&CliffordPolynomial::x_pow(n, beta)?, HeatDirection::Inverse))
}

/// Cauchy-Kowalevski extension `F = Σ_k (-1)^k x₀^k/k! D^k f`: the unique
/// monogenic polynomial with `F(0, x) = f(x)`.
pub fn ck_extend(f: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    f.require_x0_free()?;
    let mut acc = f.clone();
    let mut d = f.clone();
    let mut k = 0u32;
    let mut weight = BigRational::one();
    loop {
        d = d.dirac();
        if d.is_zero() {
            return Ok(acc);
        }
        k += 1;
        weight = -weight / BigRational::from_integer(k.into());
        acc = &acc + &d.scale_rational(&weight).mul_x0_pow(k);
    }
}

/// `F(0, x)`.
pub fn restrict(f: &CliffordPolynomial) -> CliffordPolynomial {
    f.restrict()
}

/// `P_β = e^{-x₀D} x^β = Ũ(H_β)`.
pub fn p_basis(n: Dimension, beta: &MultiIndex) -> Result<CliffordPolynomial> {
    ck_extend(&CliffordPolynomial::x_pow(n, beta)?)
}

/// `Ũ f = ck_extend(e^{Δ/2} f)` for an x₀-free polynomial.
pub fn sb_transform(f: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    f.require_x0_free()?;
    ck_extend(&heat(f, HeatDirection::Forward))
}

/// `Ũ⁻¹ F = e^{-Δ/2} F(0, ·)`; `F` must be monogenic.
pub fn sb_inverse(f: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    f.require_monogenic()?;
    Ok(heat(&f.restrict(), HeatDirection::Inverse))
}

/// Finite Hermite expansion `f = Σ_β H_β ω_β` with right coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteExpansion {
    n: Dimension,
    coeffs: BTreeMap<MultiIndex, CliffordNumber>,
}

impl HermiteExpansion {
    pub fn zero(n: Dimension) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    /// Sums repeated indices and drops zero coefficients.
    pub fn from_terms<I>(n: Dimension, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, CliffordNumber)>,
    {
        let mut out = Self::zero(n);
        for (beta, c) in terms {
            n.check_same(c.dim())?;
            if beta.len() != n.get() {
                return Err(Error::ArityMismatch { expected: n.get(), got: beta.len() });
            }
            let slot = out.coeffs.entry(beta).or_insert_with(|| CliffordNumber::zero(n));
            *slot = &*slot + &c;
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Hermite coefficients of an x₀-free polynomial: since
    /// `e^{Δ/2} Σ H_β ω_β = Σ x^β ω_β`, they are the monomial coefficients of
    /// `e^{Δ/2} f`.
    pub fn from_polynomial(f: &CliffordPolynomial) -> Result<Self> {
        f.require_x0_free()?;
        let g = heat(f, HeatDirection::Forward);
        Self::from_terms(f.dim(), g.terms().map(|(m, c)| (m.beta.clone(), c.clone())))
    }

    pub fn dim(&self) -> Dimension {
        self.n
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&MultiIndex, &CliffordNumber)> + '_ {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(MultiIndex::order).max().unwrap_or(0)
    }

    /// `Σ H_β ω_β` as a polynomial.
    pub fn to_polynomial(&self) -> Result<CliffordPolynomial> {
        let mut acc = CliffordPolynomial::zero(self.n);
        for (beta, c) in &self.coeffs {
            acc = &acc + &hermite(self.n, beta)?.mul_right(c)?;
        }
        Ok(acc)
    }

    /// `Σ β! |ω_β|²`, which should equal `‖Σ H_β ω_β‖²` under `ρ`.
    pub fn norm_sq(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, (beta, c)| {
            acc + BigRational::from_integer(BigInt::from(beta.factorial())) * c.norm_sq()
        })
    }

    /// `Ũ f = Σ P_β ω_β`, by right-linearity.
    pub fn transform(&self) -> Result<CliffordPolynomial> {
        let mut acc = CliffordPolynomial::zero(self.n);
        for (beta, c) in &self.coeffs {
            acc = &acc + &p_basis(self.n, beta)?.mul_right(c)?;
        }
        Ok(acc)
    }
}

/// Monogenic polynomials as `Σ P_β λ_β`, the image side of the transform.
pub fn p_span<I>(n: Dimension, terms: I) -> Result<CliffordPolynomial>
where
    I: IntoIterator<Item = (MultiIndex, CliffordNumber)>,
{
    HermiteExpansion::from_terms(n, terms)?.transform()
}
