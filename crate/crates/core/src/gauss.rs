//! Exact Gaussian integration of Clifford-valued polynomials.
//!
//! Two probability measures are supported:
//!
//! - `ρ` on `ℝⁿ`, density `(2π)^{-n/2} e^{-|x|²/2}` (variance 1 per axis);
//! - `μ̃` on `ℝ^{n+1}`, density `π^{-(n+1)/2} e^{-x₀²-|x|²}` (variance 1/2).
//!
//! Integrals are computed symbolically by expanding `conj(f)·g` into
//! monomials and summing coefficient × moment, so there is no quadrature.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::clifford::{CliffordNumber, Dimension, GaussianRational};
use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, MultiIndex, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    /// Standard Gaussian on `ℝⁿ`.
    Rho,
    /// Gaussian of variance 1/2 on `ℝ^{n+1}`.
    MuTilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussianMeasure {
    pub kind: MeasureKind,
    pub n: Dimension,
}

/// `(k-1)!! · v^{k/2}` for even `k`, zero for odd `k`.
fn moment_1d(k: u32, variance_half: bool) -> BigRational {
    if k % 2 == 1 {
        return BigRational::zero();
    }
    let mut dfact = BigInt::one();
    let mut j = 1u32;
    while j < k {
        dfact *= j;
        j += 2;
    }
    if variance_half {
        BigRational::new(dfact, BigInt::one() << (k / 2))
    } else {
        BigRational::from_integer(dfact)
    }
}

impl GaussianMeasure {
    pub fn rho(n: Dimension) -> Self {
        Self { kind: MeasureKind::Rho, n }
    }

    pub fn mu_tilde(n: Dimension) -> Self {
        Self { kind: MeasureKind::MuTilde, n }
    }

    fn half_variance(&self) -> bool {
        self.kind == MeasureKind::MuTilde
    }

    /// `∫ x₀^{k₀} x^β dm`, the product of one-dimensional moments.
    pub fn moment(&self, x0: u32, beta: &MultiIndex) -> Result<BigRational> {
        if beta.len() != self.n.get() {
            return Err(Error::ArityMismatch { expected: self.n.get(), got: beta.len() });
        }
        if self.kind == MeasureKind::Rho && x0 != 0 {
            return Err(Error::DependsOnX0);
        }
        let half = self.half_variance();
        let mut acc = moment_1d(x0, half);
        for &b in beta.entries() {
            if acc.is_zero() {
                break;
            }
            acc *= moment_1d(b, half);
        }
        Ok(acc)
    }

    fn check_compatible(&self, f: &CliffordPolynomial) -> Result<()> {
        self.n.check_same(f.dim())?;
        if self.kind == MeasureKind::Rho {
            f.require_x0_free()?;
        }
        Ok(())
    }

    /// `∫ conj(f)·g dm`, the full Clifford-valued pairing before grade
    /// projection.
    pub fn clifford_pairing(&self, f: &CliffordPolynomial, g: &CliffordPolynomial) -> Result<CliffordNumber> {
        self.check_compatible(f)?;
        self.check_compatible(g)?;
        let mut moments = MomentCache::new(*self);
        let mut acc = CliffordNumber::zero(self.n);
        for (mf, cf) in f.terms() {
            let cf = cf.conj();
            for (mg, cg) in g.terms() {
                let w = moments.get(mf, mg);
                if w.is_zero() {
                    continue;
                }
                acc = &acc + &(&cf * cg).scale_rational(&w);
            }
        }
        Ok(acc)
    }

    /// `⟨f, g⟩ = ∫ [conj(f)·g]₀ dm`.
    pub fn inner(&self, f: &CliffordPolynomial, g: &CliffordPolynomial) -> Result<GaussianRational> {
        self.check_compatible(f)?;
        self.check_compatible(g)?;
        let mut moments = MomentCache::new(*self);
        let mut acc = GaussianRational::zero();
        for (mf, cf) in f.terms() {
            for (mg, cg) in g.terms() {
                let w = moments.get(mf, mg);
                if w.is_zero() {
                    continue;
                }
                acc += &cf.inner(cg)?.scale(&w);
            }
        }
        Ok(acc)
    }

    /// `‖f‖² = ⟨f, f⟩`, always a nonnegative rational.
    pub fn norm_sq(&self, f: &CliffordPolynomial) -> Result<BigRational> {
        Ok(self.inner(f, f)?.re)
    }

    /// Same sum as [`Self::inner`], evaluated in `f64`. Used as a smoke
    /// check at degrees where exact arithmetic gets slow.
    pub fn inner_f64(&self, f: &CliffordPolynomial, g: &CliffordPolynomial) -> Result<(f64, f64)> {
        self.check_compatible(f)?;
        self.check_compatible(g)?;
        let half = self.half_variance();
        let m1 = |k: u32| -> f64 {
            if k % 2 == 1 {
                return 0.0;
            }
            let mut v = 1.0f64;
            let mut j = 1u32;
            while j < k {
                v *= j as f64;
                j += 2;
            }
            if half {
                v / 2f64.powi((k / 2) as i32)
            } else {
                v
            }
        };
        let ft: Vec<_> = f.terms().map(|(m, c)| (m.clone(), c.to_f64_terms())).collect();
        let gt: Vec<_> = g.terms().map(|(m, c)| (m.clone(), c.to_f64_terms())).collect();
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for (mf, cf) in &ft {
            for (mg, cg) in &gt {
                let mut w = m1(mf.x0 + mg.x0);
                for (a, b) in mf.beta.entries().iter().zip(mg.beta.entries()) {
                    w *= m1(a + b);
                }
                if w == 0.0 {
                    continue;
                }
                // Σ_A conj(f_A) g_A over shared blades.
                for (bf, (fr, fi)) in cf {
                    if let Some((_, (gr, gi))) = cg.iter().find(|(bg, _)| bg == bf) {
                        re += w * (fr * gr + fi * gi);
                        im += w * (fr * gi - fi * gr);
                    }
                }
            }
        }
        Ok((re, im))
    }

    /// Gram matrix `⟨f_i, f_j⟩`, computed in parallel; row-major order.
    pub fn gram(&self, basis: &[CliffordPolynomial]) -> Result<Vec<Vec<GaussianRational>>> {
        basis
            .par_iter()
            .map(|fi| basis.iter().map(|fj| self.inner(fi, fj)).collect::<Result<Vec<_>>>())
            .collect()
    }
}

struct MomentCache {
    measure: GaussianMeasure,
    cache: HashMap<Monomial, BigRational>,
}

impl MomentCache {
    fn new(measure: GaussianMeasure) -> Self {
        Self { measure, cache: HashMap::new() }
    }

    fn get(&mut self, a: &Monomial, b: &Monomial) -> BigRational {
        let x0 = a.x0 + b.x0;
        if x0 % 2 == 1 || a.beta.entries().iter().zip(b.beta.entries()).any(|(p, q)| (p + q) % 2 == 1) {
            return BigRational::zero();
        }
        let key = Monomial::new(x0, a.beta.add(&b.beta));
        let m = self.measure;
        self.cache
            .entry(key)
            .or_insert_with_key(|k| m.moment(k.x0, &k.beta).expect("compatible monomial"))
            .clone()
    }
}

pub fn clifford_pairing(
    f: &CliffordPolynomial,
    g: &CliffordPolynomial,
    m: GaussianMeasure,
) -> Result<CliffordNumber> {
    m.clifford_pairing(f, g)
}

/// `L²(ρ)` inner product of two x₀-free polynomials.
pub fn inner_rho(f: &CliffordPolynomial, g: &CliffordPolynomial) -> Result<GaussianRational> {
    GaussianMeasure::rho(f.dim()).inner(f, g)
}

/// `L²(μ̃)` inner product on `ℝ^{n+1}`.
pub fn inner_mu(f: &CliffordPolynomial, g: &CliffordPolynomial) -> Result<GaussianRational> {
    GaussianMeasure::mu_tilde(f.dim()).inner(f, g)
}
