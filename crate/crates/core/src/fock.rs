//! `C_n`-valued covariant Fock space on `ℝⁿ` and the Taylor map.
//!
//! A symmetric `k`-tensor functional `α_k` is stored only through its
//! values on the basis tensors `e^β`, `|β| = k`; the rest is fixed by
//! symmetry. Only finitely supported elements (the polynomial sector) are
//! representable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::clifford::{CliffordNumber, Dimension};
use crate::error::{Error, Result};
use crate::poly::{CliffordPolynomial, Monomial, MultiIndex};
use crate::transform::ck_extend;

/// Finitely supported `α = Σ_k α_k` with `entry(β) = α_{|β|}(e^β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockElement {
    n: Dimension,
    entries: BTreeMap<MultiIndex, CliffordNumber>,
}

fn factorial_q(beta: &MultiIndex) -> BigRational {
    BigRational::from_integer(BigInt::from(beta.factorial()))
}

impl FockElement {
    pub fn zero(n: Dimension) -> Self {
        Self { n, entries: BTreeMap::new() }
    }

    /// Sums repeated indices and drops zero values.
    pub fn from_entries<I>(n: Dimension, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, CliffordNumber)>,
    {
        let mut out = Self::zero(n);
        for (beta, c) in entries {
            n.check_same(c.dim())?;
            if beta.len() != n.get() {
                return Err(Error::ArityMismatch { expected: n.get(), got: beta.len() });
            }
            let slot = out.entries.entry(beta).or_insert_with(|| CliffordNumber::zero(n));
            *slot = &*slot + &c;
        }
        out.entries.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn dim(&self) -> Dimension {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, beta: &MultiIndex) -> CliffordNumber {
        self.entries.get(beta).cloned().unwrap_or_else(|| CliffordNumber::zero(self.n))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &CliffordNumber)> + '_ {
        self.entries.iter()
    }

    /// Highest grade with a nonzero component.
    pub fn max_grade(&self) -> u32 {
        self.entries.keys().map(MultiIndex::order).max().unwrap_or(0)
    }

    /// The grade-`k` component `α_k`.
    pub fn grade(&self, k: u32) -> FockElement {
        Self {
            n: self.n,
            entries: self.entries.iter().filter(|(b, _)| b.order() == k).map(|(b, c)| (b.clone(), c.clone())).collect(),
        }
    }

    /// `‖α‖² = Σ_β |α(e^β)|² / β!`.
    pub fn norm_sq(&self) -> BigRational {
        self.entries.iter().fold(BigRational::zero(), |acc, (beta, c)| acc + c.norm_sq() / factorial_q(beta))
    }
}

pub fn fock_norm_sq(alpha: &FockElement) -> BigRational {
    alpha.norm_sq()
}

/// Taylor map `F ↦ (D^k F(0,0))_k`, with `entry(γ) = ∂^γ F(0, 0)`.
///
/// Only x-derivatives enter and they are taken at `x₀ = 0`, so they factor
/// through `F(0, ·)`: `∂^γ F(0, 0) = γ! · [x^γ] F(0, ·)`.
pub fn taylor_map(f: &CliffordPolynomial) -> Result<FockElement> {
    f.require_monogenic()?;
    let entries = f.terms().filter(|(m, _)| m.x0 == 0).map(|(m, c)| (m.beta.clone(), c.scale_rational(&factorial_q(&m.beta))));
    FockElement::from_entries(f.dim(), entries)
}

/// `∂^γ F(0, 0)` by repeated differentiation and evaluation at the origin,
/// independent of the shortcut used by [`taylor_map`].
pub fn derivative_at_origin(f: &CliffordPolynomial, gamma: &MultiIndex) -> Result<CliffordNumber> {
    let n = f.dim();
    if gamma.len() != n.get() {
        return Err(Error::ArityMismatch { expected: n.get(), got: gamma.len() });
    }
    let mut g = f.clone();
    for (i, &k) in gamma.entries().iter().enumerate() {
        for _ in 0..k {
            g = g.partial(i + 1)?;
        }
    }
    let zero = BigRational::zero();
    g.eval(&zero, &vec![zero.clone(); n.get()])
}

/// `f(x) = Σ_k α_k(exp_k(x)) = Σ_β x^β α(e^β) / β!`.
pub fn fock_to_function(alpha: &FockElement) -> CliffordPolynomial {
    let terms = alpha.entries().map(|(beta, c)| {
        (Monomial::new(0, beta.clone()), c.scale_rational(&(BigRational::from_integer(1.into()) / factorial_q(beta))))
    });
    CliffordPolynomial::from_terms(alpha.dim(), terms).expect("entries share the element's dimension")
}

/// Inverse Taylor map: the C-K extension of [`fock_to_function`].
pub fn fock_to_monogenic(alpha: &FockElement) -> CliffordPolynomial {
    ck_extend(&fock_to_function(alpha)).expect("fock_to_function is x0-free")
}
