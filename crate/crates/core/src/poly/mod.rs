//! `C_n`-valued polynomials on `ℝ^{n+1}` with exact differential operators.
//!
//! A polynomial is `f = Σ x₀^{k₀} x^β c_{k₀,β}` with each Clifford
//! coefficient written as a right factor. The variables are real scalars,
//! so placement only matters once polynomials multiply each other or a
//! Clifford number acts from one side.

mod multi_index;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use crate::clifford::{Blade, CliffordNumber, Dimension, GaussianRational};
use crate::error::{Error, Result};

pub use multi_index::{factorial, MultiIndex};

/// Default cap on total degree accepted from external input.
pub const DEFAULT_MAX_DEGREE: u32 = 12;

/// Environment variable overriding [`DEFAULT_MAX_DEGREE`].
pub const MAX_DEGREE_ENV: &str = "MONOGENIC_MAX_DEGREE";

/// Total-degree cap. Exceeding it is an error, never a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeLimit(pub u32);

impl Default for DegreeLimit {
    fn default() -> Self {
        DegreeLimit(DEFAULT_MAX_DEGREE)
    }
}

impl DegreeLimit {
    /// Reads `MONOGENIC_MAX_DEGREE`, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_DEGREE_ENV) {
            Ok(v) => v
                .trim()
                .parse::<u32>()
                .map(DegreeLimit)
                .map_err(|_| Error::ParameterBound(format!("{MAX_DEGREE_ENV}={v:?} is not a nonnegative integer"))),
            Err(_) => Ok(DegreeLimit::default()),
        }
    }

    pub fn check_degree(self, degree: u32) -> Result<()> {
        if degree > self.0 {
            Err(Error::DegreeBound { degree, max: self.0 })
        } else {
            Ok(())
        }
    }

    pub fn check(self, f: &CliffordPolynomial) -> Result<()> {
        self.check_degree(f.degree())
    }
}

/// Monomial `x₀^{k₀} x^β`. Orders by total degree, then `k₀`, then `β`
/// lexicographically; this is the serialization order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub x0: u32,
    pub beta: MultiIndex,
}

impl Monomial {
    pub fn new(x0: u32, beta: MultiIndex) -> Self {
        Monomial { x0, beta }
    }

    pub fn degree(&self) -> u32 {
        self.x0 + self.beta.order()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial { x0: self.x0 + other.x0, beta: self.beta.add(&other.beta) }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x0.cmp(&other.x0))
            .then_with(|| self.beta.entries().cmp(other.beta.entries()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse `C_n`-valued polynomial in `x₀, x₁, …, x_n`.
///
/// No zero coefficient is stored. A polynomial is x₀-free iff every key has
/// `k₀ = 0`; such polynomials model functions on `ℝⁿ`.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordPolynomial {
    n: Dimension,
    terms: BTreeMap<Monomial, CliffordNumber>,
}

impl CliffordPolynomial {
    pub fn zero(n: Dimension) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn constant(c: CliffordNumber) -> Self {
        let n = c.dim();
        let mut f = Self::zero(n);
        f.add_term(Monomial::new(0, MultiIndex::zero(n.get())), &c);
        f
    }

    pub fn one(n: Dimension) -> Self {
        Self::constant(CliffordNumber::one(n))
    }

    /// `x₀^{k₀} x^β c`.
    pub fn monomial(x0: u32, beta: MultiIndex, c: CliffordNumber) -> Result<Self> {
        let n = c.dim();
        if beta.len() != n.get() {
            return Err(Error::ArityMismatch { expected: n.get(), got: beta.len() });
        }
        let mut f = Self::zero(n);
        f.add_term(Monomial::new(x0, beta), &c);
        Ok(f)
    }

    /// Real monomial `x^β` with coefficient 1.
    pub fn x_pow(n: Dimension, beta: &MultiIndex) -> Result<Self> {
        Self::monomial(0, beta.clone(), CliffordNumber::one(n))
    }

    /// Coordinate function `x_axis` (axis 0 is `x₀`).
    pub fn coordinate(n: Dimension, axis: usize) -> Result<Self> {
        if axis > n.get() {
            return Err(Error::AxisOutOfRange { axis, n: n.get() });
        }
        let (x0, beta) = if axis == 0 {
            (1, MultiIndex::zero(n.get()))
        } else {
            (0, MultiIndex::unit(n.get(), axis - 1))
        };
        Self::monomial(x0, beta, CliffordNumber::one(n))
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I>(n: Dimension, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, CliffordNumber)>,
    {
        let mut f = Self::zero(n);
        for (m, c) in terms {
            n.check_same(c.dim())?;
            if m.beta.len() != n.get() {
                return Err(Error::ArityMismatch { expected: n.get(), got: m.beta.len() });
            }
            f.add_term(m, &c);
        }
        Ok(f)
    }

    pub fn dim(&self) -> Dimension {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in serialization order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CliffordNumber)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x0: u32, beta: &MultiIndex) -> CliffordNumber {
        self.terms.get(&Monomial::new(x0, beta.clone())).cloned().unwrap_or_else(|| CliffordNumber::zero(self.n))
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn x0_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.x0).max().unwrap_or(0)
    }

    pub fn is_x0_free(&self) -> bool {
        self.terms.keys().all(|m| m.x0 == 0)
    }

    pub fn require_x0_free(&self) -> Result<()> {
        if self.is_x0_free() {
            Ok(())
        } else {
            Err(Error::DependsOnX0)
        }
    }

    fn add_term(&mut self, m: Monomial, c: &CliffordNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.n.check_same(other.n)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Right action `f · λ`.
    pub fn mul_right(&self, c: &CliffordNumber) -> Result<Self> {
        self.n.check_same(c.dim())?;
        let mut out = Self::zero(self.n);
        for (m, v) in self.terms() {
            out.add_term(m.clone(), &v.try_mul(c)?);
        }
        Ok(out)
    }

    /// Left action `λ · f`.
    pub fn mul_left(&self, c: &CliffordNumber) -> Result<Self> {
        self.n.check_same(c.dim())?;
        let mut out = Self::zero(self.n);
        for (m, v) in self.terms() {
            out.add_term(m.clone(), &c.try_mul(v)?);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        let mut out = Self::zero(self.n);
        for (m, v) in self.terms() {
            out.add_term(m.clone(), &v.scale(s));
        }
        out
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        let mut out = Self::zero(self.n);
        for (m, v) in self.terms() {
            out.add_term(m.clone(), &v.scale_rational(r));
        }
        out
    }

    /// Pointwise product `f(x)·g(x)`; Clifford order is preserved.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.n.check_same(other.n)?;
        let mut out = Self::zero(self.n);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.times(mb), &ca.try_mul(cb)?);
            }
        }
        Ok(out)
    }

    /// Multiplies by the scalar monomial `x₀^{k}`.
    pub fn mul_x0_pow(&self, k: u32) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (Monomial::new(m.x0 + k, m.beta.clone()), c.clone())).collect(),
        }
    }

    /// Pointwise Hermitian conjugate. The variables are real, so only the
    /// coefficients are conjugated.
    pub fn conj(&self) -> Self {
        Self { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    /// Exact value at `(x₀, x)`.
    pub fn eval(&self, x0: &BigRational, x: &[BigRational]) -> Result<CliffordNumber> {
        if x.len() != self.n.get() {
            return Err(Error::ArityMismatch { expected: self.n.get(), got: x.len() });
        }
        let pow = |base: &BigRational, k: u32| num_traits::pow(base.clone(), k as usize);
        let mut acc = CliffordNumber::zero(self.n);
        for (m, c) in self.terms() {
            let mut w = pow(x0, m.x0);
            for (xi, &b) in x.iter().zip(m.beta.entries()) {
                w *= pow(xi, b);
            }
            acc = &acc + &c.scale_rational(&w);
        }
        Ok(acc)
    }

    /// `∂/∂x_axis`, with axis 0 standing for `x₀`.
    pub fn partial(&self, axis: usize) -> Result<Self> {
        if axis > self.n.get() {
            return Err(Error::AxisOutOfRange { axis, n: self.n.get() });
        }
        let mut out = Self::zero(self.n);
        for (m, c) in self.terms() {
            let (k, next) = if axis == 0 {
                if m.x0 == 0 {
                    continue;
                }
                (m.x0, Monomial::new(m.x0 - 1, m.beta.clone()))
            } else {
                let i = axis - 1;
                match m.beta.decrement(i) {
                    Some(b) => (m.beta.get(i), Monomial::new(m.x0, b)),
                    None => continue,
                }
            };
            out.add_term(next, &c.scale_rational(&BigRational::from_integer(k.into())));
        }
        Ok(out)
    }

    fn partial_x(&self, j: usize) -> Self {
        self.partial(j).expect("axis in range")
    }

    /// `D f = Σ_j e_j ∂_j f`, with `e_j` multiplying from the left.
    pub fn dirac(&self) -> Self {
        let mut out = Self::zero(self.n);
        for j in 1..=self.n.get() {
            let ej = CliffordNumber::blade(self.n, Blade::generator(j));
            for (m, c) in self.partial_x(j).terms() {
                out.add_term(m.clone(), &(&ej * c));
            }
        }
        out
    }

    /// `Δ f = Σ_{j≥1} ∂_j² f`; `x₀` is not differentiated.
    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero(self.n);
        for j in 1..=self.n.get() {
            for (m, c) in self.partial_x(j).partial_x(j).terms() {
                out.add_term(m.clone(), c);
            }
        }
        out
    }

    /// Generalized Cauchy-Riemann operator `(∂₀ + D) f`.
    pub fn cauchy_riemann(&self) -> Self {
        let mut out = self.partial(0).expect("axis 0 always valid");
        for (m, c) in self.dirac().terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn is_monogenic(&self) -> bool {
        self.cauchy_riemann().is_zero()
    }

    pub fn require_monogenic(&self) -> Result<()> {
        if self.is_monogenic() {
            Ok(())
        } else {
            Err(Error::NotMonogenic)
        }
    }

    /// Substitutes `x₀ = 0`.
    pub fn restrict(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.x0 == 0).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Real rational coefficient `r · f`, convenient for building sums.
    pub fn times_int(&self, k: i64) -> Self {
        if k == 1 {
            return self.clone();
        }
        self.scale_rational(&BigRational::from_integer(k.into()))
    }
}

impl<'a> Add<&'a CliffordPolynomial> for &'a CliffordPolynomial {
    type Output = CliffordPolynomial;
    /// Panics on dimension mismatch; see [`CliffordPolynomial::try_add`].
    fn add(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self.try_add(rhs).expect("dimension mismatch")
    }
}

impl<'a> Sub<&'a CliffordPolynomial> for &'a CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn sub(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self.try_sub(rhs).expect("dimension mismatch")
    }
}

impl Neg for &CliffordPolynomial {
    type Output = CliffordPolynomial;
    fn neg(self) -> CliffordPolynomial {
        self.scale_rational(&-BigRational::one())
    }
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mut vars = Vec::new();
            if m.x0 > 0 {
                vars.push(if m.x0 == 1 { "x0".to_string() } else { format!("x0^{}", m.x0) });
            }
            for (i, &b) in m.beta.entries().iter().enumerate() {
                match b {
                    0 => {}
                    1 => vars.push(format!("x{}", i + 1)),
                    _ => vars.push(format!("x{}^{}", i + 1, b)),
                }
            }
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "{}·({c})", vars.join(""))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[n={}; {}]", self.n, self)
    }
}
