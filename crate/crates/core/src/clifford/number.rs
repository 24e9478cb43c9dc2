//! Elements of the complex Clifford algebra `C_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::blade::{Blade, Dimension};
use super::gaussian::GaussianRational;
use crate::error::{Error, Result};

/// `λ = Σ_A λ_A e_A` in canonical sparse form: no zero coefficient is ever
/// stored, so the empty map is zero and map equality is algebra equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordNumber {
    n: Dimension,
    coeffs: BTreeMap<Blade, GaussianRational>,
}

impl CliffordNumber {
    pub fn zero(n: Dimension) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: Dimension) -> Self {
        Self::scalar(n, GaussianRational::from_int(1))
    }

    pub fn scalar(n: Dimension, s: GaussianRational) -> Self {
        Self::term(n, Blade::SCALAR, s)
    }

    /// `s · e_A`. Panics if the blade does not fit in `C_n`.
    pub fn term(n: Dimension, blade: Blade, s: GaussianRational) -> Self {
        assert!(blade.fits(n), "blade {blade} does not fit in C_{n}");
        let mut coeffs = BTreeMap::new();
        if !s.is_zero() {
            coeffs.insert(blade, s);
        }
        Self { n, coeffs }
    }

    pub fn blade(n: Dimension, blade: Blade) -> Self {
        Self::term(n, blade, GaussianRational::from_int(1))
    }

    /// Generator `e_i`.
    pub fn generator(n: Dimension, i: usize) -> Result<Self> {
        if i == 0 || i > n.get() {
            return Err(Error::IndexOutOfRange { index: i, n: n.get() });
        }
        Ok(Self::blade(n, Blade::generator(i)))
    }

    /// Sums repeated blades and drops zeros.
    pub fn from_terms<I>(n: Dimension, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, GaussianRational)>,
    {
        let mut out = Self::zero(n);
        for (blade, c) in terms {
            if !blade.fits(n) {
                return Err(Error::IndexOutOfRange { index: blade.max_index(), n: n.get() });
            }
            out.add_term(blade, &c);
        }
        Ok(out)
    }

    pub fn dim(&self) -> Dimension {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> GaussianRational {
        self.coeffs.get(&blade).cloned().unwrap_or_default()
    }

    /// Nonzero `(blade, coefficient)` pairs in canonical blade order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &GaussianRational)> + '_ {
        self.coeffs.iter().map(|(b, c)| (*b, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when only the `e_∅` coefficient can be nonzero.
    pub fn is_scalar(&self) -> bool {
        self.coeffs.keys().all(|b| *b == Blade::SCALAR)
    }

    pub(crate) fn add_term(&mut self, blade: Blade, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&blade) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&blade);
                }
            }
            None => {
                self.coeffs.insert(blade, c.clone());
            }
        }
    }

    /// `a + s·b`, coefficient-wise.
    pub fn linear(&self, other: &Self, s: &GaussianRational) -> Result<Self> {
        self.n.check_same(other.n)?;
        let mut out = self.clone();
        if s.is_zero() {
            return Ok(out);
        }
        for (blade, c) in other.terms() {
            out.add_term(blade, &(c * s));
        }
        Ok(out)
    }

    /// Geometric product, the bilinear extension of [`Blade::product`].
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.n.check_same(other.n)?;
        let mut out = Self::zero(self.n);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let (sign, c) = a.product(b);
                let v = ca * cb;
                if sign < 0 {
                    out.add_term(c, &-v);
                } else {
                    out.add_term(c, &v);
                }
            }
        }
        Ok(out)
    }

    /// Scalar multiple `s·λ`.
    pub fn scale(&self, s: &GaussianRational) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, coeffs: self.coeffs.iter().map(|(b, c)| (*b, c * s)).collect() }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, coeffs: self.coeffs.iter().map(|(b, c)| (*b, c.scale(r))).collect() }
    }

    /// `[λ]_k`, the k-vector part. Zero when `k > n`.
    pub fn grade_part(&self, k: usize) -> Self {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    /// Coefficient of `e_∅`.
    pub fn scalar_part(&self) -> GaussianRational {
        self.coeff(Blade::SCALAR)
    }

    /// Hermitian conjugation: complex-conjugate every coefficient and
    /// reverse each blade with `conj(e_i) = -e_i`.
    pub fn conj(&self) -> Self {
        Self {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(b, c)| {
                    let c = c.conj();
                    (*b, if b.conj_sign() < 0 { -c } else { c })
                })
                .collect(),
        }
    }

    /// `(λ, μ) = [conj(λ) μ]_0`.
    ///
    /// Only blades common to both sides contribute to the scalar part, and
    /// `[conj(e_A) e_A]_0 = 1`, so this reduces to `Σ_A conj(λ_A) μ_A`.
    pub fn inner(&self, other: &Self) -> Result<GaussianRational> {
        self.n.check_same(other.n)?;
        let mut acc = GaussianRational::zero();
        for (b, c) in self.terms() {
            if let Some(d) = other.coeffs.get(&b) {
                acc += &(&c.conj() * d);
            }
        }
        Ok(acc)
    }

    /// `|λ|² = Σ_A |λ_A|²`.
    pub fn norm_sq(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |acc, c| acc + c.norm_sq())
    }

    pub fn to_f64_terms(&self) -> Vec<(Blade, (f64, f64))> {
        self.terms().map(|(b, c)| (b, c.to_f64())).collect()
    }
}

impl<'a> Add<&'a CliffordNumber> for &'a CliffordNumber {
    type Output = CliffordNumber;
    /// Panics on dimension mismatch; see [`CliffordNumber::linear`].
    fn add(self, rhs: &CliffordNumber) -> CliffordNumber {
        self.linear(rhs, &GaussianRational::from_int(1)).expect("dimension mismatch")
    }
}

impl<'a> Sub<&'a CliffordNumber> for &'a CliffordNumber {
    type Output = CliffordNumber;
    fn sub(self, rhs: &CliffordNumber) -> CliffordNumber {
        self.linear(rhs, &GaussianRational::from_int(-1)).expect("dimension mismatch")
    }
}

impl<'a> Mul<&'a CliffordNumber> for &'a CliffordNumber {
    type Output = CliffordNumber;
    /// Panics on dimension mismatch; see [`CliffordNumber::try_mul`].
    fn mul(self, rhs: &CliffordNumber) -> CliffordNumber {
        self.try_mul(rhs).expect("dimension mismatch")
    }
}

impl Neg for &CliffordNumber {
    type Output = CliffordNumber;
    fn neg(self) -> CliffordNumber {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl fmt::Display for CliffordNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(b, c)| if b == Blade::SCALAR { c.to_string() } else { format!("{c}·{b}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for CliffordNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}[{}]", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    fn e(n: usize, ix: &[usize]) -> CliffordNumber {
        CliffordNumber::blade(dim(n), Blade::from_indices(ix, dim(n)).unwrap())
    }

    fn int(n: usize, v: i64) -> CliffordNumber {
        CliffordNumber::scalar(dim(n), v.into())
    }

    #[test]
    fn linear_examples() {
        let minus = GaussianRational::from_int(-1);
        assert!(e(2, &[1]).linear(&e(2, &[1]), &minus).unwrap().is_zero());

        let got = int(2, 1).linear(&e(2, &[1]), &GaussianRational::i()).unwrap();
        let want = CliffordNumber::from_terms(
            dim(2),
            [(Blade::SCALAR, 1.into()), (Blade::generator(1), GaussianRational::i())],
        )
        .unwrap();
        assert_eq!(got, want);

        let a = &e(2, &[1]).scale(&2.into()) + &e(2, &[2]);
        assert_eq!(a.linear(&e(2, &[2]), &minus).unwrap(), e(2, &[1]).scale(&2.into()));
    }

    #[test]
    fn mul_examples() {
        let e12 = e(2, &[1, 2]);
        assert_eq!(&e12 * &e12, int(2, -1));
        let lam = &e12 + &int(2, 3);
        assert_eq!(&int(2, 1) * &lam, lam);
        let p = &int(1, 1) + &e(1, &[1]);
        let m = &int(1, 1) - &e(1, &[1]);
        assert_eq!(&p * &m, int(1, 2));
    }

    #[test]
    fn dimension_mismatch() {
        assert_eq!(
            int(2, 1).try_mul(&int(3, 1)),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert!(int(2, 1).linear(&int(3, 1), &1.into()).is_err());
        assert!(int(2, 1).inner(&int(3, 1)).is_err());
    }

    #[test]
    fn grade_parts() {
        let lam = &(&int(2, 1) + &e(2, &[1]).scale(&2.into())) + &e(2, &[1, 2]).scale(&3.into());
        assert_eq!(lam.grade_part(0), int(2, 1));
        assert_eq!(lam.grade_part(2), e(2, &[1, 2]).scale(&3.into()));
        assert!(lam.grade_part(5).is_zero());
        assert!(CliffordNumber::zero(dim(2)).grade_part(1).is_zero());
    }

    #[test]
    fn conj_examples() {
        assert_eq!(e(2, &[1]).conj(), -&e(2, &[1]));
        let i = CliffordNumber::scalar(dim(2), GaussianRational::i());
        assert_eq!(i.conj(), -&i);
        assert_eq!(e(2, &[1, 2]).conj(), -&e(2, &[1, 2]));
    }

    #[test]
    fn inner_examples() {
        let one: GaussianRational = 1.into();
        assert_eq!(e(2, &[1, 2]).inner(&e(2, &[1, 2])).unwrap(), one);
        assert!(e(2, &[1]).inner(&e(2, &[2])).unwrap().is_zero());
        assert_eq!(int(2, 1).inner(&int(2, 1)).unwrap(), one);
    }

    #[test]
    fn inner_agrees_with_product_route() {
        let n = dim(3);
        let lam = CliffordNumber::from_terms(
            n,
            [
                (Blade::from_bits(0b011), GaussianRational::from_parts((1, 2), (1, 1))),
                (Blade::from_bits(0b100), GaussianRational::from_parts((-2, 1), (0, 1))),
                (Blade::from_bits(0b111), GaussianRational::from_parts((0, 1), (3, 4))),
            ],
        )
        .unwrap();
        let mu = CliffordNumber::from_terms(
            n,
            [
                (Blade::from_bits(0b011), GaussianRational::from_parts((1, 1), (-1, 3))),
                (Blade::from_bits(0b111), GaussianRational::from_parts((5, 1), (1, 1))),
                (Blade::SCALAR, GaussianRational::from_int(7)),
            ],
        )
        .unwrap();
        let via_product = (&lam.conj() * &mu).scalar_part();
        assert_eq!(lam.inner(&mu).unwrap(), via_product);
    }
}
