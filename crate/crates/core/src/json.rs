//! Canonical JSON forms.
//!
//! ```text
//! CliffordNumber     [{"blade":[1,2],"re":"0","im":"-1/2"}, ...]
//! CliffordPolynomial {"n":2,"terms":[{"x0":1,"beta":[1,0],"coeff":<CliffordNumber>}, ...]}
//! HermiteExpansion   {"n":2,"coeffs":[{"beta":[2,0],"value":<CliffordNumber>}, ...]}
//! FockElement        {"n":2,"entries":[{"beta":[2,0],"value":<CliffordNumber>}, ...]}
//! GaussianRational   {"re":"2","im":"0"}
//! ```
//!
//! Rationals are reduced `"p/q"` strings (`"p"` for integers). Output is
//! compact and sorted, so serializing equal values gives identical bytes.
//! Parsing is strict: unsorted or repeated blade indices, repeated terms,
//! unknown fields and non-reduced rationals are all rejected.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::clifford::{format_rational, parse_rational, Blade, CliffordNumber, Dimension, GaussianRational};
use crate::error::{Error, Result};
use crate::fock::FockElement;
use crate::poly::{CliffordPolynomial, Monomial, MultiIndex};
use crate::transform::HermiteExpansion;

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct BladeTermWire {
    pub blade: Vec<usize>,
    pub re: String,
    pub im: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct GaussianWire {
    pub re: String,
    pub im: String,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct PolyTermWire {
    pub x0: u32,
    pub beta: Vec<u32>,
    pub coeff: Vec<BladeTermWire>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct PolynomialWire {
    pub n: usize,
    pub terms: Vec<PolyTermWire>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct IndexedValueWire {
    pub beta: Vec<u32>,
    pub value: Vec<BladeTermWire>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct HermiteWire {
    pub n: usize,
    pub coeffs: Vec<IndexedValueWire>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct FockWire {
    pub n: usize,
    pub entries: Vec<IndexedValueWire>,
}

pub fn gaussian_to_wire(z: &GaussianRational) -> GaussianWire {
    GaussianWire { re: format_rational(&z.re), im: format_rational(&z.im) }
}

pub fn gaussian_from_wire(w: &GaussianWire) -> Result<GaussianRational> {
    Ok(GaussianRational::new(parse_rational(&w.re)?, parse_rational(&w.im)?))
}

pub fn clifford_to_wire(c: &CliffordNumber) -> Vec<BladeTermWire> {
    c.terms()
        .map(|(b, z)| BladeTermWire { blade: b.indices(), re: format_rational(&z.re), im: format_rational(&z.im) })
        .collect()
}

pub fn clifford_from_wire(n: Dimension, terms: &[BladeTermWire]) -> Result<CliffordNumber> {
    let mut seen = BTreeSet::new();
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let blade = Blade::from_indices(&t.blade, n)?;
        if !seen.insert(blade) {
            return Err(Error::Schema(format!("blade {:?} listed twice", t.blade)));
        }
        parsed.push((blade, GaussianRational::new(parse_rational(&t.re)?, parse_rational(&t.im)?)));
    }
    CliffordNumber::from_terms(n, parsed)
}

fn multi_index(n: Dimension, beta: &[u32]) -> Result<MultiIndex> {
    if beta.len() != n.get() {
        return Err(Error::Schema(format!("beta {:?} has length {}, expected {}", beta, beta.len(), n)));
    }
    Ok(MultiIndex::new(beta.to_vec()))
}

pub fn polynomial_to_wire(f: &CliffordPolynomial) -> PolynomialWire {
    PolynomialWire {
        n: f.dim().get(),
        terms: f
            .terms()
            .map(|(m, c)| PolyTermWire { x0: m.x0, beta: m.beta.entries().to_vec(), coeff: clifford_to_wire(c) })
            .collect(),
    }
}

pub fn polynomial_from_wire(w: &PolynomialWire) -> Result<CliffordPolynomial> {
    let n = Dimension::new(w.n)?;
    let mut seen = BTreeSet::new();
    let mut terms = Vec::with_capacity(w.terms.len());
    for t in &w.terms {
        let m = Monomial::new(t.x0, multi_index(n, &t.beta)?);
        if !seen.insert(m.clone()) {
            return Err(Error::Schema(format!("monomial x0^{} x^{:?} listed twice", t.x0, t.beta)));
        }
        terms.push((m, clifford_from_wire(n, &t.coeff)?));
    }
    CliffordPolynomial::from_terms(n, terms)
}

fn indexed_from_wire(n: Dimension, items: &[IndexedValueWire]) -> Result<Vec<(MultiIndex, CliffordNumber)>> {
    let mut seen = BTreeSet::new();
    items
        .iter()
        .map(|t| {
            let beta = multi_index(n, &t.beta)?;
            if !seen.insert(beta.clone()) {
                return Err(Error::Schema(format!("beta {:?} listed twice", t.beta)));
            }
            Ok((beta, clifford_from_wire(n, &t.value)?))
        })
        .collect()
}

fn indexed_to_wire<'a, I>(items: I) -> Vec<IndexedValueWire>
where
    I: Iterator<Item = (&'a MultiIndex, &'a CliffordNumber)>,
{
    items.map(|(b, c)| IndexedValueWire { beta: b.entries().to_vec(), value: clifford_to_wire(c) }).collect()
}

pub fn hermite_to_wire(h: &HermiteExpansion) -> HermiteWire {
    HermiteWire { n: h.dim().get(), coeffs: indexed_to_wire(h.coeffs()) }
}

pub fn hermite_from_wire(w: &HermiteWire) -> Result<HermiteExpansion> {
    let n = Dimension::new(w.n)?;
    HermiteExpansion::from_terms(n, indexed_from_wire(n, &w.coeffs)?)
}

pub fn fock_to_wire(a: &FockElement) -> FockWire {
    FockWire { n: a.dim().get(), entries: indexed_to_wire(a.entries()) }
}

pub fn fock_from_wire(w: &FockWire) -> Result<FockElement> {
    let n = Dimension::new(w.n)?;
    FockElement::from_entries(n, indexed_from_wire(n, &w.entries)?)
}

/// Objects with a canonical JSON text form.
pub trait JsonForm: Sized {
    fn to_json(&self) -> String;
    fn from_json(s: &str) -> Result<Self>;
}

fn compact<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("wire types always serialize")
}

impl JsonForm for CliffordPolynomial {
    fn to_json(&self) -> String {
        compact(&polynomial_to_wire(self))
    }
    fn from_json(s: &str) -> Result<Self> {
        polynomial_from_wire(&serde_json::from_str(s)?)
    }
}

impl JsonForm for HermiteExpansion {
    fn to_json(&self) -> String {
        compact(&hermite_to_wire(self))
    }
    fn from_json(s: &str) -> Result<Self> {
        hermite_from_wire(&serde_json::from_str(s)?)
    }
}

impl JsonForm for FockElement {
    fn to_json(&self) -> String {
        compact(&fock_to_wire(self))
    }
    fn from_json(s: &str) -> Result<Self> {
        fock_from_wire(&serde_json::from_str(s)?)
    }
}

impl JsonForm for GaussianRational {
    fn to_json(&self) -> String {
        compact(&gaussian_to_wire(self))
    }
    fn from_json(s: &str) -> Result<Self> {
        gaussian_from_wire(&serde_json::from_str(s)?)
    }
}

impl CliffordNumber {
    pub fn to_json(&self) -> String {
        compact(&clifford_to_wire(self))
    }

    /// Parses a standalone Clifford number; the dimension is not part of
    /// the wire form and must be supplied.
    pub fn from_json(n: Dimension, s: &str) -> Result<Self> {
        let terms: Vec<BladeTermWire> = serde_json::from_str(s)?;
        clifford_from_wire(n, &terms)
    }
}

/// Polynomial or Hermite expansion, told apart by their top-level key.
#[derive(Debug, Clone)]
pub enum TransformInput {
    Polynomial(CliffordPolynomial),
    Hermite(HermiteExpansion),
}

pub fn parse_transform_input(s: &str) -> Result<TransformInput> {
    let v: serde_json::Value = serde_json::from_str(s)?;
    if v.get("coeffs").is_some() {
        Ok(TransformInput::Hermite(hermite_from_wire(&serde_json::from_value(v)?)?))
    } else {
        Ok(TransformInput::Polynomial(polynomial_from_wire(&serde_json::from_value(v)?)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::p_basis;
    use proptest::prelude::*;

    fn dim(n: usize) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn clifford_schema_instance() {
        let n = dim(2);
        let lam = CliffordNumber::from_terms(
            n,
            [
                (Blade::generator(1), GaussianRational::from_int(1)),
                (Blade::from_bits(0b11), GaussianRational::from_parts((0, 1), (-1, 2))),
            ],
        )
        .unwrap();
        assert_eq!(lam.to_json(), r#"[{"blade":[1],"re":"1","im":"0"},{"blade":[1,2],"re":"0","im":"-1/2"}]"#);
        assert_eq!(CliffordNumber::from_json(n, &lam.to_json()).unwrap(), lam);
    }

    #[test]
    fn polynomial_round_trip() {
        let p = p_basis(dim(2), &[2, 0].into()).unwrap();
        let s = p.to_json();
        assert_eq!(
            s,
            concat!(
                r#"{"n":2,"terms":[{"x0":0,"beta":[2,0],"coeff":[{"blade":[],"re":"1","im":"0"}]},"#,
                r#"{"x0":1,"beta":[1,0],"coeff":[{"blade":[1],"re":"-2","im":"0"}]},"#,
                r#"{"x0":2,"beta":[0,0],"coeff":[{"blade":[],"re":"-1","im":"0"}]}]}"#
            )
        );
        assert_eq!(CliffordPolynomial::from_json(&s).unwrap(), p);
    }

    #[test]
    fn rejects_noncanonical_input() {
        let n = dim(2);
        let unsorted = r#"[{"blade":[2,1],"re":"1","im":"0"}]"#;
        let err = CliffordNumber::from_json(n, unsorted).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let dup = r#"[{"blade":[1],"re":"1","im":"0"},{"blade":[1],"re":"1","im":"0"}]"#;
        assert!(matches!(CliffordNumber::from_json(n, dup), Err(Error::Schema(_))));
        let unreduced = r#"[{"blade":[1],"re":"2/4","im":"0"}]"#;
        assert!(matches!(CliffordNumber::from_json(n, unreduced), Err(Error::MalformedRational(_))));
        let out_of_range = r#"[{"blade":[3],"re":"1","im":"0"}]"#;
        assert!(CliffordNumber::from_json(n, out_of_range).is_err());
        let extra = r#"[{"blade":[1],"re":"1","im":"0","x":1}]"#;
        assert!(CliffordNumber::from_json(n, extra).is_err());

        let bad_len = r#"{"n":2,"terms":[{"x0":0,"beta":[1],"coeff":[]}]}"#;
        assert_eq!(CliffordPolynomial::from_json(bad_len).unwrap_err().exit_code(), 2);
        let dup_term = r#"{"n":1,"terms":[{"x0":0,"beta":[1],"coeff":[]},{"x0":0,"beta":[1],"coeff":[]}]}"#;
        assert!(CliffordPolynomial::from_json(dup_term).is_err());
        let zero_dim = r#"{"n":0,"terms":[]}"#;
        assert_eq!(CliffordPolynomial::from_json(zero_dim).unwrap_err(), Error::InvalidDimension(0));
    }

    #[test]
    fn term_order_irrelevant_on_input() {
        let a = r#"{"n":1,"terms":[{"x0":1,"beta":[0],"coeff":[{"blade":[1],"re":"-1","im":"0"}]},{"x0":0,"beta":[1],"coeff":[{"blade":[],"re":"1","im":"0"}]}]}"#;
        let f = CliffordPolynomial::from_json(a).unwrap();
        assert_eq!(f, p_basis(dim(1), &[1].into()).unwrap());
        assert_ne!(f.to_json(), a);
    }

    #[test]
    fn transform_input_detection() {
        let h = r#"{"n":1,"coeffs":[{"beta":[1],"value":[{"blade":[],"re":"1","im":"0"}]}]}"#;
        assert!(matches!(parse_transform_input(h).unwrap(), TransformInput::Hermite(_)));
        let p = r#"{"n":1,"terms":[]}"#;
        assert!(matches!(parse_transform_input(p).unwrap(), TransformInput::Polynomial(_)));
    }

    fn small_gaussian() -> impl Strategy<Value = GaussianRational> {
        (-9i64..=9, 1i64..=9, -9i64..=9, 1i64..=9).prop_map(|(a, b, c, d)| GaussianRational::from_parts((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn polynomial_json_round_trip(
            terms in proptest::collection::vec((0u32..3, proptest::collection::vec(0u32..4, 3), 0u16..8, small_gaussian()), 0..8)
        ) {
            let n = dim(3);
            let f = CliffordPolynomial::from_terms(
                n,
                terms.into_iter().map(|(k, b, bl, c)| (Monomial::new(k, b.into()), CliffordNumber::term(n, Blade::from_bits(bl), c))),
            ).unwrap();
            let s = f.to_json();
            let back = CliffordPolynomial::from_json(&s).unwrap();
            prop_assert_eq!(back.to_json(), s);
            prop_assert_eq!(back, f);
        }

        #[test]
        fn fock_json_round_trip(
            entries in proptest::collection::vec((proptest::collection::vec(0u32..4, 2), 0u16..4, small_gaussian()), 0..6)
        ) {
            let n = dim(2);
            let a = FockElement::from_entries(
                n,
                entries.into_iter().map(|(b, bl, c)| (b.into(), CliffordNumber::term(n, Blade::from_bits(bl), c))),
            ).unwrap();
            prop_assert_eq!(FockElement::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
