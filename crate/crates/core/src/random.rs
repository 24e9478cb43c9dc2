//! Seeded generators of small random inputs for the verification suite.
//!
//! The stream is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`), so a
//! given seed reproduces the same inputs on every platform. Rationals have
//! numerators in `[-4, 4]` and denominators in `[1, 4]`, which keeps exact
//! arithmetic fast.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Blade, CliffordNumber, Dimension, GaussianRational};
use crate::fock::FockElement;
use crate::poly::{CliffordPolynomial, Monomial, MultiIndex};
use crate::transform::HermiteExpansion;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent stream for sub-task `stream` of a run seeded with `seed`,
    /// so parallel checks do not depend on execution order.
    pub fn for_stream(seed: u64, stream: u64) -> Self {
        let mixed = seed ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        Self::new(mixed)
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.gen_range(lo..=hi_inclusive)
    }

    pub fn small_rational(&mut self) -> (i64, i64) {
        (self.rng.gen_range(-4..=4), self.rng.gen_range(1..=4))
    }

    pub fn gaussian(&mut self) -> GaussianRational {
        let re = self.small_rational();
        let im = self.small_rational();
        GaussianRational::from_parts(re, im)
    }

    /// Like [`Self::gaussian`] but never zero.
    pub fn nonzero_gaussian(&mut self) -> GaussianRational {
        loop {
            let z = self.gaussian();
            if !num_traits::Zero::is_zero(&z) {
                return z;
            }
        }
    }

    pub fn blade(&mut self, n: Dimension) -> Blade {
        Blade::from_bits(self.rng.gen_range(0..(1u32 << n.get())) as u16)
    }

    /// One to three random blades with random coefficients.
    pub fn clifford(&mut self, n: Dimension) -> CliffordNumber {
        let k = self.range(1, 3);
        let terms: Vec<_> = (0..k).map(|_| (self.blade(n), self.nonzero_gaussian())).collect();
        CliffordNumber::from_terms(n, terms).expect("blades fit")
    }

    /// Uniform total order in `0..=max_order`, then a uniform composition.
    pub fn multi_index(&mut self, n: Dimension, max_order: u32) -> MultiIndex {
        let k = self.rng.gen_range(0..=max_order);
        let mut v = vec![0u32; n.get()];
        for _ in 0..k {
            let i = self.range(0, n.get() - 1);
            v[i] += 1;
        }
        MultiIndex::new(v)
    }

    /// x₀-free polynomial with up to five terms and total degree ≤ `max_degree`.
    pub fn x0_free_polynomial(&mut self, n: Dimension, max_degree: u32) -> CliffordPolynomial {
        let k = self.range(1, 5);
        let terms: Vec<_> = (0..k).map(|_| (Monomial::new(0, self.multi_index(n, max_degree)), self.clifford(n))).collect();
        CliffordPolynomial::from_terms(n, terms).expect("consistent dimension")
    }

    /// Polynomial in `x₀, x` with total degree ≤ `max_degree`.
    pub fn polynomial(&mut self, n: Dimension, max_degree: u32) -> CliffordPolynomial {
        let k = self.range(1, 5);
        let terms: Vec<_> = (0..k)
            .map(|_| {
                let beta = self.multi_index(n, max_degree);
                let x0 = self.rng.gen_range(0..=max_degree - beta.order());
                (Monomial::new(x0, beta), self.clifford(n))
            })
            .collect();
        CliffordPolynomial::from_terms(n, terms).expect("consistent dimension")
    }

    pub fn hermite_expansion(&mut self, n: Dimension, max_degree: u32) -> HermiteExpansion {
        let k = self.range(1, 4);
        let terms: Vec<_> = (0..k).map(|_| (self.multi_index(n, max_degree), self.clifford(n))).collect();
        HermiteExpansion::from_terms(n, terms).expect("consistent dimension")
    }

    pub fn fock_element(&mut self, n: Dimension, max_grade: u32) -> FockElement {
        let k = self.range(1, 4);
        let terms: Vec<_> = (0..k).map(|_| (self.multi_index(n, max_grade), self.clifford(n))).collect();
        FockElement::from_entries(n, terms).expect("consistent dimension")
    }
}
