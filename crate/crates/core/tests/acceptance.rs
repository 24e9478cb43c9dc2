//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --release --test acceptance -- --nocapture` to see
//! the lines; the test fails if any criterion fails. Reference values come
//! from closed forms or from the small oracles defined below, never from
//! the code path under test.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use monogenic::clifford::{Blade, CliffordNumber, Dimension, GaussianRational};
use monogenic::fock::{derivative_at_origin, fock_norm_sq, fock_to_monogenic, taylor_map};
use monogenic::gauss::{inner_mu, inner_rho, GaussianMeasure};
use monogenic::poly::{CliffordPolynomial, Monomial, MultiIndex};
use monogenic::random::Sampler;
use monogenic::transform::{ck_extend, heat, hermite, p_basis, sb_inverse, sb_transform, HeatDirection, HermiteExpansion};

const SEED: u64 = 20_240_601;

fn dim(n: usize) -> Dimension {
    Dimension::new(n).unwrap()
}

fn fact(beta: &MultiIndex) -> BigRational {
    let mut acc = BigInt::one();
    for &b in beta.entries() {
        for k in 2..=b {
            acc *= k;
        }
    }
    BigRational::from_integer(acc)
}

/// Generator-word rewriting, the textbook definition of the product.
fn naive_blade(a: &[usize], b: &[usize]) -> (i8, Vec<usize>) {
    let mut w: Vec<usize> = a.iter().chain(b).copied().collect();
    let mut sign = 1i8;
    let mut changed = true;
    while changed {
        changed = false;
        let mut i = 0;
        while i + 1 < w.len() {
            if w[i] == w[i + 1] {
                w.drain(i..i + 2);
                sign = -sign;
                changed = true;
            } else if w[i] > w[i + 1] {
                w.swap(i, i + 1);
                sign = -sign;
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
    }
    (sign, w)
}

/// Probabilists' Hermite coefficients from the three-term recurrence.
fn hermite_coeffs(k: u32) -> Vec<i64> {
    let (mut a, mut b) = (vec![1i64], vec![0i64, 1]);
    if k == 0 {
        return a;
    }
    for j in 1..k as i64 {
        let mut c = vec![0i64; b.len() + 1];
        for (i, x) in b.iter().enumerate() {
            c[i + 1] += x;
        }
        for (i, x) in a.iter().enumerate() {
            c[i] -= j * x;
        }
        a = b;
        b = c;
    }
    b
}

fn hermite_oracle(n: Dimension, beta: &MultiIndex) -> CliffordPolynomial {
    let mut acc = CliffordPolynomial::one(n);
    for (axis, &k) in beta.entries().iter().enumerate() {
        let terms = hermite_coeffs(k).into_iter().enumerate().map(|(p, c)| {
            let mut e = vec![0; n.get()];
            e[axis] = p as u32;
            (Monomial::new(0, MultiIndex::new(e)), CliffordNumber::scalar(n, GaussianRational::from_int(c)))
        });
        acc = acc.try_mul(&CliffordPolynomial::from_terms(n, terms).unwrap()).unwrap();
    }
    acc
}

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(cases: usize, failures: Vec<String>) -> Self {
        match failures.first() {
            None => Outcome { ok: true, detail: format!("{cases} cases exact") },
            Some(first) => Outcome { ok: false, detail: format!("{}/{cases} cases fail; first: {first}", failures.len()) },
        }
    }
}

fn c1_algebra() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in (1..=3).map(dim) {
        for i in 1..=n.get() {
            for j in 1..=n.get() {
                let (ei, ej) = (CliffordNumber::generator(n, i).unwrap(), CliffordNumber::generator(n, j).unwrap());
                let got = &(&ei * &ej) + &(&ej * &ei);
                let want = CliffordNumber::scalar(n, GaussianRational::from_int(if i == j { -2 } else { 0 }));
                cases += 1;
                if got != want {
                    bad.push(format!("n={n} e{i}e{j}+e{j}e{i} = {got}"));
                }
            }
        }
        let blades: Vec<_> = n.blades().into_iter().map(|b| CliffordNumber::blade(n, b)).collect();
        for a in &blades {
            for b in &blades {
                for c in &blades {
                    cases += 1;
                    if &(a * b) * c != a * &(b * c) {
                        bad.push(format!("n={n} ({a}{b}){c}"));
                    }
                }
            }
        }
    }
    Outcome::from_failures(cases, bad)
}

fn c2_pbasis_table() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in (1..=3).map(dim) {
        let m = GaussianMeasure::mu_tilde(n);
        let table: Vec<_> = MultiIndex::up_to_order(n.get(), 4).into_iter().map(|b| (p_basis(n, &b).unwrap(), b)).collect();
        for (pa, a) in &table {
            for (pb, b) in &table {
                let want = if a == b { fact(b) } else { BigRational::zero() };
                cases += 2;
                let scalar = inner_mu(pa, pb).unwrap();
                if scalar != GaussianRational::real(want.clone()) {
                    bad.push(format!("<P_{a}, P_{b}>_μ̃ = {scalar}, want {want}"));
                }
                let full = m.clifford_pairing(pa, pb).unwrap();
                if full != CliffordNumber::scalar(n, GaussianRational::real(want.clone())) {
                    bad.push(format!("pairing(P_{a}, P_{b}) = {full}, want {want}"));
                }
            }
        }
    }
    Outcome::from_failures(cases, bad)
}

fn c3_hermite() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in (1..=3).map(dim) {
        for beta in MultiIndex::up_to_order(n.get(), 6) {
            let h = hermite(n, &beta).unwrap();
            cases += 2;
            if heat(&h, HeatDirection::Forward) != CliffordPolynomial::x_pow(n, &beta).unwrap() {
                bad.push(format!("n={n} e^(Δ/2)H_{beta} ≠ x^{beta}"));
            }
            let norm = inner_rho(&h, &h).unwrap();
            if norm != GaussianRational::real(fact(&beta)) {
                bad.push(format!("n={n} ‖H_{beta}‖²_ρ = {norm}"));
            }
        }
    }
    Outcome::from_failures(cases, bad)
}

fn ck_sample() -> Vec<CliffordPolynomial> {
    let mut s = Sampler::for_stream(SEED, 4);
    (0..201).map(|i| s.x0_free_polynomial(dim(1 + i % 3), 6)).collect()
}

fn c4_ck(sample: &[CliffordPolynomial]) -> Outcome {
    let mut bad = Vec::new();
    for f in sample {
        let big = ck_extend(f).unwrap();
        if !big.cauchy_riemann().is_zero() {
            bad.push(format!("(∂₀+D)ck(f) ≠ 0 for f = {f}"));
        }
        if big.restrict() != *f {
            bad.push(format!("ck(f)|₀ ≠ f for f = {f}"));
        }
    }
    Outcome::from_failures(2 * sample.len(), bad)
}

fn sb_sample() -> Vec<(HermiteExpansion, HermiteExpansion)> {
    let mut s = Sampler::for_stream(SEED, 5);
    (0..102)
        .map(|i| {
            let n = dim(1 + i % 3);
            (s.hermite_expansion(n, 4), s.hermite_expansion(n, 4))
        })
        .collect()
}

fn c5_isometry(sample: &[(HermiteExpansion, HermiteExpansion)]) -> Outcome {
    let mut bad = Vec::new();
    for (f, h) in sample {
        let (fp, hp) = (f.to_polynomial().unwrap(), h.to_polynomial().unwrap());
        let (uf, uh) = (sb_transform(&fp).unwrap(), sb_transform(&hp).unwrap());
        let lhs = inner_mu(&uf, &uh).unwrap();
        let rhs = inner_rho(&fp, &hp).unwrap();
        if lhs != rhs {
            bad.push(format!("n={} <Ũf,Ũh>_μ̃ = {lhs}, <f,h>_ρ = {rhs}", f.dim()));
        }
        if sb_inverse(&uf).unwrap() != fp {
            bad.push(format!("Ũ⁻¹Ũf ≠ f for f = {fp}"));
        }
    }
    Outcome::from_failures(2 * sample.len(), bad)
}

fn c6_taylor(sample: &[(HermiteExpansion, HermiteExpansion)]) -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for (f, _) in sample {
        let big = sb_transform(&f.to_polynomial().unwrap()).unwrap();
        let lhs = GaussianRational::real(fock_norm_sq(&taylor_map(&big).unwrap()));
        let rhs = inner_mu(&big, &big).unwrap();
        cases += 1;
        if lhs != rhs {
            bad.push(format!("n={} ‖taylor(F)‖² = {lhs}, ‖F‖²_μ̃ = {rhs}", f.dim()));
        }
    }
    let mut s = Sampler::for_stream(SEED, 6);
    for i in 0..100 {
        let alpha = s.fock_element(dim(1 + i % 3), 4);
        cases += 1;
        if taylor_map(&fock_to_monogenic(&alpha)).unwrap() != alpha {
            bad.push(format!("taylor∘fock_to_monogenic ≠ id at {alpha:?}"));
        }
    }
    for n in (1..=3).map(dim) {
        let idx = MultiIndex::up_to_order(n.get(), 4);
        for beta in &idx {
            let p = p_basis(n, beta).unwrap();
            for gamma in &idx {
                let want = if beta == gamma { fact(beta) } else { BigRational::zero() };
                cases += 1;
                if derivative_at_origin(&p, gamma).unwrap() != CliffordNumber::scalar(n, GaussianRational::real(want)) {
                    bad.push(format!("∂^{gamma} P_{beta}(0,0) wrong"));
                }
            }
        }
    }
    Outcome::from_failures(cases, bad)
}

fn c7_triad(sample: &[(HermiteExpansion, HermiteExpansion)]) -> Outcome {
    let mut bad = Vec::new();
    for (f, _) in sample {
        let fp = f.to_polynomial().unwrap();
        let lhs = GaussianRational::real(fock_norm_sq(&taylor_map(&sb_transform(&fp).unwrap()).unwrap()));
        let rhs = inner_rho(&fp, &fp).unwrap();
        if lhs != rhs {
            bad.push(format!("‖taylor(Ũf)‖² = {lhs}, ‖f‖²_ρ = {rhs}"));
        }
    }
    Outcome::from_failures(sample.len(), bad)
}

fn c8_oracles(ck: &[CliffordPolynomial]) -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in (1..=4).map(dim) {
        for a in n.blades() {
            for b in n.blades() {
                let (s, w) = naive_blade(&a.indices(), &b.indices());
                cases += 1;
                if a.product(b) != (s, Blade::from_indices(&w, n).unwrap()) {
                    bad.push(format!("sign {a}·{b}"));
                }
            }
        }
    }
    for n in (1..=3).map(dim) {
        for beta in MultiIndex::up_to_order(n.get(), 6) {
            let via_heat = heat(&CliffordPolynomial::x_pow(n, &beta).unwrap(), HeatDirection::Inverse);
            cases += 1;
            if via_heat != hermite_oracle(n, &beta) {
                bad.push(format!("H_{beta} heat vs recurrence"));
            }
        }
    }
    for f in ck {
        cases += 1;
        if f.dirac().dirac() != -&f.laplacian() {
            bad.push(format!("D²f ≠ −Δf for f = {f}"));
        }
    }
    Outcome::from_failures(cases, bad)
}

#[test]
fn acceptance_criteria() {
    let ck = ck_sample();
    let sb = sb_sample();
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("1 algebra relations", Duration::from_secs(5), Box::new(c1_algebra)),
        ("2 P_β orthogonality table", Duration::from_secs(60), Box::new(c2_pbasis_table)),
        ("3 Hermite identities", Duration::from_secs(30), Box::new(c3_hermite)),
        ("4 C-K monogenicity", Duration::from_secs(60), Box::new(|| c4_ck(&ck))),
        ("5 Segal-Bargmann isometry", Duration::from_secs(120), Box::new(|| c5_isometry(&sb))),
        ("6 Taylor isometry", Duration::from_secs(120), Box::new(|| c6_taylor(&sb))),
        ("7 triad closure", Duration::from_secs(30), Box::new(|| c7_triad(&sb))),
        ("8 oracle equivalence", Duration::from_secs(120), Box::new(|| c8_oracles(&ck))),
    ];
    let mut failed = Vec::new();
    for (name, budget, check) in &criteria {
        let start = Instant::now();
        let mut out = check();
        let took = start.elapsed();
        if took > *budget {
            out.ok = false;
            out.detail = format!("{} (over budget {budget:?})", out.detail);
        }
        println!("{} criterion {name}: {} [{took:.2?}]", if out.ok { "PASS" } else { "FAIL" }, out.detail);
        if !out.ok {
            failed.push(*name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
