//! The verification suite behind `monogenic verify`.
//!
//! Each check exercises one family of identities by exact equality and
//! records the first witnessing input on failure. Checks run in parallel
//! on independent seeded streams; the report order is fixed.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::clifford::{CliffordNumber, Dimension, GaussianRational};
use crate::error::{Error, Result};
use crate::fock::{fock_to_monogenic, taylor_map};
use crate::gauss::{inner_mu, inner_rho, GaussianMeasure};
use crate::oracle;
use crate::poly::{CliffordPolynomial, Monomial, MultiIndex};
use crate::random::Sampler;
use crate::transform::{ck_extend, heat, hermite, p_basis, sb_inverse, sb_transform, HeatDirection};

pub const MAX_VERIFY_DIMENSION: usize = 3;
pub const MAX_VERIFY_DEGREE: u32 = 6;
pub const MAX_VERIFY_TRIALS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub n: usize,
    pub max_degree: u32,
    pub trials: usize,
    pub seed: u64,
}

impl VerifyParams {
    pub fn validate(&self) -> Result<Dimension> {
        if self.n == 0 || self.n > MAX_VERIFY_DIMENSION {
            return Err(Error::ParameterBound(format!("n = {} outside 1..={MAX_VERIFY_DIMENSION}", self.n)));
        }
        if self.max_degree > MAX_VERIFY_DEGREE {
            return Err(Error::ParameterBound(format!("max_degree = {} exceeds {MAX_VERIFY_DEGREE}", self.max_degree)));
        }
        if self.trials > MAX_VERIFY_TRIALS {
            return Err(Error::ParameterBound(format!("trials = {} exceeds {MAX_VERIFY_TRIALS}", self.trials)));
        }
        Dimension::new(self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub params: VerifyParams,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<&'static str>,
    pub checks: Vec<CheckResult>,
    pub wall_time_ms: u64,
}

impl VerifyReport {
    /// Report JSON with the timing field zeroed, for reproducibility checks.
    pub fn to_json_without_timing(&self) -> String {
        let mut r = self.clone();
        r.wall_time_ms = 0;
        serde_json::to_string(&r).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .checks
            .iter()
            .map(|c| {
                vec![
                    c.name.to_string(),
                    match c.status {
                        Status::Pass => "pass".into(),
                        Status::Fail => "FAIL".into(),
                    },
                    c.cases.to_string(),
                    c.failures.to_string(),
                    c.witness.clone().unwrap_or_default(),
                ]
            })
            .collect();
        let mut out = format!(
            "suite {} n={} max_degree={} trials={} seed={}\n",
            self.suite, self.params.n, self.params.max_degree, self.params.trials, self.params.seed
        );
        out.push_str(&crate::cli::table(&["check", "status", "cases", "failures", "witness"], &rows));
        out.push_str(&format!(
            "{} ({} ms)\n",
            if self.passed { "all checks passed".to_string() } else { format!("first failure: {}", self.first_failure.unwrap_or("?")) },
            self.wall_time_ms
        ));
        out
    }
}

/// Tally of one identity family.
struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    witness: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, failures: 0, witness: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            status: if self.failures == 0 { Status::Pass } else { Status::Fail },
            cases: self.cases,
            failures: self.failures,
            witness: self.witness,
        }
    }
}

fn factorial_q(beta: &MultiIndex) -> BigRational {
    BigRational::from_integer(BigInt::from(beta.factorial()))
}

fn delta_factorial(alpha: &MultiIndex, beta: &MultiIndex) -> GaussianRational {
    if alpha == beta {
        GaussianRational::real(factorial_q(beta))
    } else {
        GaussianRational::default()
    }
}

/// The names of every check, in report order.
pub const CHECKS: [&str; 10] = [
    "algebra-relations",
    "dirac-squared-is-minus-laplacian",
    "ck-monogenic-and-restriction",
    "hermite-identities",
    "pbasis-orthogonality",
    "pbasis-full-pairing",
    "sb-isometry",
    "taylor-isometry",
    "round-trips",
    "triad-closure",
];

struct Ctx {
    n: Dimension,
    params: VerifyParams,
}

impl Ctx {
    fn sampler(&self, stream: u64) -> Sampler {
        Sampler::for_stream(self.params.seed, stream)
    }
}

fn algebra_relations(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(CHECKS[0]);
    let n = ctx.n;
    for i in 1..=n.get() {
        for j in 1..=n.get() {
            let ei = CliffordNumber::generator(n, i).expect("in range");
            let ej = CliffordNumber::generator(n, j).expect("in range");
            let anti = &(&ei * &ej) + &(&ej * &ei);
            let want = CliffordNumber::scalar(n, if i == j { (-2).into() } else { 0.into() });
            t.record(anti == want, || format!("e{i}e{j} + e{j}e{i} = {anti}"));
        }
    }
    let blades = n.blades();
    for &a in &blades {
        for &b in &blades {
            let p = a.product(b);
            t.record(p == oracle::naive_blade_product(a, b), || format!("sign of {a}·{b}"));
            for &c in &blades {
                let (s1, ab) = p;
                let (s2, ab_c) = ab.product(c);
                let (s3, bc) = b.product(c);
                let (s4, a_bc) = a.product(bc);
                t.record((s1 * s2, ab_c) == (s3 * s4, a_bc), || format!("({a}{b}){c} ≠ {a}({b}{c})"));
            }
        }
    }
    t
}

fn dirac_squared(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(CHECKS[1]);
    let mut s = ctx.sampler(1);
    for _ in 0..ctx.params.trials {
        let f = s.polynomial(ctx.n, ctx.params.max_degree);
        let ok = f.dirac().dirac() == -&f.laplacian();
        t.record(ok, || format!("f = {f}"));
    }
    t
}

fn ck_checks(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(CHECKS[2]);
    let mut s = ctx.sampler(2);
    for _ in 0..ctx.params.trials {
        let f = s.x0_free_polynomial(ctx.n, ctx.params.max_degree);
        let big = ck_extend(&f).expect("x0-free");
        let ok = big.cauchy_riemann().is_zero() && big.restrict() == f;
        t.record(ok, || format!("f = {f}"));
    }
    t
}

fn hermite_checks(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(CHECKS[3]);
    let n = ctx.n;
    let betas = MultiIndex::up_to_order(n.get(), ctx.params.max_degree);
    let hs: Vec<CliffordPolynomial> = betas.iter().map(|b| hermite(n, b).expect("arity")).collect();
    for (beta, h) in betas.iter().zip(&hs) {
        let mono = CliffordPolynomial::x_pow(n, beta).expect("arity");
        t.record(heat(h, HeatDirection::Forward) == mono, || format!("e^(Δ/2) H_{beta} ≠ x^{beta}"));
        t.record(*h == hermite_by_recurrence(n, beta), || format!("H_{beta} disagrees with recurrence"));
    }
    for (alpha, ha) in betas.iter().zip(&hs) {
        for (beta, hb) in betas.iter().zip(&hs) {
            let got = inner_rho(ha, hb).expect("x0-free");
            let want = delta_factorial(alpha, beta);
            t.record(got == want, || format!("<H_{alpha}, H_{beta}>_ρ = {got}, want {want}"));
        }
    }
    t
}

/// `Π_i H_{β_i}(x_i)` from the three-term recurrence.
pub fn hermite_by_recurrence(n: Dimension, beta: &MultiIndex) -> CliffordPolynomial {
    let mut acc = CliffordPolynomial::one(n);
    for (axis, &b) in beta.entries().iter().enumerate() {
        let terms = oracle::hermite_1d(b).into_iter().enumerate().map(|(p, c)| {
            let mut e = vec![0u32; n.get()];
            e[axis] = p as u32;
            (Monomial::new(0, MultiIndex::new(e)), CliffordNumber::scalar(n, GaussianRational::real(BigRational::from_integer(c))))
        });
        let factor = CliffordPolynomial::from_terms(n, terms).expect("consistent");
        acc = acc.try_mul(&factor).expect("consistent");
    }
    acc
}

fn p_table(ctx: &Ctx) -> Vec<(MultiIndex, CliffordPolynomial)> {
    MultiIndex::up_to_order(ctx.n.get(), ctx.params.max_degree)
        .into_iter()
        .map(|b| {
            let p = p_basis(ctx.n, &b).expect("arity");
            (b, p)
        })
        .collect()
}

fn pbasis_scalar(table: &[(MultiIndex, CliffordPolynomial)]) -> Tally {
    let mut t = Tally::new(CHECKS[4]);
    let rows: Vec<Vec<(bool, String)>> = table
        .par_iter()
        .map(|(alpha, pa)| {
            table
                .iter()
                .map(|(beta, pb)| {
                    let got = inner_mu(pa, pb).expect("same dimension");
                    let want = delta_factorial(alpha, beta);
                    (got == want, format!("<P_{alpha}, P_{beta}>_μ̃ = {got}, want {want}"))
                })
                .collect()
        })
        .collect();
    for (ok, w) in rows.into_iter().flatten() {
        t.record(ok, || w);
    }
    t
}

fn pbasis_full(ctx: &Ctx, table: &[(MultiIndex, CliffordPolynomial)]) -> Tally {
    let mut t = Tally::new(CHECKS[5]);
    let m = GaussianMeasure::mu_tilde(ctx.n);
    let rows: Vec<Vec<(bool, String)>> = table
        .par_iter()
        .map(|(alpha, pa)| {
            table
                .iter()
                .map(|(beta, pb)| {
                    let got = m.clifford_pairing(pa, pb).expect("same dimension");
                    let want = CliffordNumber::scalar(ctx.n, delta_factorial(alpha, beta));
                    (got == want, format!("∫conj(P_{alpha})P_{beta} dμ̃ = {got}, want {want}"))
                })
                .collect()
        })
        .collect();
    for (ok, w) in rows.into_iter().flatten() {
        t.record(ok, || w);
    }
    t
}

fn sb_isometry(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(CHECKS[6]);
    let mut s = ctx.sampler(6);
    for _ in 0..ctx.params.trials {
        let f = s.hermite_expansion(ctx.n, ctx.params.max_degree);
        let h = s.hermite_expansion(ctx.n, ctx.params.max_degree);
        let (uf, uh) = (f.transform().expect("dims"), h.transform().expect("dims"));
        let lhs = inner_mu(&uf, &uh).expect("dims");
        let rhs = inner_rho(&f.to_polynomial().expect("dims"), &h.to_polynomial().expect("dims")).expect("x0-free");
        t.record(lhs == rhs, || format!("<Ũf, Ũh>_μ̃ = {lhs} vs <f, h>_ρ = {rhs}"));
    }
    t
}

fn taylor_isometry(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(CHECKS[7]);
    let mut s = ctx.sampler(7);
    for _ in 0..ctx.params.trials {
        let f = s.hermite_expansion(ctx.n, ctx.params.max_degree);
        let big = f.transform().expect("dims");
        let fock = taylor_map(&big).expect("monogenic").norm_sq();
        let mu = inner_mu(&big, &big).expect("dims").re;
        t.record(fock == mu, || format!("‖taylor(F)‖² = {fock} vs ‖F‖²_μ̃ = {mu}"));
    }
    t
}

fn round_trips(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(CHECKS[8]);
    let mut s = ctx.sampler(8);
    for _ in 0..ctx.params.trials {
        let f = s.x0_free_polynomial(ctx.n, ctx.params.max_degree);
        let uf = sb_transform(&f).expect("x0-free");
        t.record(sb_inverse(&uf).as_ref() == Ok(&f), || format!("Ũ⁻¹Ũf ≠ f for f = {f}"));

        let big = s.hermite_expansion(ctx.n, ctx.params.max_degree).transform().expect("dims");
        let back = sb_inverse(&big).and_then(|g| sb_transform(&g));
        t.record(back.as_ref() == Ok(&big), || format!("ŨŨ⁻¹F ≠ F for F = {big}"));

        let alpha = s.fock_element(ctx.n, ctx.params.max_degree);
        let mono = fock_to_monogenic(&alpha);
        t.record(taylor_map(&mono).as_ref() == Ok(&alpha), || format!("taylor∘fock_to_monogenic ≠ id at {alpha:?}"));
        let again = taylor_map(&big).map(|a| fock_to_monogenic(&a));
        t.record(again.as_ref() == Ok(&big), || format!("fock_to_monogenic∘taylor ≠ id for F = {big}"));
    }
    t
}

fn triad(ctx: &Ctx) -> Tally {
    let mut t = Tally::new(CHECKS[9]);
    let mut s = ctx.sampler(9);
    for _ in 0..ctx.params.trials {
        let f = s.hermite_expansion(ctx.n, ctx.params.max_degree);
        let fock = taylor_map(&f.transform().expect("dims")).expect("monogenic").norm_sq();
        let poly = f.to_polynomial().expect("dims");
        let rho = inner_rho(&poly, &poly).expect("x0-free").re;
        t.record(fock == rho, || format!("‖taylor(Ũf)‖² = {fock} vs ‖f‖²_ρ = {rho}"));
    }
    t
}

/// Runs every check and assembles the report.
pub fn run(params: VerifyParams) -> Result<VerifyReport> {
    let n = params.validate()?;
    let ctx = Ctx { n, params };
    let start = Instant::now();
    let table = p_table(&ctx);
    let jobs: Vec<Box<dyn Fn(&Ctx) -> Tally + Sync>> = vec![
        Box::new(algebra_relations),
        Box::new(dirac_squared),
        Box::new(ck_checks),
        Box::new(hermite_checks),
        Box::new(|_| pbasis_scalar(&table)),
        Box::new(|c| pbasis_full(c, &table)),
        Box::new(sb_isometry),
        Box::new(taylor_isometry),
        Box::new(round_trips),
        Box::new(triad),
    ];
    let checks: Vec<CheckResult> = jobs.par_iter().map(|job| job(&ctx).finish()).collect();
    let first_failure = checks.iter().find(|c| !c.passed()).map(|c| c.name);
    Ok(VerifyReport {
        suite: "monogenic-verify",
        params,
        passed: first_failure.is_none(),
        first_failure,
        checks,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, max_degree: u32, trials: usize) -> VerifyParams {
        VerifyParams { n, max_degree, trials, seed: 42 }
    }

    #[test]
    fn degenerate_run_passes() {
        let r = run(params(1, 0, 10)).unwrap();
        assert!(r.passed, "{}", r.to_text());
        assert_eq!(r.checks.iter().map(|c| c.name).collect::<Vec<_>>(), CHECKS);
    }

    #[test]
    fn one_variable_passes() {
        let r = run(params(1, 4, 20)).unwrap();
        assert!(r.passed, "{}", r.to_text());
    }

    #[test]
    fn deterministic_given_seed() {
        let a = run(params(2, 2, 10)).unwrap();
        let b = run(params(2, 2, 10)).unwrap();
        assert_eq!(a.to_json_without_timing(), b.to_json_without_timing());
    }

    #[test]
    fn two_variables_report_names_first_broken_identity() {
        let r = run(params(2, 2, 10)).unwrap();
        assert!(!r.passed);
        assert_eq!(r.first_failure, Some("pbasis-orthogonality"));
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
        assert!(failed.contains(&"pbasis-full-pairing"));
        for name in ["algebra-relations", "dirac-squared-is-minus-laplacian", "ck-monogenic-and-restriction", "hermite-identities", "round-trips", "triad-closure"] {
            assert!(r.checks.iter().any(|c| c.name == name && c.passed()), "{name} should pass");
        }
    }

    #[test]
    fn bounds_rejected() {
        assert_eq!(run(params(4, 2, 1)).unwrap_err().exit_code(), 3);
        assert_eq!(run(params(0, 2, 1)).unwrap_err().exit_code(), 3);
        assert_eq!(run(params(2, 7, 1)).unwrap_err().exit_code(), 3);
    }
}
