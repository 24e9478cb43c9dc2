//! Command-line front end: argument parsing, input loading and rendering.
//!
//! The binary is a thin wrapper over [`execute`], which returns the rendered
//! output and the process exit code so the whole surface is testable
//! in-process.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::clifford::{format_rational, CliffordNumber, Dimension, GaussianRational};
use crate::error::{Error, Result};
use crate::fock::{fock_to_monogenic, taylor_map, FockElement};
use crate::gauss::GaussianMeasure;
use crate::json::{parse_transform_input, JsonForm, TransformInput};
use crate::poly::{CliffordPolynomial, DegreeLimit, MultiIndex};
use crate::transform::{ck_extend, hermite, p_basis, sb_inverse, sb_transform, HermiteExpansion};
use crate::verify::{self, VerifyParams};

#[derive(Parser, Debug)]
#[command(name = "monogenic", version, about = "Exact Clifford-valued Segal-Bargmann and Taylor transforms")]
pub struct Cli {
    /// Output format; JSON is the format of record.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Rho,
    Mu,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hermite polynomial H_β.
    Hermite(IndexArgs),
    /// Monogenic basis polynomial P_β.
    Pbasis(IndexArgs),
    /// Cauchy-Kowalevski extension of an x₀-free polynomial.
    Ck(InputArgs),
    /// Segal-Bargmann transform of a polynomial or Hermite expansion.
    Transform(InputArgs),
    /// Inverse transform of a monogenic polynomial.
    Inverse(InputArgs),
    /// Taylor map of a monogenic polynomial into Fock space.
    Taylor(InputArgs),
    /// Monogenic polynomial with the given Fock-space Taylor data.
    FockInverse(InputArgs),
    /// Gaussian inner product of two polynomials.
    Inner(InnerArgs),
    /// Run the seeded verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct IndexArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated multi-index, e.g. `2,0`.
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    pub beta: Vec<u32>,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// JSON file, or `-` for stdin.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct InnerArgs {
    #[arg(long, value_enum)]
    pub measure: Measure,
    #[arg(long)]
    pub lhs: PathBuf,
    #[arg(long)]
    pub rhs: PathBuf,
    /// Report the whole Clifford-valued pairing instead of its scalar part.
    #[arg(long)]
    pub full: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 4)]
    pub max_degree: u32,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

/// Rendered output plus the exit code it should produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, exit_code: 0 }
    }
}

/// Left-aligned plain-text table with a header rule.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    out.push_str(&line(widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn fmt_index(beta: &MultiIndex) -> String {
    beta.to_string()
}

fn clifford_rows(prefix: &[String], c: &CliffordNumber) -> Vec<Vec<String>> {
    c.terms()
        .map(|(b, z)| {
            let mut row = prefix.to_vec();
            row.extend([b.to_string(), format_rational(&z.re), format_rational(&z.im)]);
            row
        })
        .collect()
}

/// A result value of any subcommand except `verify`.
enum Value {
    Polynomial(CliffordPolynomial),
    Fock(FockElement),
    Scalar(GaussianRational),
    Clifford(CliffordNumber),
}

impl Value {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = match self {
                    Value::Polynomial(f) => f.to_json(),
                    Value::Fock(a) => a.to_json(),
                    Value::Scalar(z) => z.to_json(),
                    Value::Clifford(c) => c.to_json(),
                };
                s.push('\n');
                s
            }
            Format::Text => match self {
                Value::Polynomial(f) => {
                    let rows: Vec<_> =
                        f.terms().flat_map(|(m, c)| clifford_rows(&[m.x0.to_string(), fmt_index(&m.beta)], c)).collect();
                    format!("n = {}\n", f.dim()) + &table(&["x0", "beta", "blade", "re", "im"], &rows)
                }
                Value::Fock(a) => {
                    let rows: Vec<_> = a.entries().flat_map(|(b, c)| clifford_rows(&[fmt_index(b)], c)).collect();
                    format!("n = {}\n", a.dim()) + &table(&["beta", "blade", "re", "im"], &rows)
                }
                Value::Scalar(z) => table(&["re", "im"], &[vec![format_rational(&z.re), format_rational(&z.im)]]),
                Value::Clifford(c) => table(&["blade", "re", "im"], &clifford_rows(&[], c)),
            },
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_polynomial(path: &PathBuf, limit: DegreeLimit) -> Result<CliffordPolynomial> {
    let f = CliffordPolynomial::from_json(&read_input(path)?)?;
    limit.check(&f)?;
    Ok(f)
}

fn index_arg(args: &IndexArgs, limit: DegreeLimit) -> Result<(Dimension, MultiIndex)> {
    let n = Dimension::new(args.n)?;
    let beta = MultiIndex::new(args.beta.clone());
    if beta.len() != n.get() {
        return Err(Error::ArityMismatch { expected: n.get(), got: beta.len() });
    }
    limit.check_degree(beta.order())?;
    Ok((n, beta))
}

fn compute(command: &Command, limit: DegreeLimit) -> Result<Value> {
    Ok(match command {
        Command::Hermite(a) => {
            let (n, beta) = index_arg(a, limit)?;
            Value::Polynomial(hermite(n, &beta)?)
        }
        Command::Pbasis(a) => {
            let (n, beta) = index_arg(a, limit)?;
            Value::Polynomial(p_basis(n, &beta)?)
        }
        Command::Ck(a) => Value::Polynomial(ck_extend(&load_polynomial(&a.input, limit)?)?),
        Command::Transform(a) => {
            let f = match parse_transform_input(&read_input(&a.input)?)? {
                TransformInput::Polynomial(f) => {
                    limit.check(&f)?;
                    sb_transform(&f)?
                }
                TransformInput::Hermite(h) => {
                    limit.check_degree(h.degree())?;
                    HermiteExpansion::transform(&h)?
                }
            };
            Value::Polynomial(f)
        }
        Command::Inverse(a) => Value::Polynomial(sb_inverse(&load_polynomial(&a.input, limit)?)?),
        Command::Taylor(a) => Value::Fock(taylor_map(&load_polynomial(&a.input, limit)?)?),
        Command::FockInverse(a) => {
            let alpha = FockElement::from_json(&read_input(&a.input)?)?;
            limit.check_degree(alpha.max_grade())?;
            Value::Polynomial(fock_to_monogenic(&alpha))
        }
        Command::Inner(a) => {
            let f = load_polynomial(&a.lhs, limit)?;
            let g = load_polynomial(&a.rhs, limit)?;
            f.dim().check_same(g.dim())?;
            let m = match a.measure {
                Measure::Rho => GaussianMeasure::rho(f.dim()),
                Measure::Mu => GaussianMeasure::mu_tilde(f.dim()),
            };
            if a.full {
                Value::Clifford(m.clifford_pairing(&f, &g)?)
            } else {
                Value::Scalar(m.inner(&f, &g)?)
            }
        }
        Command::Verify(_) => unreachable!("handled by execute"),
    })
}

/// Runs one parsed invocation. Errors carry their own exit code via
/// [`Error::exit_code`]; a failing verification report is an `Ok` outcome
/// with exit code 1.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    if let Command::Verify(v) = &cli.command {
        let report = verify::run(VerifyParams { n: v.n, max_degree: v.max_degree, trials: v.trials, seed: v.seed })?;
        let text = match cli.format {
            Format::Json => report.to_json() + "\n",
            Format::Text => report.to_text(),
        };
        return Ok(Outcome { text, exit_code: if report.passed { 0 } else { 1 } });
    }
    let limit = DegreeLimit::from_env()?;
    Ok(Outcome::ok(compute(&cli.command, limit)?.render(cli.format)))
}

/// [`execute`] plus output routing; returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = execute(cli).and_then(|out| {
        match &cli.output {
            Some(path) => std::fs::write(path, &out.text)?,
            None => print!("{}", out.text),
        }
        Ok(out.exit_code)
    });
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    })
}
