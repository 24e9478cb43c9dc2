//! Canonical JSON for Clifford numbers, polynomials and Fock elements.

use monogenic::clifford::{CliffordNumber, Dimension, GaussianRational};
use monogenic::fock::taylor_map;
use monogenic::json::JsonForm;
use monogenic::poly::{CliffordPolynomial, MultiIndex};
use monogenic::transform::p_basis;

fn main() -> monogenic::error::Result<()> {
    let n = Dimension::new(2)?;
    let e1 = CliffordNumber::generator(n, 1)?;
    let e12 = &e1 * &CliffordNumber::generator(n, 2)?;
    let lam = &e1 - &e12.scale(&GaussianRational::from_parts((0, 1), (1, 2)));
    println!("{}", lam.to_json());

    let p20 = p_basis(n, &MultiIndex::from([2, 0]))?;
    let text = p20.to_json();
    println!("{text}");
    assert_eq!(CliffordPolynomial::from_json(&text)?, p20);
    println!("{}", taylor_map(&p20)?.to_json());

    let bad = r#"[{"blade":[2,1],"re":"1","im":"0"}]"#;
    match CliffordNumber::from_json(n, bad) {
        Err(e) => println!("rejected: {e} (exit code {})", e.exit_code()),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
