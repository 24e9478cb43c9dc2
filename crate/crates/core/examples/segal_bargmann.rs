//! The transform Ũ on Hermite expansions: its image, its inverse, and how
//! the two Gaussian norms compare in one and two variables.

use monogenic::clifford::{CliffordNumber, Dimension, GaussianRational};
use monogenic::gauss::{inner_mu, inner_rho};
use monogenic::poly::MultiIndex;
use monogenic::transform::{sb_inverse, HermiteExpansion};

fn show(f: &HermiteExpansion) -> monogenic::error::Result<()> {
    let big = f.transform()?;
    let poly = f.to_polynomial()?;
    println!("  f        = {poly}");
    println!("  Ũf       = {big}");
    println!("  ‖f‖²_ρ   = {}", inner_rho(&poly, &poly)?);
    println!("  ‖Ũf‖²_μ̃  = {}", inner_mu(&big, &big)?);
    assert_eq!(sb_inverse(&big)?, poly);
    Ok(())
}

fn main() -> monogenic::error::Result<()> {
    let one = Dimension::new(1)?;
    let e1 = CliffordNumber::generator(one, 1)?;
    let f = HermiteExpansion::from_terms(
        one,
        [
            (MultiIndex::from([1]), e1.clone()),
            (MultiIndex::from([3]), CliffordNumber::scalar(one, GaussianRational::from_parts((1, 2), (1, 1)))),
        ],
    )?;
    println!("n = 1 (norms agree):");
    show(&f)?;

    let two = Dimension::new(2)?;
    let f = HermiteExpansion::from_terms(two, [(MultiIndex::from([1, 1]), CliffordNumber::one(two))])?;
    println!("n = 2 (norms differ for mixed indices):");
    show(&f)?;
    Ok(())
}
