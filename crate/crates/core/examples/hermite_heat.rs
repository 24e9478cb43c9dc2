//! Hermite polynomials as the inverse heat flow of monomials, and their
//! orthogonality under the standard Gaussian.

use monogenic::clifford::Dimension;
use num_traits::Zero;
use monogenic::gauss::inner_rho;
use monogenic::poly::{CliffordPolynomial, MultiIndex};
use monogenic::transform::{heat, hermite, HeatDirection};

fn main() -> monogenic::error::Result<()> {
    let n = Dimension::new(2)?;
    let betas = MultiIndex::up_to_order(2, 3);
    for beta in &betas {
        let h = hermite(n, beta)?;
        let back = heat(&h, HeatDirection::Forward);
        assert_eq!(back, CliffordPolynomial::x_pow(n, beta)?);
        println!("H_{beta} = {h}   ‖H‖²_ρ = {}", inner_rho(&h, &h)?);
    }
    let off: usize = betas
        .iter()
        .flat_map(|a| betas.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a != b && !inner_rho(&hermite(n, a).unwrap(), &hermite(n, b).unwrap()).unwrap().is_zero())
        .count();
    println!("nonzero off-diagonal ρ-pairings: {off}");
    Ok(())
}
