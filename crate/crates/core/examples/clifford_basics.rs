//! Geometric products, grades, conjugation and the scalar inner product in C_3.

use monogenic::clifford::{Blade, CliffordNumber, Dimension, GaussianRational};

fn main() -> monogenic::error::Result<()> {
    let n = Dimension::new(3)?;
    let e1 = CliffordNumber::generator(n, 1)?;
    let e2 = CliffordNumber::generator(n, 2)?;
    let e3 = CliffordNumber::generator(n, 3)?;

    println!("e1 e1       = {}", &e1 * &e1);
    println!("e1 e2       = {}", &e1 * &e2);
    println!("e2 e1       = {}", &e2 * &e1);
    let pseudo = &(&e1 * &e2) * &e3;
    println!("e1 e2 e3    = {pseudo}, squared {}", &pseudo * &pseudo);

    let half_i = GaussianRational::from_parts((0, 1), (1, 2));
    let lam = &CliffordNumber::one(n) + &(&e1 * &e2).scale(&half_i);
    println!("λ           = {lam}");
    println!("conj(λ)     = {}", lam.conj());
    println!("[λ]_2       = {}", lam.grade_part(2));
    println!("|λ|²        = {}", lam.norm_sq());
    println!("(λ, e12)    = {}", lam.inner(&CliffordNumber::blade(n, Blade::from_indices(&[1, 2], n)?))?);
    Ok(())
}
