//! Cauchy-Kowalevski extension of an x₀-free polynomial to a monogenic one.

use monogenic::clifford::{CliffordNumber, Dimension};
use monogenic::poly::CliffordPolynomial;
use monogenic::transform::ck_extend;

fn main() -> monogenic::error::Result<()> {
    let n = Dimension::new(2)?;
    let x1 = CliffordPolynomial::coordinate(n, 1)?;
    let x2 = CliffordPolynomial::coordinate(n, 2)?;
    let e12 = &CliffordNumber::generator(n, 1)? * &CliffordNumber::generator(n, 2)?;

    let f = x1.try_mul(&x1)?.try_add(&x2.mul_right(&e12)?)?;
    let big = ck_extend(&f)?;
    println!("f          = {f}");
    println!("ck(f)      = {big}");
    println!("(∂₀+D)ck   = {}", big.cauchy_riemann());
    println!("ck(f)|x₀=0 = {}", big.restrict());
    assert!(big.is_monogenic());
    assert_eq!(big.restrict(), f);
    Ok(())
}
