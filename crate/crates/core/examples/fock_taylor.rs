//! The Taylor map into Fock space and its inverse.

use monogenic::clifford::{CliffordNumber, Dimension};
use monogenic::fock::{derivative_at_origin, fock_to_monogenic, taylor_map};
use monogenic::poly::MultiIndex;
use monogenic::transform::{p_basis, p_span};

fn main() -> monogenic::error::Result<()> {
    let n = Dimension::new(2)?;
    let e2 = CliffordNumber::generator(n, 2)?;
    let big = p_span(n, [(MultiIndex::from([2, 0]), CliffordNumber::one(n)), (MultiIndex::from([0, 1]), e2)])?;

    let alpha = taylor_map(&big)?;
    println!("F        = {big}");
    for (beta, c) in alpha.entries() {
        println!("  α(e^{beta}) = {c}   (direct ∂^β F(0,0) = {})", derivative_at_origin(&big, beta)?);
    }
    println!("‖α‖²     = {}", alpha.norm_sq());
    assert_eq!(fock_to_monogenic(&alpha), big);

    let p11 = p_basis(n, &MultiIndex::from([1, 1]))?;
    for (beta, c) in taylor_map(&p11)?.entries() {
        println!("taylor(P_(1,1)): α(e^{beta}) = {c}");
    }
    Ok(())
}
