//! The maps between L-codes, Kleinian codes and binary codes.

use lcodes::catalog;
use lcodes::enumerators::swe;
use lcodes::maps::{beta, phi, phi_inv, phi_inv_marked, psi, sigma, Marking};

fn main() -> lcodes::Result<()> {
    let c = catalog::upsilon3();
    let k = phi(&c)?;
    println!("phi(Upsilon3):\n{}", k.to_text());
    assert_eq!(phi_inv(&k)?, c);

    let d = sigma(&c)?;
    println!("sigma(Upsilon3) self-dual={} swe={}", d.is_self_dual(), swe(&d)?);
    let e = psi(&c)?;
    println!("psi(Upsilon3)   self-dual={} even={} swe={}", e.is_self_dual(), e.is_even(), swe(&e)?);
    assert_eq!(phi(&e)?, d);

    let marked = phi_inv_marked(&catalog::epsilon2(), &Marking::parse("ab")?)?;
    println!("phi_(a,b)^-1(epsilon2) even={}\n{}", marked.is_even(), marked.to_text());

    let b = beta(&c)?;
    println!("beta(Upsilon3): [{}, {}] self-orthogonal={}", b.len(), b.dimension(), b.is_self_orthogonal());
    print!("{}", b.format_rows());
    Ok(())
}
