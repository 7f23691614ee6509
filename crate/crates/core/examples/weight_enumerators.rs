//! All four enumerators of a code, and how they specialize.

use lcodes::catalog;
use lcodes::enumerators::{all_enumerators, euclid_from_swe, hamming_from_swe};

fn main() -> lcodes::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Upsilon3".into());
    let code = catalog::named(&name)?;
    let e = all_enumerators(&code)?;
    println!("{name}");
    println!("  cwe     {}", e.cwe);
    println!("  swe     {}", e.swe);
    println!("  hamming {}", e.hamming);
    println!("  euclid  {}", e.euclid);
    assert_eq!(hamming_from_swe(&e.swe), e.hamming);
    assert_eq!(euclid_from_swe(&e.swe), e.euclid);
    Ok(())
}
