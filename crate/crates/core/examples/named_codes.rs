//! Builds the named codes and prints their basic invariants.

use lcodes::catalog;
use lcodes::enumerators::swe;
use lcodes::symmetry::aut_group;

fn main() -> lcodes::Result<()> {
    let names = [
        "Gamma1", "Xi1", "Delta_3", "DeltaPlus_4", "Upsilon2", "Upsilon3", "Sigma_4", "J_3",
        "P3", "Q3", "D_6", "Gamma1^2 Xi1",
    ];
    for name in names {
        let code = catalog::named(name)?;
        println!(
            "{name:<14} n={} dim={:<4} self-dual={:<5} even={:<5} |Aut|={:<6} swe={}",
            code.len(),
            code.dimension_text(),
            code.is_self_dual(),
            code.is_even(),
            aut_group(&code)?.order(),
            swe(&code)?
        );
    }
    println!();
    print!("{}", catalog::hexacode().to_text());
    Ok(())
}
