//! The five marking classes of the hexacode and their L-codes.

use lcodes::catalog;
use lcodes::maps::{marking_classes, phi_inv_marked};
use lcodes::tables::euclid_row;

fn main() -> lcodes::Result<()> {
    let h = catalog::hexacode();
    let classes = marking_classes(&h)?;
    let total: u64 = classes.iter().map(|c| c.orbit_size).sum();
    println!("{} classes covering {total} markings", classes.len());
    for c in &classes {
        let code = phi_inv_marked(&h, &c.representative)?;
        let row: Vec<String> = euclid_row(&code)?.iter().map(|v| v.to_string()).collect();
        println!(
            "{}  |Aut|={:<4} orbit={:<4} d={} E={}",
            c.representative,
            c.stabilizer_order,
            c.orbit_size,
            code.min_ewt()?,
            row.join(",")
        );
    }
    for c in marking_classes(&catalog::kleinian_delta_plus(3)?)? {
        println!("deltaplus_3 {} orbit={}", c.representative, c.orbit_size);
    }
    Ok(())
}
