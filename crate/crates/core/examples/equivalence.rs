//! Canonical forms, automorphism groups and explicit equivalences.

use lcodes::catalog;
use lcodes::symmetry::{are_equivalent, aut_group, canonical_form};
use lcodes::SignedPermutation;

fn main() -> lcodes::Result<()> {
    let c = catalog::named("Upsilon2 Gamma1")?;
    let g = SignedPermutation::new(c.flavor(), vec![2, 0, 1], vec![1, 0, 1])?;
    let d = c.image(&g)?;
    println!("C:\n{}g(C):\n{}", c.to_text(), d.to_text());

    let form = canonical_form(&c)?;
    println!("canonical:\n{}", form.code.to_text());
    assert_eq!(canonical_form(&d)?.code, form.code);

    let t = are_equivalent(&c, &d)?.expect("equivalent by construction");
    println!("transporter {}", t.describe());
    assert_eq!(c.image(&t)?, d);

    let aut = aut_group(&catalog::hexacode())?;
    println!("hexacode: |Aut| = {} in S3^6:S6", aut.order());
    for g in aut.generators() {
        println!("  {}", g.describe());
    }
    Ok(())
}
