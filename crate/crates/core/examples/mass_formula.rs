//! Sum of orbit sizes against the closed mass formulas.

use lcodes::classify::{classify_self_dual, count_distinct_self_dual, mass_check};

fn main() -> lcodes::Result<()> {
    for n in 1..=4 {
        for even in [false, true] {
            let records = classify_self_dual(n, even)?;
            let report = mass_check(&records, n, even);
            let brute = count_distinct_self_dual(n, even)?;
            println!(
                "n={n} {:<8} classes={:<3} mass {report}  brute force {brute}",
                if even { "even" } else { "general" },
                records.len()
            );
        }
    }
    Ok(())
}
