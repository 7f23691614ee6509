//! Minimum-weight bounds and the codes that meet them.

use lcodes::classify::{extremal_bound, find_extremal, sharpened_bound};

fn main() -> lcodes::Result<()> {
    for n in 1..=5 {
        for even in [false, true] {
            let found = find_extremal(n, even)?;
            println!(
                "n={n} {:<8} bound={}{} extremal classes={}",
                if even { "even" } else { "general" },
                extremal_bound(n, even),
                if even { String::new() } else { format!(" sharpened={}", sharpened_bound(n)) },
                found.len()
            );
            for r in &found {
                println!("    d={} |Aut|={} swe={}", r.min_ewt, r.aut_order, r.swe);
            }
        }
    }
    Ok(())
}
