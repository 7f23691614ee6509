//! Classifies self-dual codes of small length and prints the census.
//!
//! `cargo run --release --example classify_lengths -- 5`

use lcodes::classify::{census_by_min_weight, classify_self_dual, indecomposable_count};

fn main() -> lcodes::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for even in [false, true] {
        println!("{}", if even { "even self-dual" } else { "self-dual" });
        for n in 1..=max {
            let t = std::time::Instant::now();
            let records = classify_self_dual(n, even)?;
            println!(
                "  n={n} classes={:<4} indecomposable={:<4} by d={:?}  ({:.2?})",
                records.len(),
                indecomposable_count(&records),
                census_by_min_weight(&records),
                t.elapsed()
            );
        }
    }
    for r in classify_self_dual(2, false)? {
        println!("{r}");
    }
    Ok(())
}
