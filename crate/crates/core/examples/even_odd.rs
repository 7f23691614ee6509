//! Pairs (even self-dual code, coset) and the non-even codes they produce.

use lcodes::classify::{classify_self_dual, delta_pair_count, even_odd_census};
use lcodes::Flavor;

fn main() -> lcodes::Result<()> {
    for n in 2..=4 {
        let even = classify_self_dual(n, true)?;
        let all = classify_self_dual(n, false)?;
        let report = even_odd_census(&even, &all)?;
        println!("n={n}: {} pair classes, ok={}", report.pairs.len(), report.is_ok());
        if n == 2 {
            for p in &report.pairs {
                let basis: Vec<String> =
                    p.image.basis().iter().map(|w| w.format(Flavor::L)).collect();
                println!("  coset {} -> <{}>", p.coset.format(Flavor::L), basis.join(", "));
            }
        }
        for (code, hits) in &report.hits {
            let basis: Vec<String> = code.basis().iter().map(|w| w.format(Flavor::L)).collect();
            println!("  <{}> reached {hits}x", basis.join(", "));
        }
    }
    let even = classify_self_dual(4, true)?;
    for k in 1..=3 {
        println!("n=4 k={k}: {} classes of (C, Delta) pairs", delta_pair_count(&even, k)?);
    }
    Ok(())
}
