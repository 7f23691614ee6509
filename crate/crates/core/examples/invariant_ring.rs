//! Writes self-dual enumerators in terms of the ring generators and checks
//! the Molien series.

use lcodes::classify::classify_self_dual;
use lcodes::invariants::{
    decompose_even, decompose_general, molien_by_averaging, molien_closed_form,
    verify_ew_relation,
};

fn main() -> lcodes::Result<()> {
    for r in classify_self_dual(4, true)? {
        let d = decompose_even(&r.swe)?;
        let terms: Vec<String> = d
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = d
                    .names
                    .iter()
                    .zip(e)
                    .filter(|(_, &k)| k > 0)
                    .map(|(n, k)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
                    .collect();
                format!("({c})*{}", mono.join("*"))
            })
            .collect();
        println!("{} = {}", r.swe, terms.join(" + "));
    }
    let odd = classify_self_dual(3, false)?;
    for r in odd.iter().filter(|r| !r.even) {
        decompose_general(&r.swe)?;
    }
    println!("all {} odd length-3 enumerators decompose", odd.iter().filter(|r| !r.even).count());
    println!("EW relation holds: {}", verify_ew_relation());
    let a = molien_by_averaging(12);
    assert_eq!(a, molien_closed_form(12));
    let coeffs: Vec<String> = a.iter().map(|c| c.to_string()).collect();
    println!("Molien series: {}", coeffs.join(" "));
    Ok(())
}
