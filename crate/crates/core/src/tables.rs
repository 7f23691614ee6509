//! Text tables of named codes, hexacode markings and small self-dual
//! classes. The output matches the files under `tables/` byte for byte.

use std::fmt::Write;

use crate::catalog;
use crate::classify::classify_self_dual;
use crate::code::LinearCode;
use crate::enumerators::{euclid_from_swe, swe};
use crate::error::Result;
use crate::maps::{marking_classes, phi_inv_marked};
use crate::symmetry::aut_group;

/// Codes listed in the table of examples, with their names.
pub fn example_codes() -> Result<Vec<(String, LinearCode)>> {
    let mut rows = vec![
        ("Gamma1".to_string(), catalog::gamma1()),
        ("Xi1".to_string(), catalog::xi1()),
    ];
    for l in 2..=6 {
        rows.push((format!("Delta_{l}"), catalog::delta(l)?));
    }
    rows.push(("Upsilon2".to_string(), catalog::upsilon2()));
    rows.push(("Upsilon3".to_string(), catalog::upsilon3()));
    Ok(rows)
}

fn yn(b: bool) -> char {
    if b {
        'Y'
    } else {
        'N'
    }
}

/// `name;dim;even;aut;swe;EW` for each example code.
pub fn table1() -> Result<String> {
    let mut out = String::from("# name;dim;even;aut;swe;EW\n");
    for (name, code) in example_codes()? {
        let s = swe(&code)?;
        writeln!(
            out,
            "{name};{};{};{};{s};{}",
            code.dimension_text(),
            yn(code.is_even()),
            aut_group(&code)?.order(),
            euclid_from_swe(&s)
        )
        .expect("writing to a string");
    }
    Ok(out)
}

/// Coefficients `E_0, …, E_2n` of the Euclidean enumerator: `E_k` counts
/// codewords of Euclidean weight `k`.
pub fn euclid_row(code: &LinearCode) -> Result<Vec<u128>> {
    let n = code.len() as u32;
    let ew = euclid_from_swe(&swe(code)?);
    Ok((0..=2 * n)
        .map(|k| {
            ew.coeff(&[2 * n - k, k])
                .try_into()
                .expect("coefficient fits")
        })
        .collect())
}

/// `aut;orbit;E_0,…,E_12` for the L-codes obtained from the hexacode
/// through its marking classes, by decreasing `|Aut|`.
pub fn table2() -> Result<String> {
    let hexacode = catalog::hexacode();
    let mut rows = Vec::new();
    for class in marking_classes(&hexacode)? {
        let code = phi_inv_marked(&hexacode, &class.representative)?;
        rows.push((class.stabilizer_order, class.orbit_size, euclid_row(&code)?));
    }
    rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut out = String::from("# aut;orbit;E_0..E_12\n");
    for (aut, orbit, row) in rows {
        let row: Vec<String> = row.iter().map(u128::to_string).collect();
        writeln!(out, "{aut};{orbit};{}", row.join(",")).expect("writing to a string");
    }
    Ok(out)
}

/// `n;even;swe;EW` for every self-dual class of length at most 3 and every
/// even self-dual class of length 4, sorted by length, even classes first,
/// then by the text of `swe`.
pub fn table3() -> Result<String> {
    let mut rows = Vec::new();
    for (n, even) in [(1, false), (2, false), (3, false), (4, true)] {
        for r in classify_self_dual(n, even)? {
            rows.push((n, !r.even, r.swe.to_string(), r.euclid.to_string()));
        }
    }
    rows.sort();
    let mut out = String::from("# n;even;swe;EW\n");
    for (n, odd, s, e) in rows {
        writeln!(out, "{n};{};{s};{e}", yn(!odd)).expect("writing to a string");
    }
    Ok(out)
}

/// Shipped copies of the three tables.
pub const TABLE1: &str = include_str!("../tables/table1.txt");
pub const TABLE2: &str = include_str!("../tables/table2.txt");
pub const TABLE3: &str = include_str!("../tables/table3.txt");
