//! Weight enumerators and MacWilliams transforms.
//!
//! Variables: `cwe(p, q, r, s)` counts the symbols `0, 1, ω, ω̄`;
//! `swe(x, y, z)` merges `ω` and `ω̄`; `W(u, v)` counts zero and nonzero
//! symbols; `EW(a, b) = Σ a^(2n − ewt) b^ewt`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::code::LinearCode;
use crate::error::Result;
use crate::poly::{Poly, AB, PQRS, UV, XYZ};

/// Symbol counts `(#0, #1, #ω, #ω̄)` of a packed word.
#[inline]
fn symbol_counts(bits: u64, n: usize) -> [u32; 4] {
    let m = 0x5555_5555_5555_5555u64;
    let lo = bits & m;
    let hi = (bits >> 1) & m;
    let ones = (lo & !hi).count_ones();
    let omegas = (hi & !lo).count_ones();
    let bars = (hi & lo).count_ones();
    [n as u32 - ones - omegas - bars, ones, omegas, bars]
}

fn tally(code: &LinearCode) -> Result<HashMap<[u32; 4], u64>> {
    let n = code.len();
    let mut counts: HashMap<[u32; 4], u64> = HashMap::new();
    for b in code.codeword_bits()? {
        *counts.entry(symbol_counts(b, n)).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Complete weight enumerator in `p, q, r, s`.
pub fn cwe(code: &LinearCode) -> Result<Poly> {
    let counts = tally(code)?;
    Ok(Poly::from_terms(
        PQRS,
        counts.into_iter().map(|(c, k)| (c.to_vec(), k)),
    ))
}

/// Symmetrized weight enumerator in `x, y, z`.
pub fn swe(code: &LinearCode) -> Result<Poly> {
    let counts = tally(code)?;
    Ok(Poly::from_terms(
        XYZ,
        counts
            .into_iter()
            .map(|(c, k)| (vec![c[0], c[1], c[2] + c[3]], k)),
    ))
}

/// Hamming weight enumerator in `u, v`.
pub fn hamming_we(code: &LinearCode) -> Result<Poly> {
    let counts = tally(code)?;
    Ok(Poly::from_terms(
        UV,
        counts
            .into_iter()
            .map(|(c, k)| (vec![c[0], c[1] + c[2] + c[3]], k)),
    ))
}

/// Euclidean weight enumerator in `a, b`.
pub fn euclid_we(code: &LinearCode) -> Result<Poly> {
    let n = code.len() as u32;
    let counts = tally(code)?;
    Ok(Poly::from_terms(
        AB,
        counts.into_iter().map(|(c, k)| {
            let e = c[1] + 2 * (c[2] + c[3]);
            (vec![2 * n - e, e], k)
        }),
    ))
}

fn vars(set: &'static [&'static str]) -> Vec<Poly> {
    Poly::vars_of(set)
}

fn lin(set: &'static [&'static str], coeffs: &[i64]) -> Poly {
    Poly::from_terms(
        set,
        coeffs.iter().enumerate().map(|(i, &c)| {
            let mut e = vec![0; set.len()];
            e[i] = 1;
            (e, c)
        }),
    )
}

/// `swe = cwe(x, y, z, z)`.
pub fn swe_from_cwe(cwe: &Poly) -> Poly {
    let [x, y, z]: [Poly; 3] = vars(XYZ).try_into().expect("three variables");
    cwe.substitute(&[x, y, z.clone(), z])
}

/// `W = swe(u, v, v)`.
pub fn hamming_from_swe(swe: &Poly) -> Poly {
    let [u, v]: [Poly; 2] = vars(UV).try_into().expect("two variables");
    swe.substitute(&[u, v.clone(), v])
}

/// `EW = swe(a², ab, b²)`.
pub fn euclid_from_swe(swe: &Poly) -> Poly {
    let [a, b]: [Poly; 2] = vars(AB).try_into().expect("two variables");
    swe.substitute(&[&a * &a, &a * &b, &b * &b])
}

/// `W_{C⊥}(u, v) = W_C(u + 3v, u − v) / |C|`.
pub fn macwilliams_hamming(w: &Poly, code_size: &BigInt) -> Result<Poly> {
    w.substitute(&[lin(UV, &[1, 3]), lin(UV, &[1, -1])])
        .divide_exact(code_size)
}

/// `swe_{C⊥}(x, y, z) = swe_C(x + y + 2z, x + y − 2z, x − y) / |C|`.
///
/// The substitution squares to `4·id`, so the same formula also recovers
/// `swe_C` from `swe_{C⊥}` when divided by `|C⊥|`.
pub fn macwilliams_swe(swe: &Poly, code_size: &BigInt) -> Result<Poly> {
    swe.substitute(&swe_substitution()).divide_exact(code_size)
}

/// Inverse direction: `swe_C` from `swe_{C⊥}` and `|C⊥|`.
pub fn macwilliams_swe_inverse(dual_swe: &Poly, dual_size: &BigInt) -> Result<Poly> {
    macwilliams_swe(dual_swe, dual_size)
}

pub(crate) fn swe_substitution() -> [Poly; 3] {
    [
        lin(XYZ, &[1, 1, 2]),
        lin(XYZ, &[1, 1, -2]),
        lin(XYZ, &[1, -1, 0]),
    ]
}

/// Complete MacWilliams transform through the character
/// `y ↦ (−1)^(x·y)` of the scalar product.
pub fn macwilliams_cwe(cwe: &Poly, code_size: &BigInt) -> Result<Poly> {
    cwe.substitute(&[
        lin(PQRS, &[1, 1, 1, 1]),
        lin(PQRS, &[1, 1, -1, -1]),
        lin(PQRS, &[1, -1, 1, -1]),
        lin(PQRS, &[1, -1, -1, 1]),
    ])
    .divide_exact(code_size)
}

/// The four enumerators of one code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumerators {
    pub cwe: Poly,
    pub swe: Poly,
    pub hamming: Poly,
    pub euclid: Poly,
}

pub fn all_enumerators(code: &LinearCode) -> Result<Enumerators> {
    let cwe = cwe(code)?;
    let swe = swe_from_cwe(&cwe);
    let hamming = hamming_from_swe(&swe);
    let euclid = euclid_from_swe(&swe);
    Ok(Enumerators {
        cwe,
        swe,
        hamming,
        euclid,
    })
}
