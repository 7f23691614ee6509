//! Named L-codes and Kleinian codes.
//!
//! Names follow the romanized convention `Gamma1`, `Xi1`, `Delta_l`,
//! `DeltaPlus_k`, `Upsilon2`, `Upsilon3`, `Sigma_n`, `J_n`, `P3`, `Q3`,
//! `D_2n` and `Zero_n`; Kleinian names are lower case (`gamma1`,
//! `epsilon2`, `delta_n`, `deltaplus_n`, `hexacode`). A name may be a
//! product of factors, e.g. `Gamma1^2 Xi1` or `Upsilon2*Xi1`.

use crate::code::LinearCode;
use crate::error::{CodeError, Result};
use crate::maps::{phi, phi_inv_marked, psi, Marking};
use crate::symbol::{Flavor, Symbol};
use crate::word::Word;

fn l(gens: &[&str]) -> LinearCode {
    LinearCode::from_strings(Flavor::L, gens).expect("catalog generators are valid")
}

fn k(gens: &[&str]) -> LinearCode {
    LinearCode::from_strings(Flavor::K, gens).expect("catalog generators are valid")
}

fn need(name: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(CodeError::InvalidParameter(format!(
            "{name} needs length at least {min}, got {n}"
        )));
    }
    Ok(())
}

/// Words with `s` at positions `i` and `i + 1`, for `i < n − 1`.
fn adjacent_pairs(flavor: Flavor, n: usize, s: Symbol) -> Result<LinearCode> {
    let gens: Vec<Word> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut w = Word::zero(n)?;
            w = w.with(i, s).with(i + 1, s);
            Ok(w)
        })
        .collect::<Result<_>>()?;
    LinearCode::span(flavor, n, &gens)
}

fn with_word(code: LinearCode, word: Word) -> Result<LinearCode> {
    let mut gens = code.basis();
    gens.push(word);
    LinearCode::span(code.flavor(), code.len(), &gens)
}

pub fn gamma1() -> LinearCode {
    l(&["1"])
}

pub fn xi1() -> LinearCode {
    l(&["w"])
}

/// Words of length `l` with an even number of `1`s and zeros elsewhere.
pub fn delta(len: usize) -> Result<LinearCode> {
    need("Delta", len, 2)?;
    adjacent_pairs(Flavor::L, len, Symbol::ONE)
}

/// `Δ_k⁺ = Δ_k ∪ (Δ_k + (ω, …, ω))`.
pub fn delta_plus(len: usize) -> Result<LinearCode> {
    need("DeltaPlus", len, 2)?;
    with_word(delta(len)?, Word::from_symbols(&vec![Symbol::OMEGA; len])?)
}

pub fn upsilon2() -> LinearCode {
    l(&["1w", "w1"])
}

pub fn upsilon3() -> LinearCode {
    l(&["11w", "1w1", "w11"])
}

pub fn zero(len: usize) -> Result<LinearCode> {
    LinearCode::zero(Flavor::L, len)
}

/// `Σ_n = φ_M⁻¹(δ_n⁺)` with `M = (c, …, c)`.
pub fn sigma_code(len: usize) -> Result<LinearCode> {
    need("Sigma", len, 3)?;
    phi_inv_marked(&kleinian_delta_plus(len)?, &Marking::uniform(Symbol::C, len)?)
}

/// `J_n = φ_M⁻¹(δ_n⁺)` with `M = (b, …, b)` for odd `n` and
/// `(b, …, b, c)` for even `n`.
pub fn j_code(len: usize) -> Result<LinearCode> {
    need("J", len, 3)?;
    let mut m = vec![Symbol::B; len];
    if len.is_multiple_of(2) {
        m[len - 1] = Symbol::C;
    }
    phi_inv_marked(&kleinian_delta_plus(len)?, &Marking::new(Word::from_symbols(&m)?)?)
}

pub fn p3() -> LinearCode {
    phi_inv_marked(
        &kleinian_delta_plus(3).expect("length 3"),
        &Marking::parse("aab").expect("valid marking"),
    )
    .expect("lengths agree")
}

pub fn q3() -> LinearCode {
    phi_inv_marked(
        &kleinian_delta_plus(3).expect("length 3"),
        &Marking::parse("abb").expect("valid marking"),
    )
    .expect("lengths agree")
}

/// `D_2n = ψ(Σ_n)` for `n ≥ 3`, and `D_4 = ψ(Υ2)`.
pub fn d_code(len: usize) -> Result<LinearCode> {
    if !len.is_multiple_of(2) || len < 4 {
        return Err(CodeError::InvalidParameter(format!(
            "D needs an even length at least 4, got {len}"
        )));
    }
    if len == 4 {
        return psi(&upsilon2());
    }
    psi(&sigma_code(len / 2)?)
}

/// `γ1 = {0, a}`.
pub fn kleinian_gamma1() -> LinearCode {
    k(&["a"])
}

/// `ε2 = {00, aa, bb, cc}`.
pub fn epsilon2() -> LinearCode {
    k(&["aa", "bb"])
}

/// `δ_n`: words over `{0, a}` of even weight.
pub fn kleinian_delta(len: usize) -> Result<LinearCode> {
    need("delta", len, 2)?;
    adjacent_pairs(Flavor::K, len, Symbol::A)
}

/// `δ_n⁺ = δ_n ∪ (δ_n + (c, …, c))`.
pub fn kleinian_delta_plus(len: usize) -> Result<LinearCode> {
    need("deltaplus", len, 2)?;
    with_word(kleinian_delta(len)?, Word::from_symbols(&vec![Symbol::C; len])?)
}

/// Generators of the extremal length-6 L-code whose `φ`-image is the
/// hexacode.
pub const HEXACODE_L_GENERATORS: [&str; 6] =
    ["Www00w", "wW0w0w", "w0W0ww", "0w0Www", "00wwWw", "wwwwwW"];

/// The hexacode as a Kleinian code: `φ` of the span of
/// [`HEXACODE_L_GENERATORS`].
pub fn hexacode() -> LinearCode {
    phi(&l(&HEXACODE_L_GENERATORS)).expect("L-code")
}

fn parse_len(name: &str, rest: &str) -> Result<usize> {
    rest.trim_start_matches('_')
        .parse()
        .map_err(|_| CodeError::UnknownName(name.to_string()))
}

fn single(name: &str) -> Result<LinearCode> {
    let fixed = match name {
        "Gamma1" => Some(gamma1()),
        "Xi1" => Some(xi1()),
        "Upsilon2" => Some(upsilon2()),
        "Upsilon3" => Some(upsilon3()),
        "P3" => Some(p3()),
        "Q3" => Some(q3()),
        "gamma1" => Some(kleinian_gamma1()),
        "epsilon2" => Some(epsilon2()),
        "hexacode" => Some(hexacode()),
        _ => None,
    };
    if let Some(c) = fixed {
        return Ok(c);
    }
    let families: [(&str, fn(usize) -> Result<LinearCode>); 9] = [
        ("DeltaPlus", delta_plus),
        ("Delta", delta),
        ("Sigma", sigma_code),
        ("Zero", zero),
        ("J", j_code),
        ("D", d_code),
        ("deltaplus", kleinian_delta_plus),
        ("delta", kleinian_delta),
        ("zero", |n| LinearCode::zero(Flavor::K, n)),
    ];
    for (prefix, build) in families {
        if let Some(rest) = name.strip_prefix(prefix) {
            if rest.is_empty() || !rest.trim_start_matches('_').chars().all(|c| c.is_ascii_digit()) {
                continue;
            }
            return build(parse_len(name, rest)?);
        }
    }
    Err(CodeError::UnknownName(name.to_string()))
}

/// Looks up a named code; factors separated by spaces or `*` form a direct
/// sum, and `^k` repeats a factor.
pub fn named(name: &str) -> Result<LinearCode> {
    let factors: Vec<&str> = name
        .split(|c: char| c == '*' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if factors.is_empty() {
        return Err(CodeError::UnknownName(name.to_string()));
    }
    let mut acc: Option<LinearCode> = None;
    for f in factors {
        let (base, count) = match f.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<usize>()
                    .map_err(|_| CodeError::UnknownName(f.to_string()))?,
            ),
            None => (f, 1),
        };
        let code = single(base)?.power(count)?;
        acc = Some(match acc {
            None => code,
            Some(a) => a.direct_sum(&code)?,
        });
    }
    Ok(acc.expect("at least one factor"))
}

/// Names accepted by [`named`] as single factors, with example lengths.
pub const NAMES: [&str; 17] = [
    "Gamma1",
    "Xi1",
    "Delta_l",
    "DeltaPlus_k",
    "Upsilon2",
    "Upsilon3",
    "Sigma_n",
    "J_n",
    "P3",
    "Q3",
    "D_2n",
    "Zero_n",
    "gamma1",
    "epsilon2",
    "delta_n",
    "deltaplus_n",
    "hexacode",
];
