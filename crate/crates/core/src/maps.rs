//! Structure maps between L-codes, Kleinian codes and binary codes.

use std::fmt;

use crate::code::{echelon, for_each_in_span, insert_bits, LinearCode};
use crate::error::{CodeError, Result};
use crate::symbol::{Flavor, Symbol};
use crate::symmetry::aut_group;
use crate::word::{symbol_at, Word, MAX_LENGTH};

fn expect_flavor(code: &LinearCode, flavor: Flavor) -> Result<()> {
    if code.flavor() != flavor {
        return Err(CodeError::FlavorMismatch {
            expected: flavor,
            found: code.flavor(),
        });
    }
    Ok(())
}

/// `φ`: `0, 1, ω, ω̄ ↦ 0, a, b, c`, coordinatewise.
pub fn phi(code: &LinearCode) -> Result<LinearCode> {
    expect_flavor(code, Flavor::L)?;
    Ok(code.with_flavor(Flavor::K))
}

pub fn phi_inv(code: &LinearCode) -> Result<LinearCode> {
    expect_flavor(code, Flavor::K)?;
    Ok(code.with_flavor(Flavor::L))
}

/// A nonzero Kleinian symbol at every coordinate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Marking(Word);

impl Marking {
    pub fn new(word: Word) -> Result<Marking> {
        if word.symbols().any(|s| s.is_zero()) {
            return Err(CodeError::InvalidParameter(format!(
                "marking `{}` has a zero coordinate",
                word.format(Flavor::K)
            )));
        }
        Ok(Marking(word))
    }

    pub fn parse(text: &str) -> Result<Marking> {
        Marking::new(Word::parse(text, Flavor::K)?)
    }

    /// `(a, …, a)`.
    pub fn standard(n: usize) -> Result<Marking> {
        Marking::new(Word::from_symbols(&vec![Symbol::A; n])?)
    }

    pub fn uniform(symbol: Symbol, n: usize) -> Result<Marking> {
        Marking::new(Word::from_symbols(&vec![symbol; n])?)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> Word {
        self.0
    }

    /// Every marking of length `n`, in increasing order.
    pub fn all(n: usize) -> impl Iterator<Item = Marking> {
        (0..3u64.pow(n as u32)).map(move |mut k| {
            let mut symbols = vec![Symbol::ZERO; n];
            for i in (0..n).rev() {
                symbols[i] = Symbol::new((k % 3) as u8 + 1);
                k /= 3;
            }
            Marking(Word::from_symbols(&symbols).expect("length checked by caller"))
        })
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(Flavor::K))
    }
}

impl fmt::Debug for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Marking({self})")
    }
}

/// `φ_M⁻¹ = φ⁻¹ ∘ μ_M` where `μ_M` multiplies coordinate `i` by `M_i` in F4.
pub fn phi_inv_marked(code: &LinearCode, marking: &Marking) -> Result<LinearCode> {
    expect_flavor(code, Flavor::K)?;
    let n = code.len();
    if marking.len() != n {
        return Err(CodeError::LengthMismatch {
            left: n,
            right: marking.len(),
        });
    }
    let m: Vec<Symbol> = marking.0.symbols().collect();
    let images = code.basis().into_iter().map(|w| {
        let symbols: Vec<Symbol> = w.symbols().zip(&m).map(|(x, &k)| k.f4_mul(x)).collect();
        Word::from_symbols(&symbols).expect("same length").bits()
    });
    LinearCode::from_bits(Flavor::L, n, images)
}

fn double_length(n: usize) -> Result<usize> {
    let m = 2 * n;
    if m > MAX_LENGTH {
        return Err(CodeError::LengthTooLarge(m));
    }
    Ok(m)
}

/// Applies a per-symbol map into pairs and adds the given pair at every
/// coordinate.
fn pair_map(code: &LinearCode, images: [u64; 4], glue: u64, flavor: Flavor) -> Result<LinearCode> {
    let n = code.len();
    let m = double_length(n)?;
    let expand = |bits: u64| -> u64 {
        (0..n).fold(0u64, |acc, i| (acc << 4) | images[symbol_at(bits, n, i) as usize])
    };
    let glue_words = (0..n).map(|i| glue << (4 * (n - 1 - i)));
    LinearCode::from_bits(
        flavor,
        m,
        code.basis_bits().iter().map(|&b| expand(b)).chain(glue_words),
    )
}

/// `σ(C) = C̃ + δ2^n` with `0, 1, ω, ω̄ ↦ 00, 0a, bb, bc` and `δ2 = {00, aa}`.
pub fn sigma(code: &LinearCode) -> Result<LinearCode> {
    expect_flavor(code, Flavor::L)?;
    // pairs packed as (first << 2) | second with a = 1, b = 2, c = 3
    pair_map(code, [0b0000, 0b0001, 0b1010, 0b1011], 0b0101, Flavor::K)
}

/// `ψ(C) = C̄ + Δ2^n` with `0, 1, ω, ω̄ ↦ 00, 01, ωω, ωω̄` and `Δ2 = {00, 11}`.
pub fn psi(code: &LinearCode) -> Result<LinearCode> {
    expect_flavor(code, Flavor::L)?;
    pair_map(code, [0b0000, 0b0001, 0b1010, 0b1011], 0b0101, Flavor::L)
}

/// A binary linear code, coordinate 0 in the most significant bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    length: usize,
    basis: Vec<u64>,
}

impl BinaryCode {
    pub fn from_bits<I: IntoIterator<Item = u64>>(length: usize, vectors: I) -> Result<BinaryCode> {
        if length > 64 {
            return Err(CodeError::LengthTooLarge(length));
        }
        let mask = if length == 64 { u64::MAX } else { (1u64 << length) - 1 };
        let mut basis = Vec::new();
        for v in vectors {
            if v & !mask != 0 {
                return Err(CodeError::InvalidParameter(format!(
                    "vector {v:#x} does not fit binary length {length}"
                )));
            }
            insert_bits(&mut basis, v);
        }
        Ok(BinaryCode { length, basis })
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn contains(&self, v: u64) -> bool {
        let mut b = self.basis.clone();
        !insert_bits(&mut b, v)
    }

    pub fn codewords(&self) -> Result<Vec<u64>> {
        if self.dimension() > crate::code::ENUMERATION_LIMIT {
            return Err(CodeError::EnumerationGuard {
                rank: self.dimension(),
                limit: crate::code::ENUMERATION_LIMIT,
            });
        }
        let mut out = Vec::new();
        for_each_in_span(&self.basis, |v| out.push(v));
        Ok(out)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.basis
            .iter()
            .all(|&x| self.basis.iter().all(|&y| (x & y).count_ones() % 2 == 0))
    }

    pub fn dual(&self) -> BinaryCode {
        // v·r = 0 for all rows: free-variable construction on the echelon form
        let pivots: u64 = self.basis.iter().fold(0, |acc, &r| acc | 1u64 << (63 - r.leading_zeros()));
        let mut out = Vec::new();
        for f in 0..self.length {
            if pivots >> f & 1 == 1 {
                continue;
            }
            let mut v = 1u64 << f;
            for &r in &self.basis {
                if r >> f & 1 == 1 {
                    v |= 1u64 << (63 - r.leading_zeros());
                }
            }
            out.push(v);
        }
        BinaryCode {
            length: self.length,
            basis: echelon(out),
        }
    }

    pub fn format_rows(&self) -> String {
        let mut s = String::new();
        for &b in &self.basis {
            for i in (0..self.length).rev() {
                s.push(if b >> i & 1 == 1 { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[{}, {}]", self.length, self.dimension())
    }
}

const BETA: [u64; 4] = [0b000, 0b011, 0b101, 0b110];

/// `β` on one packed word of length `n`.
pub fn beta_word(bits: u64, n: usize) -> u64 {
    (0..n).fold(0u64, |acc, i| (acc << 3) | BETA[symbol_at(bits, n, i) as usize])
}

/// `β(C)` with `0, 1, ω, ω̄ ↦ 000, 011, 101, 110`.
pub fn beta(code: &LinearCode) -> Result<BinaryCode> {
    let n = code.len();
    if 3 * n > 64 {
        return Err(CodeError::LengthTooLarge(n));
    }
    BinaryCode::from_bits(3 * n, code.basis_bits().iter().map(|&b| beta_word(b, n)))
}

/// One orbit of markings under `Aut(D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkingClass {
    /// Smallest marking of the orbit.
    pub representative: Marking,
    /// `|Aut_D(M)|`, equal to `|Aut(φ_M⁻¹(D))|`.
    pub stabilizer_order: u128,
    pub orbit_size: u64,
}

/// Orbits of the `3^n` markings under `Aut(D)`, largest stabilizer first
/// and then by representative.
///
/// A marking matters only through the symbol it sends to `a`, so `Aut(D)`
/// acts on the vector of those symbols (`M_i⁻¹`) exactly as on words.
pub fn marking_classes(code: &LinearCode) -> Result<Vec<MarkingClass>> {
    expect_flavor(code, Flavor::K)?;
    let n = code.len();
    if n > 16 {
        return Err(CodeError::LimitExceeded {
            length: n,
            limit: 16,
        });
    }
    let aut = aut_group(code)?;
    let markings: Vec<Marking> = Marking::all(n).collect();
    let index_of = |w: Word| -> usize {
        w.symbols()
            .fold(0usize, |acc, s| acc * 3 + (s.value() as usize - 1))
    };
    let invert = |w: Word| -> Word {
        let s: Vec<Symbol> = w
            .symbols()
            .map(|x| Symbol::new(crate::symbol::S3[1][x.value() as usize]))
            .collect();
        Word::from_symbols(&s).expect("same length")
    };
    let mut parent: Vec<usize> = (0..markings.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for g in aut.generators() {
        for (i, m) in markings.iter().enumerate() {
            let marked = invert(m.word());
            let image = invert(g.act(&marked)?);
            let j = index_of(image);
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut sizes = vec![0u64; markings.len()];
    for i in 0..markings.len() {
        let r = find(&mut parent, i);
        sizes[r] += 1;
    }
    let order = aut.order();
    let mut classes: Vec<MarkingClass> = (0..markings.len())
        .filter(|&i| sizes[i] > 0)
        .map(|i| MarkingClass {
            representative: markings[i],
            stabilizer_order: order / sizes[i] as u128,
            orbit_size: sizes[i],
        })
        .collect();
    classes.sort_by(|a, b| {
        b.stabilizer_order
            .cmp(&a.stabilizer_order)
            .then(a.representative.cmp(&b.representative))
    });
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lcode(gens: &[&str]) -> LinearCode {
        LinearCode::from_strings(Flavor::L, gens).unwrap()
    }

    fn kcode(gens: &[&str]) -> LinearCode {
        LinearCode::from_strings(Flavor::K, gens).unwrap()
    }

    #[test]
    fn phi_of_xi1() {
        assert_eq!(phi(&lcode(&["w"])).unwrap(), kcode(&["b"]));
        assert!(phi(&kcode(&["a"])).is_err());
    }

    #[test]
    fn sigma_examples() {
        let eps2 = kcode(&["aa", "bb"]);
        assert_eq!(sigma(&lcode(&["w"])).unwrap(), eps2);
        let z = LinearCode::zero(Flavor::L, 2).unwrap();
        assert_eq!(sigma(&z).unwrap(), kcode(&["aa00", "00aa"]));
    }

    #[test]
    fn psi_examples() {
        let dplus = lcode(&["11", "ww"]);
        assert_eq!(psi(&lcode(&["w"])).unwrap(), dplus);
        assert_eq!(psi(&lcode(&["1"])).unwrap(), lcode(&["10", "01"]));
    }

    #[test]
    fn marked_inverse() {
        let delta3p = kcode(&["aa0", "0aa", "ccc"]);
        let m = Marking::parse("ccc").unwrap();
        let u3 = lcode(&["11w", "1w1", "w11"]);
        assert_eq!(phi_inv_marked(&delta3p, &m).unwrap(), u3);
        let std = Marking::standard(3).unwrap();
        assert_eq!(
            phi_inv_marked(&delta3p, &std).unwrap(),
            phi_inv(&delta3p).unwrap()
        );
        assert!(Marking::parse("a0").is_err());
    }

    #[test]
    fn beta_of_words() {
        assert_eq!(beta_word(0b01, 1), 0b011);
        let b = beta(&lcode(&["11w", "1w1", "w11"])).unwrap();
        assert_eq!((b.len(), b.dimension()), (9, 3));
        assert!(b.is_self_orthogonal());
    }
}
