//! The Klein four group with its two quadratic forms.
//!
//! A symbol is a 2-bit code point `(h, l)`: `0 = 00`, `1 = 01`, `ω = 10`,
//! `ω̄ = 11` on the L side and `0, a, b, c` on the Kleinian side. Addition
//! is XOR, the scalar product is the symplectic pairing `h·l' ⊕ l·h'`.

use std::fmt;

/// Which quadratic form the group carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// `q(1) = 1`, `q(ω) = q(ω̄) = 0`; norms `0, 1, 2, 2`.
    L,
    /// `q(a) = q(b) = q(c) = 1` (Kleinian codes).
    K,
}

impl Flavor {
    pub fn tag(self) -> char {
        match self {
            Flavor::L => 'L',
            Flavor::K => 'K',
        }
    }

    /// Text alphabet, indexed by code point.
    pub fn alphabet(self) -> [char; 4] {
        match self {
            Flavor::L => ['0', '1', 'w', 'W'],
            Flavor::K => ['0', 'a', 'b', 'c'],
        }
    }

    /// Local symbol permutations allowed at one coordinate, as indices
    /// into [`S3`]: `S2 = {id, ω↔ω̄}` for L, all of `S3` for K.
    pub fn local_group(self) -> &'static [u8] {
        match self {
            Flavor::L => &[0, 1],
            Flavor::K => &[0, 1, 2, 3, 4, 5],
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Symbol(u8);

impl Symbol {
    pub const ZERO: Symbol = Symbol(0);
    pub const ONE: Symbol = Symbol(1);
    pub const OMEGA: Symbol = Symbol(2);
    pub const OMEGA_BAR: Symbol = Symbol(3);
    pub const A: Symbol = Symbol(1);
    pub const B: Symbol = Symbol(2);
    pub const C: Symbol = Symbol(3);

    pub const ALL: [Symbol; 4] = [Symbol(0), Symbol(1), Symbol(2), Symbol(3)];

    pub fn new(value: u8) -> Symbol {
        assert!(value < 4, "symbol code point out of range: {value}");
        Symbol(value)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, other: Symbol) -> Symbol {
        Symbol(self.0 ^ other.0)
    }

    fn high(self) -> u8 {
        self.0 >> 1
    }

    fn low(self) -> u8 {
        self.0 & 1
    }

    /// Scalar product; identical for both flavors.
    pub fn dot(self, other: Symbol) -> u8 {
        (self.high() & other.low()) ^ (self.low() & other.high())
    }

    pub fn quad(self, flavor: Flavor) -> u8 {
        match flavor {
            Flavor::L => self.low() & (1 ^ self.high()),
            Flavor::K => (self.0 != 0) as u8,
        }
    }

    /// `|x|²`: `0, 1, 2, 2` on L. Kleinian symbols have no Euclidean
    /// norm; we use the Hamming contribution there.
    pub fn norm(self, flavor: Flavor) -> u32 {
        match flavor {
            Flavor::L => [0, 1, 2, 2][self.0 as usize],
            Flavor::K => (self.0 != 0) as u32,
        }
    }

    /// Multiplication in F4 with `a = 1`, `b = x`, `c = x + 1`.
    pub fn f4_mul(self, other: Symbol) -> Symbol {
        Symbol(F4_MUL[self.0 as usize][other.0 as usize])
    }

    pub fn to_char(self, flavor: Flavor) -> char {
        flavor.alphabet()[self.0 as usize]
    }

    pub fn from_char(c: char, flavor: Flavor) -> Option<Symbol> {
        flavor
            .alphabet()
            .iter()
            .position(|&x| x == c)
            .map(|i| Symbol(i as u8))
    }
}

const F4_MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

/// The six permutations of `{1, 2, 3}` (fixing 0), as full images of the
/// four code points. Index 1 is the ω↔ω̄ swap of the L side.
pub const S3: [[u8; 4]; 6] = [
    [0, 1, 2, 3],
    [0, 1, 3, 2],
    [0, 2, 1, 3],
    [0, 3, 2, 1],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
];

/// `S3_COMPOSE[g][h]` is the index of `g ∘ h`.
pub const S3_COMPOSE: [[u8; 6]; 6] = compose_table();

/// `S3_INVERSE[g]` is the index of `g⁻¹`.
pub const S3_INVERSE: [u8; 6] = inverse_table();

const fn find(p: [u8; 4]) -> u8 {
    let mut i = 0;
    while i < 6 {
        let q = S3[i];
        if q[1] == p[1] && q[2] == p[2] && q[3] == p[3] {
            return i as u8;
        }
        i += 1;
    }
    panic!("not a permutation fixing zero");
}

const fn compose_table() -> [[u8; 6]; 6] {
    let mut t = [[0u8; 6]; 6];
    let mut g = 0;
    while g < 6 {
        let mut h = 0;
        while h < 6 {
            let mut p = [0u8; 4];
            let mut x = 0;
            while x < 4 {
                p[x] = S3[g][S3[h][x] as usize];
                x += 1;
            }
            t[g][h] = find(p);
            h += 1;
        }
        g += 1;
    }
    t
}

const fn inverse_table() -> [u8; 6] {
    let mut t = [0u8; 6];
    let mut g = 0;
    while g < 6 {
        let mut h = 0;
        while h < 6 {
            if compose_table()[g][h] == 0 {
                t[g] = h as u8;
            }
            h += 1;
        }
        g += 1;
    }
    t
}

/// Per-symbol norm, quadratic form and scalar product of one flavor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormTable {
    pub flavor: Flavor,
}

impl FormTable {
    pub fn new(flavor: Flavor) -> Self {
        FormTable { flavor }
    }

    pub fn norm(&self, x: Symbol) -> u32 {
        x.norm(self.flavor)
    }

    pub fn quad(&self, x: Symbol) -> u8 {
        x.quad(self.flavor)
    }

    pub fn dot(&self, x: Symbol, y: Symbol) -> u8 {
        x.dot(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_table_matches_displayed_l_table() {
        // rows and columns in the order 0, 1, ω, ω̄
        let expected = [[0, 0, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1], [0, 1, 1, 0]];
        for x in Symbol::ALL {
            for y in Symbol::ALL {
                assert_eq!(x.dot(y), expected[x.value() as usize][y.value() as usize]);
            }
        }
    }

    #[test]
    fn dot_is_polarisation_of_quad() {
        for flavor in [Flavor::L, Flavor::K] {
            for x in Symbol::ALL {
                for y in Symbol::ALL {
                    let polar = x.add(y).quad(flavor) ^ x.quad(flavor) ^ y.quad(flavor);
                    assert_eq!(x.dot(y), polar, "{flavor} {x:?} {y:?}");
                }
            }
        }
    }

    #[test]
    fn norms_and_forms() {
        let l = FormTable::new(Flavor::L);
        assert_eq!(
            Symbol::ALL.map(|s| l.norm(s)),
            [0, 1, 2, 2]
        );
        assert_eq!(Symbol::ALL.map(|s| l.quad(s)), [0, 1, 0, 0]);
        let k = FormTable::new(Flavor::K);
        assert_eq!(Symbol::ALL.map(|s| k.quad(s)), [0, 1, 1, 1]);
        assert_eq!(Symbol::ONE.add(Symbol::OMEGA), Symbol::OMEGA_BAR);
    }

    #[test]
    fn s3_tables_form_a_group() {
        for g in 0..6 {
            assert_eq!(S3_COMPOSE[g][S3_INVERSE[g] as usize], 0);
            assert_eq!(S3_COMPOSE[0][g], g as u8);
            for h in 0..6 {
                for k in 0..6 {
                    let left = S3_COMPOSE[S3_COMPOSE[g][h] as usize][k];
                    let right = S3_COMPOSE[g][S3_COMPOSE[h][k] as usize];
                    assert_eq!(left, right);
                }
            }
        }
        // the L-side swap exchanges ω and ω̄ and fixes 1
        assert_eq!(S3[1], [0, 1, 3, 2]);
    }

    #[test]
    fn f4_has_a_as_identity() {
        for x in Symbol::ALL {
            assert_eq!(Symbol::A.f4_mul(x), x);
        }
        // b·b = c and b·c = a for x² = x + 1
        assert_eq!(Symbol::B.f4_mul(Symbol::B), Symbol::C);
        assert_eq!(Symbol::B.f4_mul(Symbol::C), Symbol::A);
    }
}
