//! Signed permutations: elements of `S2^n : S_n` (L) and `S3^n : S_n` (K).

use std::fmt;

use crate::error::{CodeError, Result};
use crate::symbol::{Flavor, S3, S3_COMPOSE, S3_INVERSE};
use crate::word::{shift_of, Word};

/// A coordinate permutation together with one local symbol permutation per
/// target coordinate.
///
/// `perm[j]` is the target of source coordinate `j`; `local[i]` is the index
/// into [`S3`] applied at target coordinate `i`. Coordinate `i` of the image
/// is `local[i]` applied to `x[perm⁻¹(i)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    flavor: Flavor,
    perm: Vec<u8>,
    local: Vec<u8>,
}

impl SignedPermutation {
    pub fn identity(flavor: Flavor, n: usize) -> Self {
        SignedPermutation {
            flavor,
            perm: (0..n as u8).collect(),
            local: vec![0; n],
        }
    }

    pub fn new(flavor: Flavor, perm: Vec<u8>, local: Vec<u8>) -> Result<Self> {
        let n = perm.len();
        if local.len() != n {
            return Err(CodeError::LengthMismatch {
                left: n,
                right: local.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p as usize >= n || seen[p as usize] {
                return Err(CodeError::InvalidParameter(format!(
                    "not a permutation: {perm:?}"
                )));
            }
            seen[p as usize] = true;
        }
        let allowed = flavor.local_group();
        if let Some(bad) = local.iter().find(|l| !allowed.contains(l)) {
            return Err(CodeError::InvalidParameter(format!(
                "local action {bad} not allowed for flavor {flavor}"
            )));
        }
        Ok(SignedPermutation {
            flavor,
            perm,
            local,
        })
    }

    pub(crate) fn from_parts_unchecked(flavor: Flavor, perm: Vec<u8>, local: Vec<u8>) -> Self {
        SignedPermutation {
            flavor,
            perm,
            local,
        }
    }

    /// Pure coordinate permutation: source `j` goes to `perm[j]`.
    pub fn from_permutation(flavor: Flavor, perm: Vec<u8>) -> Result<Self> {
        let n = perm.len();
        Self::new(flavor, perm, vec![0; n])
    }

    /// Identity permutation with the given local action at every coordinate.
    pub fn from_local(flavor: Flavor, local: Vec<u8>) -> Result<Self> {
        let n = local.len();
        Self::new(flavor, (0..n as u8).collect(), local)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn local(&self) -> &[u8] {
        &self.local
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p as usize == i) && self.local.iter().all(|&l| l == 0)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.len(), other.len(), "composing signed permutations of different lengths");
        let n = self.len();
        let inv = self.inverse_perm();
        let perm = other.perm.iter().map(|&j| self.perm[j as usize]).collect();
        let local = (0..n)
            .map(|i| S3_COMPOSE[self.local[i] as usize][other.local[inv[i] as usize] as usize])
            .collect();
        SignedPermutation {
            flavor: self.flavor,
            perm,
            local,
        }
    }

    fn inverse_perm(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = j as u8;
        }
        inv
    }

    pub fn inverse(&self) -> SignedPermutation {
        let inv = self.inverse_perm();
        let local = (0..self.len())
            .map(|j| S3_INVERSE[self.local[self.perm[j] as usize] as usize])
            .collect();
        SignedPermutation {
            flavor: self.flavor,
            perm: inv,
            local,
        }
    }

    #[inline]
    pub(crate) fn apply_bits(&self, bits: u64) -> u64 {
        let n = self.len();
        let mut out = 0u64;
        for j in 0..n {
            let s = (bits >> shift_of(n, j)) & 3;
            if s == 0 {
                continue;
            }
            let t = self.perm[j] as usize;
            let img = S3[self.local[t] as usize][s as usize] as u64;
            out |= img << shift_of(n, t);
        }
        out
    }

    pub fn act(&self, x: &Word) -> Result<Word> {
        if x.len() != self.len() {
            return Err(CodeError::LengthMismatch {
                left: self.len(),
                right: x.len(),
            });
        }
        Ok(Word::from_bits_unchecked(x.len(), self.apply_bits(x.bits())))
    }

    /// Image of the point `3·i + (s − 1)` (coordinate `i`, nonzero symbol
    /// `s`) in the faithful action on `3n` points.
    pub(crate) fn point_image(&self) -> Vec<u8> {
        let n = self.len();
        let mut img = vec![0u8; 3 * n];
        for j in 0..n {
            let t = self.perm[j] as usize;
            for s in 1..4usize {
                let u = S3[self.local[t] as usize][s] as usize;
                img[3 * j + s - 1] = (3 * t + u - 1) as u8;
            }
        }
        img
    }

    pub(crate) fn from_point_image(flavor: Flavor, img: &[u8]) -> SignedPermutation {
        let n = img.len() / 3;
        let mut perm = vec![0u8; n];
        let mut local = vec![0u8; n];
        for j in 0..n {
            let t = img[3 * j] as usize / 3;
            perm[j] = t as u8;
            let mut p = [0u8; 4];
            for s in 1..4usize {
                p[s] = (img[3 * j + s - 1] as usize - 3 * t + 1) as u8;
            }
            local[t] = S3.iter().position(|q| *q == p).expect("local permutation") as u8;
        }
        SignedPermutation {
            flavor,
            perm,
            local,
        }
    }

    /// Cycle notation of the coordinate permutation (1-based) followed by
    /// the local actions, e.g. `(1 2)(3) [0,1,0]`.
    pub fn describe(&self) -> String {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut j = self.perm[start] as usize;
            while j != start {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.perm[j] as usize;
            }
            if cycle.len() > 1 {
                out.push('(');
                out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
                out.push(')');
            }
        }
        if out.is_empty() {
            out.push_str("()");
        }
        let mask: Vec<String> = self.local.iter().map(|l| l.to_string()).collect();
        format!("{} [{}]", out, mask.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation({} {})", self.flavor, self.describe())
    }
}

/// `|G| = 2^n·n!` for L, `|H| = 6^n·n!` for K.
pub fn group_order(flavor: Flavor, n: usize) -> u128 {
    let local: u128 = match flavor {
        Flavor::L => 2,
        Flavor::K => 6,
    };
    (1..=n as u128).map(|i| i * local).product()
}
