//! Additive codes as F2-subspaces of `L^n` (or `K^n`).
//!
//! A code is stored by its reduced row echelon basis over the packed
//! 2n-bit representation: each row's leading bit is a pivot that is zero in
//! every other row, and rows are sorted in decreasing order. Equal codeword
//! sets therefore give equal bases.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{CodeError, Result};
use crate::group::SignedPermutation;
use crate::symbol::Flavor;
use crate::word::{
    ewt_bits, full_mask, hwt_bits, inner_bits, quad_bits, shift_of, symbol_at, Word,
    MAX_LENGTH,
};

/// Largest rank for which codeword streaming is allowed by default.
pub const ENUMERATION_LIMIT: usize = 26;

#[inline]
fn leading_bit(v: u64) -> u32 {
    63 - v.leading_zeros()
}

/// Reduces `v` against a fully reduced echelon basis.
#[inline]
pub(crate) fn reduce_bits(basis: &[u64], mut v: u64) -> u64 {
    for &row in basis {
        if v >> leading_bit(row) & 1 == 1 {
            v ^= row;
        }
    }
    v
}

/// Inserts `v` into a fully reduced echelon basis; returns false when `v`
/// is already in the span. The basis stays sorted in decreasing order.
pub(crate) fn insert_bits(basis: &mut Vec<u64>, v: u64) -> bool {
    let v = reduce_bits(basis, v);
    if v == 0 {
        return false;
    }
    let p = leading_bit(v);
    for row in basis.iter_mut() {
        if *row >> p & 1 == 1 {
            *row ^= v;
        }
    }
    let at = basis.partition_point(|&r| r > v);
    basis.insert(at, v);
    true
}

pub(crate) fn echelon<I: IntoIterator<Item = u64>>(vectors: I) -> Vec<u64> {
    let mut basis = Vec::new();
    for v in vectors {
        insert_bits(&mut basis, v);
    }
    basis
}

/// Exchanges the two bits of every coordinate pair, so that
/// `inner(x, y) = parity(swap_pairs(x) & y)`.
#[inline]
pub(crate) fn swap_pairs(x: u64) -> u64 {
    let m = 0x5555_5555_5555_5555u64;
    ((x >> 1) & m) | ((x & m) << 1)
}

/// Basis of `{v : v·r = 0 for all rows r}` under the standard F2 dot product
/// on `nbits` bits.
fn nullspace(rows: &[u64], nbits: usize) -> Vec<u64> {
    let reduced = echelon(rows.iter().copied());
    let pivots: u64 = reduced.iter().fold(0, |acc, &r| acc | 1u64 << leading_bit(r));
    let mut out = Vec::new();
    for f in 0..nbits {
        if pivots >> f & 1 == 1 {
            continue;
        }
        let mut v = 1u64 << f;
        for &r in &reduced {
            if r >> f & 1 == 1 {
                v |= 1u64 << leading_bit(r);
            }
        }
        out.push(v);
    }
    echelon(out)
}

/// Visits every element of the span of `basis` in Gray-code order.
pub(crate) fn for_each_in_span(basis: &[u64], mut f: impl FnMut(u64)) {
    let r = basis.len();
    assert!(r < 64, "span too large to enumerate");
    let mut x = 0u64;
    f(x);
    for i in 1u64..(1u64 << r) {
        x ^= basis[i.trailing_zeros() as usize];
        f(x);
    }
}

/// Extracts the symbols at `coords` (in that order) into a packed word of
/// length `coords.len()`.
#[inline]
pub(crate) fn project_bits(bits: u64, n: usize, coords: &[usize]) -> u64 {
    coords
        .iter()
        .fold(0u64, |acc, &i| (acc << 2) | symbol_at(bits, n, i) as u64)
}

/// Mask of the bit pairs belonging to `coords` in a word of length `n`.
pub(crate) fn coords_mask(n: usize, coords: &[usize]) -> u64 {
    coords.iter().fold(0u64, |acc, &i| acc | 3u64 << shift_of(n, i))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearCode {
    flavor: Flavor,
    length: usize,
    basis: Vec<u64>,
}

impl LinearCode {
    pub(crate) fn from_echelon(flavor: Flavor, length: usize, basis: Vec<u64>) -> LinearCode {
        debug_assert!(basis.windows(2).all(|w| w[0] > w[1]));
        LinearCode {
            flavor,
            length,
            basis,
        }
    }

    /// Span of packed vectors; bits beyond the length are an error.
    pub fn from_bits<I: IntoIterator<Item = u64>>(
        flavor: Flavor,
        length: usize,
        vectors: I,
    ) -> Result<LinearCode> {
        if length > MAX_LENGTH {
            return Err(CodeError::LengthTooLarge(length));
        }
        let mask = full_mask(length);
        let mut basis = Vec::new();
        for v in vectors {
            if v & !mask != 0 {
                return Err(CodeError::InvalidParameter(format!(
                    "vector {v:#x} does not fit length {length}"
                )));
            }
            insert_bits(&mut basis, v);
        }
        Ok(LinearCode {
            flavor,
            length,
            basis,
        })
    }

    /// F2-span of the given words, all of length `length`.
    pub fn span(flavor: Flavor, length: usize, generators: &[Word]) -> Result<LinearCode> {
        for g in generators {
            if g.len() != length {
                return Err(CodeError::LengthMismatch {
                    left: length,
                    right: g.len(),
                });
            }
        }
        Self::from_bits(flavor, length, generators.iter().map(|g| g.bits()))
    }

    /// Span of words given as text, e.g. `["11w", "1w1"]`.
    pub fn from_strings(flavor: Flavor, generators: &[&str]) -> Result<LinearCode> {
        let words = generators
            .iter()
            .map(|s| Word::parse(s, flavor))
            .collect::<Result<Vec<_>>>()?;
        let length = words.first().map(|w| w.len()).ok_or_else(|| {
            CodeError::InvalidParameter("cannot infer length from no generators".into())
        })?;
        Self::span(flavor, length, &words)
    }

    pub fn zero(flavor: Flavor, length: usize) -> Result<LinearCode> {
        Self::from_bits(flavor, length, [])
    }

    /// The whole space `L^n`.
    pub fn full(flavor: Flavor, length: usize) -> Result<LinearCode> {
        Self::from_bits(flavor, length, (0..2 * length).map(|b| 1u64 << b))
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    /// Number of F2-generators `r`; the code has `2^r` words.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> u128 {
        1u128 << self.rank()
    }

    /// Dimension `r/2` as text: `0`, `1/2`, `1`, `3/2`, ...
    pub fn dimension_text(&self) -> String {
        let r = self.rank();
        if r.is_multiple_of(2) {
            (r / 2).to_string()
        } else {
            format!("{r}/2")
        }
    }

    pub fn basis(&self) -> Vec<Word> {
        self.basis
            .iter()
            .map(|&b| Word::from_bits_unchecked(self.length, b))
            .collect()
    }

    pub fn basis_bits(&self) -> &[u64] {
        &self.basis
    }

    /// Same codewords read with the other quadratic form.
    pub fn with_flavor(&self, flavor: Flavor) -> LinearCode {
        LinearCode {
            flavor,
            length: self.length,
            basis: self.basis.clone(),
        }
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(CodeError::FlavorMismatch {
                expected: self.flavor,
                found: other.flavor,
            });
        }
        if self.length != other.length {
            return Err(CodeError::LengthMismatch {
                left: self.length,
                right: other.length,
            });
        }
        Ok(())
    }

    pub fn contains(&self, x: &Word) -> bool {
        x.len() == self.length && self.contains_bits(x.bits())
    }

    pub(crate) fn contains_bits(&self, v: u64) -> bool {
        reduce_bits(&self.basis, v) == 0
    }

    /// Canonical representative of the coset `x + C`.
    pub fn reduce(&self, x: &Word) -> Result<Word> {
        if x.len() != self.length {
            return Err(CodeError::LengthMismatch {
                left: self.length,
                right: x.len(),
            });
        }
        Ok(Word::from_bits_unchecked(
            self.length,
            reduce_bits(&self.basis, x.bits()),
        ))
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.length == other.length && self.basis.iter().all(|&b| other.contains_bits(b))
    }

    fn guard(&self) -> Result<()> {
        if self.rank() > ENUMERATION_LIMIT {
            return Err(CodeError::EnumerationGuard {
                rank: self.rank(),
                limit: ENUMERATION_LIMIT,
            });
        }
        Ok(())
    }

    /// All `2^r` codewords in Gray-code order.
    pub fn codewords(&self) -> Result<Vec<Word>> {
        self.guard()?;
        let mut out = Vec::with_capacity(1 << self.rank());
        for_each_in_span(&self.basis, |b| {
            out.push(Word::from_bits_unchecked(self.length, b))
        });
        Ok(out)
    }

    /// Visits the packed codewords, ignoring the enumeration guard.
    pub(crate) fn for_each_bits(&self, f: impl FnMut(u64)) {
        for_each_in_span(&self.basis, f)
    }

    pub(crate) fn codeword_bits(&self) -> Result<Vec<u64>> {
        self.guard()?;
        let mut out = Vec::with_capacity(1 << self.rank());
        self.for_each_bits(|b| out.push(b));
        Ok(out)
    }

    pub fn dual(&self) -> LinearCode {
        let rows: Vec<u64> = self.basis.iter().map(|&b| swap_pairs(b)).collect();
        LinearCode {
            flavor: self.flavor,
            length: self.length,
            basis: nullspace(&rows, 2 * self.length),
        }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let b = &self.basis;
        (0..b.len()).all(|i| (i + 1..b.len()).all(|j| inner_bits(b[i], b[j]) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        self.rank() == self.length && self.is_self_orthogonal()
    }

    /// Every codeword has `q = 0`. Since `q(x+y) = q(x) + q(y) + x·y`, this
    /// holds exactly when the basis is singular and pairwise orthogonal.
    pub fn is_even(&self) -> bool {
        self.is_self_orthogonal() && self.basis.iter().all(|&b| quad_bits(b, self.flavor) == 0)
    }

    /// Every codeword has even Hamming weight (the Kleinian form vanishes).
    pub fn is_hamming_even(&self) -> bool {
        self.is_self_orthogonal() && self.basis.iter().all(|&b| hwt_bits(b).is_multiple_of(2))
    }

    fn min_over(&self, weight: impl Fn(u64) -> u32) -> Result<u32> {
        if self.rank() == 0 {
            return Err(CodeError::ZeroCode);
        }
        self.guard()?;
        let mut best = u32::MAX;
        self.for_each_bits(|b| {
            if b != 0 {
                best = best.min(weight(b));
            }
        });
        Ok(best)
    }

    pub fn min_ewt(&self) -> Result<u32> {
        self.min_over(ewt_bits)
    }

    pub fn min_hwt(&self) -> Result<u32> {
        self.min_over(hwt_bits)
    }

    /// `C ⊕ D` on concatenated coordinates.
    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.flavor != other.flavor {
            return Err(CodeError::FlavorMismatch {
                expected: self.flavor,
                found: other.flavor,
            });
        }
        let n = self.length + other.length;
        if n > MAX_LENGTH {
            return Err(CodeError::LengthTooLarge(n));
        }
        let shift = 2 * other.length;
        let left = self.basis.iter().map(|&b| if shift == 64 { 0 } else { b << shift });
        Self::from_bits(self.flavor, n, left.chain(other.basis.iter().copied()))
    }

    /// Direct sum of `count` copies.
    pub fn power(&self, count: usize) -> Result<LinearCode> {
        let mut out = LinearCode::zero(self.flavor, 0)?;
        for _ in 0..count {
            out = out.direct_sum(self)?;
        }
        Ok(out)
    }

    fn check_coords(&self, coords: &[usize]) -> Result<()> {
        let mut seen = BTreeSet::new();
        for &c in coords {
            if c >= self.length || !seen.insert(c) {
                return Err(CodeError::InvalidParameter(format!(
                    "invalid coordinate list {coords:?} for length {}",
                    self.length
                )));
            }
        }
        Ok(())
    }

    /// Projection onto `coords`, in the given order (puncturing the rest).
    pub fn project(&self, coords: &[usize]) -> Result<LinearCode> {
        self.check_coords(coords)?;
        Self::from_bits(
            self.flavor,
            coords.len(),
            self.basis
                .iter()
                .map(|&b| project_bits(b, self.length, coords)),
        )
    }

    /// Subcode of words vanishing outside `coords`, as a code on `coords`.
    pub fn shorten(&self, coords: &[usize]) -> Result<LinearCode> {
        self.check_coords(coords)?;
        let outside = full_mask(self.length) & !coords_mask(self.length, coords);
        let kernel = self.kernel_of_mask(outside);
        Self::from_bits(
            self.flavor,
            coords.len(),
            kernel.iter().map(|&b| project_bits(b, self.length, coords)),
        )
    }

    /// Basis of `{c ∈ C : c & mask = 0}`.
    pub(crate) fn kernel_of_mask(&self, mask: u64) -> Vec<u64> {
        let mut rows: Vec<u64> = Vec::new();
        let mut kernel = Vec::new();
        for &b in &self.basis {
            let mut v = b;
            for &r in &rows {
                if v >> leading_bit(r & mask) & 1 == 1 {
                    v ^= r;
                }
            }
            if v & mask != 0 {
                rows.push(v);
            } else {
                kernel.push(v);
            }
        }
        echelon(kernel)
    }

    /// `C ∩ x^⊥`.
    pub fn orthogonal_subcode(&self, x: &Word) -> Result<LinearCode> {
        if x.len() != self.length {
            return Err(CodeError::LengthMismatch {
                left: self.length,
                right: x.len(),
            });
        }
        let sx = swap_pairs(x.bits());
        let mut kept = Vec::new();
        let mut odd: Option<u64> = None;
        for &b in &self.basis {
            if (sx & b).count_ones().is_multiple_of(2) {
                kept.push(b);
            } else if let Some(o) = odd {
                kept.push(b ^ o);
            } else {
                odd = Some(b);
            }
        }
        Self::from_bits(self.flavor, self.length, kept)
    }

    /// Image under a signed permutation.
    pub fn image(&self, g: &SignedPermutation) -> Result<LinearCode> {
        if g.len() != self.length {
            return Err(CodeError::LengthMismatch {
                left: self.length,
                right: g.len(),
            });
        }
        Self::from_bits(
            self.flavor,
            self.length,
            self.basis.iter().map(|&b| g.apply_bits(b)),
        )
    }

    /// Sum `C + D`.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Self::from_bits(
            self.flavor,
            self.length,
            self.basis.iter().chain(other.basis.iter()).copied(),
        )
    }

    /// Subcode spanned by codewords of Euclidean weight at most `k`.
    pub fn weight_k_subcode(&self, k: u32) -> Result<LinearCode> {
        self.guard()?;
        let mut basis = Vec::new();
        self.for_each_bits(|b| {
            if b != 0 && ewt_bits(b) <= k {
                insert_bits(&mut basis, b);
            }
        });
        Ok(Self::from_echelon(self.flavor, self.length, basis))
    }

    /// Finest decomposition into a direct sum. Each component is returned
    /// with its sorted support and the projection of `C` onto it; components
    /// are ordered by their first coordinate.
    ///
    /// Works on the binary matroid of the echelon basis: bits joined by a
    /// row form one connected piece, and the two bits of a coordinate always
    /// travel together.
    pub fn decompose(&self) -> Vec<(Vec<usize>, LinearCode)> {
        let n = self.length;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        // bit b belongs to coordinate n - 1 - b/2
        let coord_of = |bit: u32| n - 1 - (bit as usize) / 2;
        for &row in &self.basis {
            let p = coord_of(leading_bit(row));
            let mut rest = row;
            while rest != 0 {
                let b = rest.trailing_zeros();
                rest &= rest - 1;
                let c = coord_of(b);
                let (a, z) = (find(&mut parent, p), find(&mut parent, c));
                if a != z {
                    parent[a.max(z)] = a.min(z);
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_index = vec![usize::MAX; n];
        for i in 0..n {
            let r = find(&mut parent, i);
            if root_index[r] == usize::MAX {
                root_index[r] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[root_index[r]].push(i);
        }
        blocks
            .into_iter()
            .map(|support| {
                let part = self.project(&support).expect("valid support");
                (support, part)
            })
            .collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.decompose().len() <= 1
    }

    /// Splits off the weight-1 part and decomposes the weight-2 subcode.
    pub fn split_weight_structure(&self) -> Result<WeightStructure> {
        if !self.is_self_orthogonal() {
            return Err(CodeError::NotSelfOrthogonal);
        }
        let n = self.length;
        let gamma: Vec<usize> = (0..n)
            .filter(|&i| self.contains_bits(1u64 << shift_of(n, i)))
            .collect();
        self.guard()?;
        let gamma_mask = coords_mask(n, &gamma);
        let mut weight2 = Vec::new();
        self.for_each_bits(|b| {
            if b & gamma_mask == 0 && ewt_bits(b) == 2 {
                insert_bits(&mut weight2, b);
            }
        });
        let b = Self::from_echelon(self.flavor, n, weight2);
        let mut xi = Vec::new();
        let mut deltas = Vec::new();
        let mut free = Vec::new();
        for (support, part) in b.decompose() {
            if support.len() == 1 {
                let i = support[0];
                if gamma.contains(&i) {
                    continue;
                }
                if part.rank() == 0 {
                    free.push(i);
                } else {
                    xi.push(i);
                }
            } else {
                deltas.push(support);
            }
        }
        let rest_rank = self.rank() - gamma.len();
        Ok(WeightStructure {
            gamma_coordinates: gamma,
            xi_coordinates: xi,
            delta_components: deltas,
            free_coordinates: free,
            weight2_rank: b.rank(),
            glue_rank: rest_rank - b.rank(),
        })
    }

    /// All self-dual codes `D` with `C ⊆ D ⊆ C^⊥`.
    pub fn self_dual_extensions(&self) -> Result<Vec<LinearCode>> {
        self.lagrangian_extensions(false)
    }

    /// All even self-dual codes containing `C`; empty unless `C` is even.
    pub fn even_self_dual_extensions(&self) -> Result<Vec<LinearCode>> {
        self.lagrangian_extensions(true)
    }

    fn lagrangian_extensions(&self, even: bool) -> Result<Vec<LinearCode>> {
        if !self.is_self_orthogonal() {
            return Err(CodeError::NotSelfOrthogonal);
        }
        if even && !self.is_even() {
            return Ok(Vec::new());
        }
        let mut level: BTreeSet<LinearCode> = BTreeSet::from([self.clone()]);
        for _ in self.rank()..self.length {
            let mut next = BTreeSet::new();
            for code in &level {
                for v in code.isotropic_coset_reps(even) {
                    let mut basis = code.basis.clone();
                    insert_bits(&mut basis, v);
                    next.insert(Self::from_echelon(self.flavor, self.length, basis));
                }
            }
            level = next;
        }
        Ok(level.into_iter().collect())
    }

    /// One representative per nonzero coset of `C` in `C^⊥`, restricted to
    /// `q = 0` cosets when `singular` is set (only meaningful for even `C`).
    pub(crate) fn isotropic_coset_reps(&self, singular: bool) -> Vec<u64> {
        let complement = quotient_basis(&self.dual().basis, &self.basis);
        let mut out = Vec::new();
        for_each_in_span(&complement, |v| {
            if v != 0 && (!singular || quad_bits(v, self.flavor) == 0) {
                out.push(v);
            }
        });
        out
    }

    /// `C_0 ∪ (C_0 + y)` with `C_0 = C ∩ x^⊥` and `y` the smallest word of
    /// odd Euclidean weight in `x + C`.
    pub fn even_odd_transfer(&self, x: &Word) -> Result<LinearCode> {
        if !(self.is_self_dual() && self.is_even()) {
            return Err(CodeError::NotEvenSelfDual);
        }
        if x.len() != self.length {
            return Err(CodeError::LengthMismatch {
                left: self.length,
                right: x.len(),
            });
        }
        if self.contains(x) {
            return Err(CodeError::ZeroCoset);
        }
        let y = self
            .odd_representatives(x)?
            .into_iter()
            .min()
            .ok_or(CodeError::NoOddRepresentative)?;
        self.transfer_with(x, y)
    }

    pub(crate) fn odd_representatives(&self, x: &Word) -> Result<Vec<u64>> {
        self.guard()?;
        let mut reps = Vec::new();
        self.for_each_bits(|c| {
            let y = c ^ x.bits();
            if ewt_bits(y) % 2 == 1 {
                reps.push(y);
            }
        });
        Ok(reps)
    }

    pub(crate) fn transfer_with(&self, x: &Word, y: u64) -> Result<LinearCode> {
        let c0 = self.orthogonal_subcode(x)?;
        let mut basis = c0.basis;
        insert_bits(&mut basis, y);
        Ok(Self::from_echelon(self.flavor, self.length, basis))
    }

    /// Text form: header `L n=<len>` then one basis word per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} n={}\n", self.flavor.tag(), self.length);
        for w in self.basis() {
            s.push_str(&w.format(self.flavor));
            s.push('\n');
        }
        s
    }

    /// Parses the text form. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<LinearCode> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(CodeError::Parse {
            line: 1,
            message: "missing header".into(),
        })?;
        let (tag, len) = header.split_once(char::is_whitespace).ok_or(CodeError::Parse {
            line: hline,
            message: format!("malformed header `{header}`"),
        })?;
        let flavor = match tag {
            "L" => Flavor::L,
            "K" => Flavor::K,
            _ => {
                return Err(CodeError::Parse {
                    line: hline,
                    message: format!("unknown flavor `{tag}`"),
                })
            }
        };
        let length: usize = len
            .trim()
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or(CodeError::Parse {
                line: hline,
                message: format!("malformed length in `{header}`"),
            })?;
        if length > MAX_LENGTH {
            return Err(CodeError::LengthTooLarge(length));
        }
        let mut words = Vec::new();
        for (no, line) in lines {
            let w = Word::parse(line, flavor).map_err(|e| CodeError::Parse {
                line: no,
                message: e.to_string(),
            })?;
            if w.len() != length {
                return Err(CodeError::Parse {
                    line: no,
                    message: format!("word `{line}` has length {}, expected {length}", w.len()),
                });
            }
            words.push(w);
        }
        Self::span(flavor, length, &words)
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.basis().iter().map(|w| w.format(self.flavor)).collect();
        write!(f, "{}[{}]{{{}}}", self.flavor, self.length, words.join(","))
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Vectors completing `sub` to a basis of `sup` (both echelon, `sub ⊆ sup`),
/// reduced modulo `sub`.
pub(crate) fn quotient_basis(sup: &[u64], sub: &[u64]) -> Vec<u64> {
    let mut combined = sub.to_vec();
    let mut out = Vec::new();
    for &v in sup {
        let r = reduce_bits(&combined, v);
        if r != 0 {
            insert_bits(&mut combined, r);
            out.push(r);
        }
    }
    echelon(out.into_iter().map(|v| reduce_bits(sub, v)))
}

/// Result of splitting a self-orthogonal code by its short words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightStructure {
    /// Coordinates carrying a `Γ1` factor (unit words `(0,…,1,…,0)`).
    pub gamma_coordinates: Vec<usize>,
    /// Coordinates carrying a `Ξ1` component of the weight-2 subcode.
    pub xi_coordinates: Vec<usize>,
    /// Supports of the `Δ_m` components (`m ≥ 2`) of the weight-2 subcode.
    pub delta_components: Vec<Vec<usize>>,
    /// Remaining coordinates, untouched by words of weight ≤ 2.
    pub free_coordinates: Vec<usize>,
    pub weight2_rank: usize,
    /// Rank of the glue code `D / B` after removing the `Γ1` part.
    pub glue_rank: usize,
}

impl WeightStructure {
    pub fn gamma_count(&self) -> usize {
        self.gamma_coordinates.len()
    }

    pub fn xi_count(&self) -> usize {
        self.xi_coordinates.len()
    }

    /// Sizes of the `Δ` components, largest first.
    pub fn delta_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.delta_components.iter().map(|c| c.len()).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn glue_order(&self) -> u128 {
        1u128 << self.glue_rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(gens: &[&str]) -> LinearCode {
        LinearCode::from_strings(Flavor::L, gens).unwrap()
    }

    fn upsilon3() -> LinearCode {
        code(&["11w", "1w1", "w11"])
    }

    #[test]
    fn span_is_canonical() {
        let a = upsilon3();
        let b = code(&["WW0", "0WW", "www"]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 3);
        assert_eq!(a.dimension_text(), "3/2");
        assert_eq!(a.size(), 8);
    }

    #[test]
    fn upsilon2_codewords() {
        let c = code(&["1w", "w1"]);
        let mut words: Vec<String> = c
            .codewords()
            .unwrap()
            .iter()
            .map(|w| w.format(Flavor::L))
            .collect();
        words.sort();
        assert_eq!(words, ["00", "1w", "WW", "w1"]);
    }

    #[test]
    fn duals() {
        let z = LinearCode::zero(Flavor::L, 3).unwrap();
        assert_eq!(z.dual(), LinearCode::full(Flavor::L, 3).unwrap());
        let xi = code(&["w"]);
        assert_eq!(xi.dual(), xi);
        assert!(upsilon3().is_self_dual());
        let delta3 = code(&["110", "011"]);
        let d = delta3.dual();
        assert!(delta3.is_subcode_of(&d));
        assert_eq!(d.rank() - delta3.rank(), 2);
    }

    #[test]
    fn predicates() {
        let gamma = code(&["1"]);
        assert!(gamma.is_self_dual() && !gamma.is_even());
        let xi = code(&["w"]);
        assert!(xi.is_self_dual() && xi.is_even());
        let ups2 = code(&["1w", "w1"]);
        assert!(ups2.is_self_dual() && !ups2.is_even());
        assert!(upsilon3().is_even());
        assert_eq!(upsilon3().min_ewt().unwrap(), 4);
        assert_eq!(gamma.min_ewt().unwrap(), 1);
        assert_eq!(
            LinearCode::zero(Flavor::L, 2).unwrap().min_ewt(),
            Err(CodeError::ZeroCode)
        );
    }

    #[test]
    fn shortening_and_projection() {
        let c = upsilon3();
        let s = c.shorten(&[0, 1]).unwrap();
        assert_eq!(s, code(&["WW"]));
        let p = c.project(&[0, 1]).unwrap();
        assert_eq!(p.rank(), 3);
    }

    #[test]
    fn decomposition() {
        let gamma = code(&["1"]);
        let dplus = code(&["11", "ww"]);
        let c = gamma.power(2).unwrap().direct_sum(&dplus).unwrap();
        let parts = c.decompose();
        let sizes: Vec<usize> = parts.iter().map(|(s, _)| s.len()).collect();
        assert_eq!(sizes, [1, 1, 2]);
        assert_eq!(upsilon3().decompose().len(), 1);
        let z = LinearCode::zero(Flavor::L, 2).unwrap();
        assert_eq!(z.decompose().len(), 2);
        let xi2 = code(&["w"]).power(2).unwrap();
        assert_eq!(xi2.decompose().len(), 2);
    }

    #[test]
    fn weight_structure() {
        let gamma = code(&["1"]);
        let dplus = code(&["11", "ww"]);
        let c = gamma.power(2).unwrap().direct_sum(&dplus).unwrap();
        let s = c.split_weight_structure().unwrap();
        assert_eq!(s.gamma_count(), 2);
        assert_eq!(s.delta_sizes(), [2]);
        assert_eq!(s.glue_order(), 2);
        let xi3 = code(&["w"]).power(3).unwrap();
        let s = xi3.split_weight_structure().unwrap();
        assert_eq!((s.gamma_count(), s.xi_count(), s.glue_rank), (0, 3, 0));
        let s = upsilon3().split_weight_structure().unwrap();
        assert_eq!(s.weight2_rank, 0);
        assert_eq!(s.glue_rank, 3);
        assert_eq!(s.free_coordinates, [0, 1, 2]);
    }

    #[test]
    fn extensions() {
        let z1 = LinearCode::zero(Flavor::L, 1).unwrap();
        assert_eq!(z1.self_dual_extensions().unwrap().len(), 3);
        assert_eq!(z1.even_self_dual_extensions().unwrap().len(), 2);
        let u3 = upsilon3();
        assert_eq!(u3.self_dual_extensions().unwrap(), vec![u3.clone()]);
    }

    #[test]
    fn even_to_odd() {
        let xi2 = code(&["w"]).power(2).unwrap();
        let x = Word::parse("10", Flavor::L).unwrap();
        let d = xi2.even_odd_transfer(&x).unwrap();
        assert_eq!(d, code(&["1"]).direct_sum(&code(&["w"])).unwrap());
        let dplus = code(&["11", "ww"]);
        let d = dplus.even_odd_transfer(&x).unwrap();
        assert_eq!(d, code(&["1"]).power(2).unwrap());
        assert_eq!(
            dplus.even_odd_transfer(&Word::parse("WW", Flavor::L).unwrap()),
            Err(CodeError::ZeroCoset)
        );
    }

    #[test]
    fn text_round_trip() {
        let c = upsilon3();
        let text = c.to_text();
        assert!(text.starts_with("L n=3\n"));
        assert_eq!(LinearCode::parse(&text).unwrap(), c);
        assert!(LinearCode::parse("L n=2\n1\n").is_err());
        assert!(LinearCode::parse("X n=2\n").is_err());
    }
}
