//! Classification of self-dual L-codes up to equivalence.
//!
//! Self-dual codes are the Lagrangian subgroups of `L^n`. They are built
//! rank by rank from the zero code: at every level each class
//! representative is extended by one vector of `C^⊥ ∖ C`, cosets are
//! fused under `Aut(C)`, and the children are deduplicated by canonical
//! form. For even codes only `q`-singular vectors are used.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::code::{insert_bits, reduce_bits, LinearCode};
use crate::enumerators::{euclid_from_swe, swe};
use crate::error::{CodeError, Result};
use crate::group::group_order;
use crate::poly::{Poly, AB, XYZ};
use crate::symbol::Flavor;
use crate::symmetry::{analyze, aut_group, canonical_code, max_length, AutGroup};
use crate::word::Word;

/// One equivalence class of self-dual codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    /// Canonical representative.
    pub code: LinearCode,
    pub even: bool,
    pub min_ewt: u32,
    pub aut_order: u128,
    pub orbit_size: u128,
    pub swe: Poly,
    pub euclid: Poly,
}

impl ClassRecord {
    /// Builds the record of the class of `code`.
    pub fn from_code(code: &LinearCode) -> Result<ClassRecord> {
        let (form, aut) = analyze(code)?;
        Self::from_canonical(form.code, &aut)
    }

    fn from_canonical(code: LinearCode, aut: &AutGroup) -> Result<ClassRecord> {
        let swe = swe(&code)?;
        let euclid = euclid_from_swe(&swe);
        Ok(ClassRecord {
            even: code.is_even(),
            min_ewt: code.min_ewt()?,
            aut_order: aut.order(),
            orbit_size: aut.orbit_size(),
            swe,
            euclid,
            code,
        })
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    /// Number of indecomposable direct summands.
    pub fn component_count(&self) -> usize {
        self.code.decompose().len()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.component_count() == 1
    }

    /// Canonical forms of the indecomposable summands, sorted.
    pub fn signature(&self) -> Result<Vec<LinearCode>> {
        let mut parts = self
            .code
            .decompose()
            .into_iter()
            .map(|(_, c)| canonical_code(&c))
            .collect::<Result<Vec<_>>>()?;
        parts.sort();
        Ok(parts)
    }

    /// `n;even;d;autOrder;orbitSize;basis;swe;EW`.
    pub fn to_line(&self) -> String {
        let basis: Vec<String> = self
            .code
            .basis()
            .iter()
            .map(|w| w.format(Flavor::L))
            .collect();
        format!(
            "{};{};{};{};{};{};{};{}",
            self.len(),
            if self.even { 'Y' } else { 'N' },
            self.min_ewt,
            self.aut_order,
            self.orbit_size,
            basis.join(","),
            self.swe,
            self.euclid
        )
    }

    pub fn parse_line(line: &str, line_no: usize) -> Result<ClassRecord> {
        let err = |message: String| CodeError::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.trim().split(';').collect();
        if fields.len() != 8 {
            return Err(err(format!("expected 8 fields, found {}", fields.len())));
        }
        let num = |s: &str, what: &str| -> Result<u128> {
            s.trim()
                .parse()
                .map_err(|_| err(format!("bad {what} `{s}`")))
        };
        let n = num(fields[0], "length")? as usize;
        let even = match fields[1].trim() {
            "Y" => true,
            "N" => false,
            other => return Err(err(format!("bad evenness flag `{other}`"))),
        };
        let words: Vec<Word> = if fields[5].trim().is_empty() {
            Vec::new()
        } else {
            fields[5]
                .split(',')
                .map(|w| Word::parse(w.trim(), Flavor::L))
                .collect::<Result<_>>()
                .map_err(|e| err(e.to_string()))?
        };
        let code = LinearCode::span(Flavor::L, n, &words).map_err(|e| err(e.to_string()))?;
        Ok(ClassRecord {
            code,
            even,
            min_ewt: num(fields[2], "minimum weight")? as u32,
            aut_order: num(fields[3], "automorphism order")?,
            orbit_size: num(fields[4], "orbit size")?,
            swe: Poly::parse(fields[6], XYZ).map_err(|e| err(e.to_string()))?,
            euclid: Poly::parse(fields[7], AB).map_err(|e| err(e.to_string()))?,
        })
    }

    /// Recomputes every derived field from the basis and compares.
    pub fn verify(&self) -> Result<bool> {
        Ok(*self == ClassRecord::from_code(&self.code)?)
    }
}

impl fmt::Display for ClassRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

/// Parses a database, skipping blank lines and `#` comments.
pub fn parse_database(text: &str) -> Result<Vec<ClassRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| ClassRecord::parse_line(l, i + 1))
        .collect()
}

pub fn format_database(records: &[ClassRecord]) -> String {
    records.iter().map(|r| r.to_line() + "\n").collect()
}

fn check_limit(n: usize) -> Result<()> {
    let limit = max_length();
    if n > limit {
        return Err(CodeError::LimitExceeded { length: n, limit });
    }
    Ok(())
}

/// Representatives of the `Aut(C)`-orbits on the nonzero cosets of `C` in
/// `C^⊥` (singular cosets only when `even`).
pub(crate) fn coset_orbit_reps(code: &LinearCode, aut: &AutGroup, even: bool) -> Vec<u64> {
    let basis = code.basis_bits();
    let reps: Vec<u64> = code
        .isotropic_coset_reps(even)
        .into_iter()
        .map(|v| reduce_bits(basis, v))
        .collect();
    orbit_reps(basis, &reps, aut)
}

/// Orbit representatives (smallest reduced word) of `aut` acting on the
/// cosets `reps` of the code with echelon basis `basis`.
fn orbit_reps(basis: &[u64], reps: &[u64], aut: &AutGroup) -> Vec<u64> {
    let index: HashMap<u64, usize> = reps.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..reps.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for g in aut.generators() {
        for (i, &v) in reps.iter().enumerate() {
            let w = reduce_bits(basis, g.apply_bits(v));
            let j = index[&w];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut best: BTreeMap<usize, u64> = BTreeMap::new();
    for (i, &v) in reps.iter().enumerate() {
        let r = find(&mut parent, i);
        let e = best.entry(r).or_insert(v);
        *e = (*e).min(v);
    }
    let mut out: Vec<u64> = best.into_values().collect();
    out.sort_unstable();
    out
}

fn extend(code: &LinearCode, v: u64) -> LinearCode {
    let mut basis = code.basis_bits().to_vec();
    insert_bits(&mut basis, v);
    LinearCode::from_bits(code.flavor(), code.len(), basis).expect("same length")
}

/// Classes of self-orthogonal codes of every rank `0..=n`, level by level.
/// `visit` sees each completed level.
fn build_levels(
    n: usize,
    even: bool,
    mut visit: impl FnMut(usize, &[(LinearCode, AutGroup)]),
) -> Result<Vec<(LinearCode, AutGroup)>> {
    check_limit(n)?;
    let zero = LinearCode::zero(Flavor::L, n)?;
    let (form, aut) = analyze(&zero)?;
    let mut level = vec![(form.code, aut)];
    visit(0, &level);
    for r in 0..n {
        let children: Vec<Vec<LinearCode>> = level
            .par_iter()
            .map(|(code, aut)| {
                coset_orbit_reps(code, aut, even)
                    .into_iter()
                    .map(|v| canonical_code(&extend(code, v)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let unique: BTreeSet<LinearCode> = children.into_iter().flatten().collect();
        level = unique
            .into_par_iter()
            .map(|c| aut_group(&c).map(|a| (c, a)))
            .collect::<Result<_>>()?;
        visit(r + 1, &level);
    }
    Ok(level)
}

fn sort_records(records: &mut [ClassRecord]) {
    records.sort_by(|a, b| b.min_ewt.cmp(&a.min_ewt).then_with(|| a.code.cmp(&b.code)));
}

/// One record per equivalence class of (even) self-dual codes of length
/// `n`, sorted by decreasing minimum weight and then by canonical basis.
pub fn classify_self_dual(n: usize, even_only: bool) -> Result<Vec<ClassRecord>> {
    if n == 0 {
        return Err(CodeError::InvalidParameter("length must be positive".into()));
    }
    let top = build_levels(n, even_only, |_, _| {})?;
    let mut records = top
        .into_par_iter()
        .map(|(c, a)| ClassRecord::from_canonical(c, &a))
        .collect::<Result<Vec<_>>>()?;
    sort_records(&mut records);
    Ok(records)
}

/// Number of classes of (even) self-orthogonal codes of each rank.
pub fn self_orthogonal_class_counts(n: usize, even: bool) -> Result<Vec<usize>> {
    let mut counts = Vec::new();
    build_levels(n, even, |_, level| counts.push(level.len()))?;
    Ok(counts)
}

/// `M(n) = Π_{i=1}^n (2^i + 1)`: the number of distinct self-dual codes.
pub fn mass(n: usize) -> BigInt {
    (1..=n).map(|i| (BigInt::from(1) << i) + 1).product()
}

/// `M_e(n) = Π_{i=0}^{n−1} (2^i + 1)`: the number of distinct even
/// self-dual codes.
pub fn even_mass(n: usize) -> BigInt {
    (0..n).map(|i| (BigInt::from(1) << i) + 1).product()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MassReport {
    pub n: usize,
    pub even_only: bool,
    pub class_sum: BigInt,
    pub expected: BigInt,
}

impl MassReport {
    pub fn matches(&self) -> bool {
        self.class_sum == self.expected
    }

    pub fn deficit(&self) -> BigInt {
        &self.expected - &self.class_sum
    }
}

impl fmt::Display for MassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.matches() {
            write!(f, "{} OK", self.class_sum)
        } else {
            write!(
                f,
                "{} MISMATCH expected {} deficit {}",
                self.class_sum,
                self.expected,
                self.deficit()
            )
        }
    }
}

/// Compares `Σ |G| / |Aut(C)|` over the records with the mass formula.
pub fn mass_check(records: &[ClassRecord], n: usize, even_only: bool) -> MassReport {
    let order = BigInt::from(group_order(Flavor::L, n));
    let class_sum = records
        .iter()
        .map(|r| &order / BigInt::from(r.aut_order))
        .sum();
    MassReport {
        n,
        even_only,
        class_sum,
        expected: if even_only { even_mass(n) } else { mass(n) },
    }
}

/// Counts distinct (not up to equivalence) self-dual codes by walking all
/// self-orthogonal codes. Only feasible for `n ≤ 4`.
pub fn count_distinct_self_dual(n: usize, even_only: bool) -> Result<usize> {
    if n > 4 {
        return Err(CodeError::LimitExceeded { length: n, limit: 4 });
    }
    let mut level: BTreeSet<LinearCode> = BTreeSet::from([LinearCode::zero(Flavor::L, n)?]);
    for _ in 0..n {
        level = level
            .iter()
            .flat_map(|c| {
                c.isotropic_coset_reps(even_only)
                    .into_iter()
                    .map(move |v| extend(c, v))
            })
            .collect();
    }
    Ok(level.len())
}

/// Histogram `d ↦ number of classes`.
pub fn census_by_min_weight(records: &[ClassRecord]) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for r in records {
        *out.entry(r.min_ewt).or_insert(0) += 1;
    }
    out
}

/// Number of classes that do not split as a direct sum.
pub fn indecomposable_count(records: &[ClassRecord]) -> usize {
    records.iter().filter(|r| r.is_indecomposable()).count()
}

/// Upper bound on the minimum Euclidean weight: `n + 1` in general and
/// `2⌊n/3⌋ + 2` for even codes.
pub fn extremal_bound(n: usize, even_only: bool) -> u32 {
    if even_only {
        2 * (n as u32 / 3) + 2
    } else {
        n as u32 + 1
    }
}

/// Sharper bound for self-dual codes: `2⌊n/3⌋ + 3` when `n ≡ 2 (mod 3)`,
/// otherwise `2⌊n/3⌋ + 2`.
pub fn sharpened_bound(n: usize) -> u32 {
    let base = 2 * (n as u32 / 3);
    if n % 3 == 2 {
        base + 3
    } else {
        base + 2
    }
}

/// Records meeting [`extremal_bound`].
pub fn extremal_records(records: &[ClassRecord], n: usize, even_only: bool) -> Vec<ClassRecord> {
    let bound = extremal_bound(n, even_only);
    records
        .iter()
        .filter(|r| r.len() == n && r.min_ewt == bound && (r.even || !even_only))
        .cloned()
        .collect()
}

pub fn find_extremal(n: usize, even_only: bool) -> Result<Vec<ClassRecord>> {
    let records = classify_self_dual(n, even_only)?;
    Ok(extremal_records(&records, n, even_only))
}

/// One `G`-class of pairs `(C, [x])` with `C` even self-dual.
#[derive(Debug, Clone)]
pub struct PairClass {
    pub even_code: LinearCode,
    pub coset: Word,
    /// Canonical form of `C_0 ∪ (C_0 + y)`.
    pub image: LinearCode,
}

#[derive(Debug, Clone)]
pub struct EvenOddReport {
    pub n: usize,
    pub pairs: Vec<PairClass>,
    /// For every non-even class, the number of pair classes mapping to it.
    pub hits: BTreeMap<LinearCode, usize>,
    pub failures: Vec<String>,
}

impl EvenOddReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the transfer between even and non-even self-dual codes: every
/// `Aut(C)`-class of nonzero cosets of an even class `C` yields a non-even
/// self-dual code, and every non-even class is reached once or twice.
pub fn even_odd_census(
    even_records: &[ClassRecord],
    all_records: &[ClassRecord],
) -> Result<EvenOddReport> {
    let n = even_records
        .first()
        .or(all_records.first())
        .map(|r| r.len())
        .unwrap_or(0);
    let mut pairs = Vec::new();
    for rec in even_records {
        let code = &rec.code;
        let aut = aut_group(code)?;
        let full = LinearCode::full(Flavor::L, n)?;
        let basis = code.basis_bits();
        let mut reps: Vec<u64> = Vec::new();
        crate::code::for_each_in_span(
            &crate::code::quotient_basis(full.basis_bits(), basis),
            |v| {
                if v != 0 {
                    reps.push(reduce_bits(basis, v));
                }
            },
        );
        for x in orbit_reps(basis, &reps, &aut) {
            let word = Word::from_bits(n, x)?;
            let image = canonical_code(&code.even_odd_transfer(&word)?)?;
            pairs.push(PairClass {
                even_code: code.clone(),
                coset: word,
                image,
            });
        }
    }
    let mut hits: BTreeMap<LinearCode, usize> = all_records
        .iter()
        .filter(|r| !r.even)
        .map(|r| (r.code.clone(), 0))
        .collect();
    let mut failures = Vec::new();
    for p in &pairs {
        match hits.get_mut(&p.image) {
            Some(h) => *h += 1,
            None => failures.push(format!(
                "pair ({:?}, {}) maps outside the non-even classes",
                p.even_code,
                p.coset.format(Flavor::L)
            )),
        }
    }
    for (code, &h) in &hits {
        if !(1..=2).contains(&h) {
            failures.push(format!("class {code:?} reached by {h} pair classes"));
        }
    }
    Ok(EvenOddReport {
        n,
        pairs,
        hits,
        failures,
    })
}

/// Number of `Aut(C)`-classes of pairs `(C, Δ_k)` with `Δ_k ⊆ C`, summed
/// over the even classes. For `k = 1` every coordinate counts.
pub fn delta_pair_count(even_records: &[ClassRecord], k: usize) -> Result<usize> {
    let mut total = 0;
    for rec in even_records {
        let code = &rec.code;
        let n = code.len();
        if k == 0 || k > n {
            continue;
        }
        let pair_in_code = |i: usize, j: usize| -> bool {
            let mut w = Word::zero(n).expect("length");
            w = w
                .with(i, crate::symbol::Symbol::ONE)
                .with(j, crate::symbol::Symbol::ONE);
            code.contains(&w)
        };
        let mut subsets: Vec<u64> = Vec::new();
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if idx.iter().all(|&i| idx.iter().all(|&j| i >= j || pair_in_code(i, j))) {
                subsets.push(mask);
            }
        }
        if subsets.is_empty() {
            continue;
        }
        let aut = aut_group(code)?;
        let index: HashMap<u64, usize> = subsets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut parent: Vec<usize> = (0..subsets.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for g in aut.generators() {
            for (i, &m) in subsets.iter().enumerate() {
                let img = (0..n)
                    .filter(|&x| m >> x & 1 == 1)
                    .fold(0u64, |acc, x| acc | 1 << g.perm()[x]);
                let j = index[&img];
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        total += (0..subsets.len()).filter(|&i| find(&mut parent, i) == i).count();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lengths() {
        let one = classify_self_dual(1, false).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!(one[0].min_ewt, 2);
        assert_eq!(one[0].orbit_size, 2);
        assert_eq!(one[1].orbit_size, 1);
        let two = classify_self_dual(2, false).unwrap();
        assert_eq!(two.len(), 5);
        assert!(mass_check(&two, 2, false).matches());
        let even3 = classify_self_dual(3, true).unwrap();
        assert_eq!(even3.len(), 4);
        assert!(mass_check(&even3, 3, true).matches());
    }

    #[test]
    fn record_round_trip() {
        for r in classify_self_dual(2, false).unwrap() {
            let line = r.to_line();
            assert_eq!(ClassRecord::parse_line(&line, 1).unwrap(), r);
        }
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(count_distinct_self_dual(1, false).unwrap(), 3);
        assert_eq!(count_distinct_self_dual(2, false).unwrap(), 15);
        assert_eq!(count_distinct_self_dual(2, true).unwrap(), 6);
    }

    #[test]
    fn bounds() {
        assert_eq!(extremal_bound(3, true), 4);
        assert_eq!(extremal_bound(6, true), 6);
        assert_eq!(extremal_bound(1, false), 2);
        assert_eq!(sharpened_bound(5), 5);
        assert_eq!(mass(3), BigInt::from(135));
        assert_eq!(even_mass(4), BigInt::from(270));
    }
}
