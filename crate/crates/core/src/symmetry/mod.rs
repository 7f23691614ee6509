//! Canonical forms, equivalence and automorphism groups.
//!
//! Two codes are equivalent when a signed permutation maps one onto the
//! other (local group `{id, ω↔ω̄}` for L, all of `S3` for K). The canonical
//! form is found by an individualization search: coordinates are first
//! colored by invariants, then laid out position by position, comparing the
//! reduced echelon form of every prefix projection and pruning branches
//! that are already worse than the best layout found. Leaves tied with the
//! best one differ from it by automorphisms, which are fed to a
//! Schreier–Sims chain.

mod permgroup;
mod refine;

use std::cmp::Ordering;

use crate::code::{echelon, for_each_in_span, LinearCode};
use crate::error::{CodeError, Result};
use crate::group::{group_order, SignedPermutation};
use crate::symbol::{Flavor, S3};
use crate::word::symbol_at;

use permgroup::StabChain;

/// Default bound on the length accepted by the searches here.
pub const DEFAULT_MAX_LENGTH: usize = 8;

/// Length bound, overridable through `LCODES_MAX_LENGTH`.
pub fn max_length() -> usize {
    std::env::var("LCODES_MAX_LENGTH")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_LENGTH)
}

fn check_length(code: &LinearCode) -> Result<()> {
    let limit = max_length();
    if code.len() > limit {
        return Err(CodeError::LimitExceeded {
            length: code.len(),
            limit,
        });
    }
    Ok(())
}

/// Canonical representative of an equivalence class together with a
/// signed permutation mapping the input onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub code: LinearCode,
    pub transporter: SignedPermutation,
}

/// Automorphism group given by generators and its order.
#[derive(Debug, Clone)]
pub struct AutGroup {
    flavor: Flavor,
    length: usize,
    generators: Vec<SignedPermutation>,
    order: u128,
}

impl AutGroup {
    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
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

    /// Number of codes equivalent to the code: `|G| / |Aut|`.
    pub fn orbit_size(&self) -> u128 {
        group_order(self.flavor, self.length) / self.order
    }

    pub fn contains(&self, g: &SignedPermutation) -> bool {
        let mut chain = StabChain::new(3 * self.length);
        for h in &self.generators {
            chain.insert(h.point_image());
        }
        chain.contains(&g.point_image())
    }
}

type Leaf = (Vec<usize>, Vec<u8>);

struct Search<'a> {
    n: usize,
    basis: &'a [u64],
    slot_cells: Vec<usize>,
    cells: Vec<Vec<usize>>,
    choices: Vec<Vec<u8>>,
    used: Vec<bool>,
    path: Leaf,
    best_keys: Vec<Vec<u64>>,
    best: Option<Leaf>,
    ties: Vec<Leaf>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, proj: &[u64]) {
        if k == self.slot_cells.len() {
            match self.best {
                None => self.best = Some(self.path.clone()),
                Some(_) => self.ties.push(self.path.clone()),
            }
            return;
        }
        let cell = self.slot_cells[k];
        for idx in 0..self.cells[cell].len() {
            let x = self.cells[cell][idx];
            if self.used[x] {
                continue;
            }
            for c in 0..self.choices[x].len() {
                let lam = self.choices[x][c] as usize;
                let next: Vec<u64> = proj
                    .iter()
                    .zip(self.basis)
                    .map(|(&p, &b)| (p << 2) | S3[lam][symbol_at(b, self.n, x) as usize] as u64)
                    .collect();
                let key = echelon(next.iter().copied());
                if k < self.best_keys.len() {
                    match key.cmp(&self.best_keys[k]) {
                        Ordering::Greater => continue,
                        Ordering::Less => {
                            self.best_keys.truncate(k);
                            self.best_keys.push(key);
                            self.best = None;
                            self.ties.clear();
                        }
                        Ordering::Equal => {}
                    }
                } else {
                    self.best_keys.push(key);
                }
                self.used[x] = true;
                self.path.0.push(x);
                self.path.1.push(lam as u8);
                self.run(k + 1, &next);
                self.path.0.pop();
                self.path.1.pop();
                self.used[x] = false;
            }
        }
    }
}

/// Symbols occurring at coordinate `i` of some codeword.
fn projection(basis: &[u64], n: usize, i: usize) -> Vec<u8> {
    let gens = echelon(basis.iter().map(|&b| symbol_at(b, n, i) as u64));
    let mut present = Vec::new();
    for_each_in_span(&gens, |v| present.push(v as u8));
    present.sort_unstable();
    present
}

/// Local actions with pairwise different effect on `present`, plus the
/// local actions acting trivially on it.
fn local_classes(flavor: Flavor, present: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let mut reps: Vec<u8> = Vec::new();
    let mut seen: Vec<Vec<u8>> = Vec::new();
    let mut trivial = Vec::new();
    for &g in flavor.local_group() {
        let effect: Vec<u8> = present.iter().map(|&s| S3[g as usize][s as usize]).collect();
        if effect == present {
            trivial.push(g);
        }
        if !seen.contains(&effect) {
            seen.push(effect);
            reps.push(g);
        }
    }
    (reps, trivial)
}

fn leaf_permutation(flavor: Flavor, n: usize, leaf: &Leaf, zeros: &[usize]) -> SignedPermutation {
    let mut perm = vec![0u8; n];
    let mut local = vec![0u8; n];
    for (pos, (&x, &lam)) in leaf.0.iter().zip(&leaf.1).enumerate() {
        perm[x] = pos as u8;
        local[pos] = lam;
    }
    for (k, &z) in zeros.iter().enumerate() {
        perm[z] = (leaf.0.len() + k) as u8;
    }
    SignedPermutation::from_parts_unchecked(flavor, perm, local)
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Canonical form and automorphism group from a single search.
pub fn analyze(code: &LinearCode) -> Result<(CanonicalForm, AutGroup)> {
    let (form, group) = search(code, true)?;
    Ok((form, group.expect("group requested")))
}

fn search(code: &LinearCode, with_group: bool) -> Result<(CanonicalForm, Option<AutGroup>)> {
    check_length(code)?;
    let flavor = code.flavor();
    let n = code.len();
    let basis = code.basis_bits();
    let projections: Vec<Vec<u8>> = (0..n).map(|i| projection(basis, n, i)).collect();
    let support: Vec<usize> = (0..n).filter(|&i| projections[i].len() > 1).collect();
    let zeros: Vec<usize> = (0..n).filter(|&i| projections[i].len() == 1).collect();

    let words = code.codeword_bits()?;
    let colors = refine::refine_colors(flavor, n, basis, &words, &support);
    let mut palette: Vec<u64> = colors.clone();
    palette.sort_unstable();
    palette.dedup();
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); palette.len()];
    for (a, &x) in support.iter().enumerate() {
        let c = palette.binary_search(&colors[a]).expect("palette color");
        cells[c].push(x);
    }
    let slot_cells: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, xs)| std::iter::repeat_n(c, xs.len()))
        .collect();

    let mut choices = vec![Vec::new(); n];
    let mut trivial = vec![Vec::new(); n];
    for i in 0..n {
        let (reps, triv) = local_classes(flavor, &projections[i]);
        choices[i] = reps;
        trivial[i] = triv;
    }

    let mut search = Search {
        n,
        basis,
        slot_cells,
        cells,
        choices,
        used: vec![false; n],
        path: (Vec::new(), Vec::new()),
        best_keys: Vec::new(),
        best: None,
        ties: Vec::new(),
    };
    search.run(0, &vec![0u64; basis.len()]);
    let best = search.best.take().expect("search reaches a leaf");

    let transporter = leaf_permutation(flavor, n, &best, &zeros);
    let canonical = code.image(&transporter)?;
    let form = CanonicalForm {
        code: canonical,
        transporter,
    };
    if !with_group {
        return Ok((form, None));
    }

    let mut chain = StabChain::new(3 * n);
    let best_inv = form.transporter.inverse();
    for leaf in &search.ties {
        let g = best_inv.compose(&leaf_permutation(flavor, n, leaf, &zeros));
        chain.insert(g.point_image());
    }
    let mut counted = (search.ties.len() as u128 + 1) * factorial(zeros.len());
    for i in 0..n {
        counted *= trivial[i].len() as u128;
        for &lam in &trivial[i] {
            if lam != 0 {
                let mut local = vec![0u8; n];
                local[i] = lam;
                let g = SignedPermutation::from_parts_unchecked(
                    flavor,
                    (0..n as u8).collect(),
                    local,
                );
                chain.insert(g.point_image());
            }
        }
    }
    for w in zeros.windows(2) {
        let mut perm: Vec<u8> = (0..n as u8).collect();
        perm.swap(w[0], w[1]);
        let g = SignedPermutation::from_parts_unchecked(flavor, perm, vec![0; n]);
        chain.insert(g.point_image());
    }
    debug_assert_eq!(chain.order(), counted, "automorphism count mismatch");
    let generators = chain
        .generators()
        .iter()
        .map(|p| SignedPermutation::from_point_image(flavor, p))
        .collect();
    Ok((
        form,
        Some(AutGroup {
            flavor,
            length: n,
            generators,
            order: counted,
        }),
    ))
}

pub fn canonical_form(code: &LinearCode) -> Result<CanonicalForm> {
    search(code, false).map(|(c, _)| c)
}

pub fn canonical_code(code: &LinearCode) -> Result<LinearCode> {
    canonical_form(code).map(|c| c.code)
}

pub fn aut_group(code: &LinearCode) -> Result<AutGroup> {
    analyze(code).map(|(_, a)| a)
}

/// Automorphism group of a K code in `S3^n : S_n`.
pub fn kleinian_aut_group(code: &LinearCode) -> Result<AutGroup> {
    if code.flavor() != Flavor::K {
        return Err(CodeError::FlavorMismatch {
            expected: Flavor::K,
            found: code.flavor(),
        });
    }
    aut_group(code)
}

/// A signed permutation mapping `a` onto `b`, if one exists.
pub fn are_equivalent(a: &LinearCode, b: &LinearCode) -> Result<Option<SignedPermutation>> {
    if a.flavor() != b.flavor() {
        return Err(CodeError::FlavorMismatch {
            expected: a.flavor(),
            found: b.flavor(),
        });
    }
    if a.len() != b.len() {
        return Err(CodeError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.rank() != b.rank() {
        return Ok(None);
    }
    let ca = canonical_form(a)?;
    let cb = canonical_form(b)?;
    if ca.code != cb.code {
        return Ok(None);
    }
    Ok(Some(cb.transporter.inverse().compose(&ca.transporter)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(gens: &[&str]) -> LinearCode {
        LinearCode::from_strings(Flavor::L, gens).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(aut_group(&l(&["1"])).unwrap().order(), 2);
        assert_eq!(aut_group(&l(&["w"])).unwrap().order(), 1);
        assert_eq!(aut_group(&l(&["11w", "1w1", "w11"])).unwrap().order(), 6);
        let z = LinearCode::zero(Flavor::L, 3).unwrap();
        assert_eq!(aut_group(&z).unwrap().order(), 48);
        let gamma3 = l(&["100", "010", "001"]);
        assert_eq!(aut_group(&gamma3).unwrap().order(), 48);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let c = l(&["1w0", "0W1"]);
        let g = SignedPermutation::new(Flavor::L, vec![2, 0, 1], vec![1, 0, 1]).unwrap();
        let d = c.image(&g).unwrap();
        let cc = canonical_form(&c).unwrap();
        let cd = canonical_form(&d).unwrap();
        assert_eq!(cc.code, cd.code);
        assert_eq!(c.image(&cc.transporter).unwrap(), cc.code);
        let t = are_equivalent(&c, &d).unwrap().unwrap();
        assert_eq!(c.image(&t).unwrap(), d);
    }

    #[test]
    fn generators_are_automorphisms() {
        let c = l(&["11w", "1w1", "w11"]);
        let a = aut_group(&c).unwrap();
        for g in a.generators() {
            assert_eq!(c.image(g).unwrap(), c);
        }
    }

    #[test]
    fn kleinian_orders() {
        let eps = LinearCode::from_strings(Flavor::K, &["aa", "bb"]).unwrap();
        // Aut(ε2): swap, plus diagonal S3.
        assert_eq!(kleinian_aut_group(&eps).unwrap().order(), 12);
    }

    #[test]
    fn limit_is_enforced() {
        let big = LinearCode::zero(Flavor::L, 9).unwrap();
        assert!(matches!(aut_group(&big), Err(CodeError::LimitExceeded { .. })));
    }
}
