//! Schreier–Sims on small point sets, used to reduce harvested
//! automorphisms to a strong generating set and to compute group orders.

/// A permutation of `0..degree` stored as its image list.
pub type Perm = Vec<u8>;

fn identity(degree: usize) -> Perm {
    (0..degree as u8).collect()
}

fn is_identity(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &x)| x as usize == i)
}

/// `a ∘ b`: apply `b` first.
fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

struct Level {
    gens: Vec<Perm>,
    /// `transversal[p]` maps the base point (the level index) to `p`.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

/// Stabilizer chain with base `0, 1, …, degree − 1`.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> StabChain {
        let levels = (0..degree)
            .map(|b| {
                let mut transversal = vec![None; degree];
                transversal[b] = Some(identity(degree));
                Level {
                    gens: Vec::new(),
                    transversal,
                    orbit: vec![b],
                }
            })
            .collect();
        StabChain { degree, levels }
    }

    /// Sifts `g`; returns the residue and the level where sifting stopped
    /// (`degree` when the residue fixes everything).
    fn strip(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for l in from..self.degree {
            let p = g[l] as usize;
            match &self.levels[l].transversal[p] {
                Some(u) => g = compose(&inverse(u), &g),
                None => return (g, l),
            }
        }
        (g, self.degree)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (r, _) = self.strip(g.clone(), 0);
        is_identity(&r)
    }

    fn extend_orbit(&mut self, l: usize) {
        let level = &mut self.levels[l];
        let mut k = 0;
        while k < level.orbit.len() {
            let p = level.orbit[k];
            let u = level.transversal[p].clone().expect("orbit point has a transversal");
            for s in &level.gens {
                let q = s[p] as usize;
                if level.transversal[q].is_none() {
                    level.transversal[q] = Some(compose(s, &u));
                    level.orbit.push(q);
                }
            }
            k += 1;
        }
    }

    fn add_to_levels(&mut self, g: &Perm, upto: usize) {
        for l in 0..=upto.min(self.degree - 1) {
            self.levels[l].gens.push(g.clone());
            self.extend_orbit(l);
        }
    }

    /// Adds `g` to the group; returns false when it was already a member.
    pub fn insert(&mut self, g: Perm) -> bool {
        assert_eq!(g.len(), self.degree, "permutation degree mismatch");
        let (residue, j) = self.strip(g, 0);
        if is_identity(&residue) {
            return false;
        }
        self.add_to_levels(&residue, j);
        self.complete(j);
        true
    }

    /// Makes every Schreier generator at levels `≤ start` sift to the
    /// identity.
    fn complete(&mut self, start: usize) {
        let mut i = start as isize;
        'outer: while i >= 0 {
            let l = i as usize;
            let orbit = self.levels[l].orbit.clone();
            let gens = self.levels[l].gens.clone();
            for &p in &orbit {
                let up = self.levels[l].transversal[p].clone().expect("orbit point");
                for x in &gens {
                    let q = x[p] as usize;
                    let uq = self.levels[l].transversal[q].clone().expect("closed orbit");
                    let h = compose(&inverse(&uq), &compose(x, &up));
                    let (y, j) = self.strip(h, l + 1);
                    if !is_identity(&y) {
                        for m in l + 1..=j.min(self.degree - 1) {
                            self.levels[m].gens.push(y.clone());
                            self.extend_orbit(m);
                        }
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Generators of the whole group (those stored at level 0).
    pub fn generators(&self) -> Vec<Perm> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        let mut c = StabChain::new(5);
        assert!(c.insert(vec![1, 0, 2, 3, 4]));
        assert!(c.insert(vec![1, 2, 3, 4, 0]));
        assert_eq!(c.order(), 120);
        assert!(!c.insert(vec![0, 1, 3, 2, 4]));
    }

    #[test]
    fn cyclic_and_product() {
        let mut c = StabChain::new(6);
        c.insert(vec![1, 2, 0, 3, 4, 5]);
        assert_eq!(c.order(), 3);
        c.insert(vec![0, 1, 2, 4, 3, 5]);
        assert_eq!(c.order(), 6);
        assert!(c.contains(&vec![2, 0, 1, 4, 3, 5]));
        assert!(!c.contains(&vec![1, 0, 2, 3, 4, 5]));
    }
}
