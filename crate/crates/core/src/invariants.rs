//! Invariant rings of self-dual enumerators: generator decompositions,
//! the Molien series of the even group, the Jacobian of the generators and
//! the relation among Euclidean enumerators.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::enumerators::swe_substitution;
use crate::error::{CodeError, Result};
use crate::poly::{Poly, AB, UV, XYZ};

fn p(text: &str, vars: &'static [&'static str]) -> Poly {
    Poly::parse(text, vars).expect("built-in polynomial")
}

/// `swe` of `Γ1`, `Ξ1`, `Δ2⁺`, `Υ3`.
pub fn swe_gamma1() -> Poly {
    p("x + y", XYZ)
}

pub fn swe_xi1() -> Poly {
    p("x + z", XYZ)
}

pub fn swe_delta2_plus() -> Poly {
    p("x^2 + y^2 + 2*z^2", XYZ)
}

pub fn swe_upsilon3() -> Poly {
    p("x^3 + 3*x*z^2 + 3*y^2*z + z^3", XYZ)
}

/// A named generator with its weight (degree).
#[derive(Debug, Clone)]
pub struct Generator {
    pub name: &'static str,
    pub poly: Poly,
    pub weight: u32,
}

pub fn even_generators() -> Vec<Generator> {
    vec![
        Generator {
            name: "Xi1",
            poly: swe_xi1(),
            weight: 1,
        },
        Generator {
            name: "DeltaPlus2",
            poly: swe_delta2_plus(),
            weight: 2,
        },
        Generator {
            name: "Upsilon3",
            poly: swe_upsilon3(),
            weight: 3,
        },
    ]
}

pub fn general_generators() -> Vec<Generator> {
    vec![
        Generator {
            name: "Gamma1",
            poly: swe_gamma1(),
            weight: 1,
        },
        Generator {
            name: "Xi1",
            poly: swe_xi1(),
            weight: 1,
        },
        Generator {
            name: "DeltaPlus2",
            poly: swe_delta2_plus(),
            weight: 2,
        },
    ]
}

pub fn hamming_generators() -> Vec<Generator> {
    vec![
        Generator {
            name: "Gamma1",
            poly: p("u + v", UV),
            weight: 1,
        },
        Generator {
            name: "DeltaPlus2",
            poly: p("u^2 + 3*v^2", UV),
            weight: 2,
        },
    ]
}

/// `Σ c_e · Π g_i^{e_i}` over a fixed list of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub names: Vec<&'static str>,
    /// Nonzero coefficients by exponent vector, largest exponent first.
    pub terms: Vec<(Vec<u32>, BigRational)>,
}

impl Decomposition {
    /// Expands back into a polynomial (coefficients must be integral).
    pub fn expand(&self, generators: &[Generator]) -> Result<Poly> {
        let mut out = Poly::zero(generators[0].poly.vars());
        let mut denominator = BigInt::one();
        for (_, c) in &self.terms {
            denominator = lcm(&denominator, c.denom());
        }
        for (e, c) in &self.terms {
            let scaled = (c * BigRational::from_integer(denominator.clone())).to_integer();
            let mut t = Poly::constant(out.vars(), scaled);
            for (g, &k) in generators.iter().zip(e) {
                t = &t * &g.poly.pow(k);
            }
            out = &out + &t;
        }
        out.divide_exact(&denominator)
    }
}

fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a / gcd(a, b) * b
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mut factors = Vec::new();
            let mag = c.abs();
            let constant = e.iter().all(|&x| x == 0);
            if !mag.is_one() || constant {
                factors.push(if mag.is_integer() {
                    mag.to_integer().to_string()
                } else {
                    format!("({mag})")
                });
            }
            for (name, &x) in self.names.iter().zip(e) {
                match x {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{x}")),
                }
            }
            let body = factors.join("*");
            match (k, c.is_negative()) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// Exponent vectors `e` with `Σ e_i w_i = degree`, in decreasing order.
fn weighted_exponents(weights: &[u32], degree: u32) -> Vec<Vec<u32>> {
    fn go(weights: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == weights.len() - 1 {
            let w = weights[cur.len()];
            if left.is_multiple_of(w) {
                cur.push(left / w);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let w = weights[cur.len()];
        for e in (0..=left / w).rev() {
            cur.push(e);
            go(weights, left - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if weights.is_empty() {
        return out;
    }
    go(weights, degree, &mut Vec::new(), &mut out);
    out
}

/// Solves `target = Σ c_e Π g^e` exactly over the rationals. Fails with
/// [`CodeError::NotInRing`] when no solution exists and with
/// [`CodeError::InvalidParameter`] when the solution is not unique.
pub fn decompose_in(target: &Poly, generators: &[Generator]) -> Result<Decomposition> {
    let names: Vec<&'static str> = generators.iter().map(|g| g.name).collect();
    if target.is_zero() {
        return Ok(Decomposition {
            names,
            terms: Vec::new(),
        });
    }
    if !target.is_homogeneous() {
        return Err(CodeError::NotInRing);
    }
    let degree = target.degree().unwrap_or(0);
    let weights: Vec<u32> = generators.iter().map(|g| g.weight).collect();
    let exps = weighted_exponents(&weights, degree);
    let columns: Vec<Poly> = exps
        .iter()
        .map(|e| {
            generators
                .iter()
                .zip(e)
                .fold(Poly::one(target.vars()), |acc, (g, &k)| &acc * &g.poly.pow(k))
        })
        .collect();
    // rows: every monomial that occurs anywhere
    let mut monomials: Vec<Vec<u32>> = Vec::new();
    for poly in columns.iter().chain(std::iter::once(target)) {
        for (m, _) in poly.terms() {
            if !monomials.iter().any(|x| x == m) {
                monomials.push(m.to_vec());
            }
        }
    }
    let cols = columns.len();
    let mut matrix: Vec<Vec<BigRational>> = monomials
        .iter()
        .map(|m| {
            let mut row: Vec<BigRational> = columns
                .iter()
                .map(|c| BigRational::from_integer(c.coeff(m)))
                .collect();
            row.push(BigRational::from_integer(target.coeff(m)));
            row
        })
        .collect();
    let solution = solve(&mut matrix, cols)?;
    let terms = exps
        .into_iter()
        .zip(solution)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(Decomposition { names, terms })
}

/// Gauss–Jordan elimination on an augmented matrix with `cols` unknowns;
/// pivots are taken in column order from the first usable row.
fn solve(m: &mut [Vec<BigRational>], cols: usize) -> Result<Vec<BigRational>> {
    let rows = m.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..cols {
        let Some(r) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, r);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..=cols {
                    let delta = &factor * &m[pivot_row][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return Err(CodeError::NotInRing);
    }
    if pivots.len() < cols {
        return Err(CodeError::InvalidParameter(
            "generator products are linearly dependent".into(),
        ));
    }
    Ok((0..cols).map(|i| m[i][cols].clone()).collect())
}

/// `swe` as a polynomial in `swe_{Ξ1}`, `swe_{Δ2⁺}`, `swe_{Υ3}`.
pub fn decompose_even(swe: &Poly) -> Result<Decomposition> {
    decompose_in(swe, &even_generators())
}

/// `swe` as a polynomial in `swe_{Γ1}`, `swe_{Ξ1}`, `swe_{Δ2⁺}`.
pub fn decompose_general(swe: &Poly) -> Result<Decomposition> {
    decompose_in(swe, &general_generators())
}

/// Hamming enumerator as a polynomial in `u + v` and `u² + 3v²`.
pub fn decompose_hamming(w: &Poly) -> Result<Decomposition> {
    decompose_in(w, &hamming_generators())
}

/// Invariant under `(x, y, z) ↦ ½(x + y + 2z, x + y − 2z, x − y)`.
pub fn is_macwilliams_invariant(swe: &Poly) -> bool {
    let Some(n) = swe.degree() else {
        return true;
    };
    if !swe.is_homogeneous() {
        return false;
    }
    let image = swe.substitute(&swe_substitution());
    image == swe.scale(&(BigInt::one() << n))
}

/// Invariant under both the MacWilliams substitution and `y ↦ −y`.
pub fn is_selfdual_invariant(swe: &Poly) -> bool {
    let [x, y, z]: [Poly; 3] = Poly::vars_of(XYZ).try_into().expect("three variables");
    let flipped = swe.substitute(&[x, -&y, z]);
    flipped == *swe && is_macwilliams_invariant(swe)
}

type Matrix3 = [[BigRational; 3]; 3];

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn mat_mul(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).map(|k| &a[i][k] * &b[k][j]).sum())
    })
}

/// `S = ½[[1,1,2],[1,1,−2],[1,−1,0]]` and `T = diag(1, −1, 1)`.
pub fn generator_matrices() -> (Matrix3, Matrix3) {
    let s = [
        [rat(1, 2), rat(1, 2), rat(1, 1)],
        [rat(1, 2), rat(1, 2), rat(-1, 1)],
        [rat(1, 2), rat(-1, 2), rat(0, 1)],
    ];
    let t = [
        [rat(1, 1), rat(0, 1), rat(0, 1)],
        [rat(0, 1), rat(-1, 1), rat(0, 1)],
        [rat(0, 1), rat(0, 1), rat(1, 1)],
    ];
    (s, t)
}

/// All elements of the matrix group generated by `S` and `T`.
pub fn even_group() -> Vec<Matrix3> {
    let (s, t) = generator_matrices();
    let identity: Matrix3 =
        std::array::from_fn(|i| std::array::from_fn(|j| rat((i == j) as i64, 1)));
    let mut elements = vec![identity];
    let mut frontier = elements.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in [&s, &t] {
                let prod = mat_mul(g, h);
                if !elements.contains(&prod) {
                    elements.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    elements
}

/// Coefficients of `1/det(I − λA)` up to `λ^degree`.
fn inverse_char_series(a: &Matrix3, degree: usize) -> Vec<BigRational> {
    // det(I − λA) = 1 − tr(A) λ + e2(A) λ² − det(A) λ³
    let tr: BigRational = (0..3).map(|i| a[i][i].clone()).sum();
    let minor = |i: usize, j: usize| &a[i][i] * &a[j][j] - &a[i][j] * &a[j][i];
    let e2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1])
        - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
        + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0]);
    let d = [BigRational::one(), -tr, e2, -det];
    let mut out: Vec<BigRational> = Vec::with_capacity(degree + 1);
    for k in 0..=degree {
        let mut c = if k == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        for j in 1..=3.min(k) {
            c -= &d[j] * &out[k - j];
        }
        out.push(c);
    }
    out
}

/// Molien series of `⟨S, T⟩` by averaging over the group.
pub fn molien_by_averaging(degree: usize) -> Vec<BigInt> {
    let group = even_group();
    let order = BigRational::from_integer(BigInt::from(group.len()));
    let mut sum = vec![BigRational::zero(); degree + 1];
    for g in &group {
        for (acc, c) in sum.iter_mut().zip(inverse_char_series(g, degree)) {
            *acc += c;
        }
    }
    sum.into_iter()
        .map(|c| {
            let c = c / &order;
            assert!(c.is_integer(), "Molien coefficient is not integral");
            c.to_integer()
        })
        .collect()
}

/// Coefficients of `1 / ((1 − λ)(1 − λ²)(1 − λ³))`.
pub fn molien_closed_form(degree: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); degree + 1];
    c[0] = BigInt::one();
    for part in 1..=3 {
        for k in part..=degree {
            let prev = c[k - part].clone();
            c[k] += prev;
        }
    }
    c
}

fn derivative(p: &Poly, var: usize) -> Poly {
    Poly::from_terms(
        p.vars(),
        p.terms().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut f = e.to_vec();
            f[var] -= 1;
            (f, c * BigInt::from(e[var]))
        }),
    )
}

/// Jacobian determinant of the three even generators in `x, y, z`.
pub fn jacobian() -> Poly {
    let gens = [swe_xi1(), swe_delta2_plus(), swe_upsilon3()];
    let j: Vec<Vec<Poly>> = gens
        .iter()
        .map(|g| (0..3).map(|v| derivative(g, v)).collect())
        .collect();
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&j[r1][c1] * &j[r2][c2]) - &(&j[r1][c2] * &j[r2][c1])
    };
    let t0 = &j[0][0] * &minor(1, 2, 1, 2);
    let t1 = &j[0][1] * &minor(1, 2, 0, 2);
    let t2 = &j[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// Euclidean enumerators `EW_{Ξ1}`, `EW_{Δ2⁺}`, `EW_{Υ3}`.
pub fn euclid_generators() -> [Poly; 3] {
    [
        p("a^2 + b^2", AB),
        p("a^4 + a^2*b^2 + 2*b^4", AB),
        p("a^6 + 6*a^2*b^4 + b^6", AB),
    ]
}

/// Both sides of
/// `−2·U² = 11·X⁶ − 36·X⁴D + 5·X³U + 36·X²D² − 9·XDU − 9·D³`
/// with `X = EW_{Ξ1}`, `D = EW_{Δ2⁺}`, `U = EW_{Υ3}`.
///
/// The relation is often quoted with `+2·U²` on the left; at `(a, b) =
/// (1, 0)` every enumerator is 1 and the right side is −2, so the sign
/// must be negative.
pub fn ew_relation_sides() -> (Poly, Poly) {
    let [x, d, u] = euclid_generators();
    let c = |k: i64| Poly::constant(AB, k);
    let lhs = &c(-2) * &u.pow(2);
    let terms = [
        &c(11) * &x.pow(6),
        &(&c(-36) * &x.pow(4)) * &d,
        &(&c(5) * &x.pow(3)) * &u,
        &(&c(36) * &x.pow(2)) * &d.pow(2),
        &(&(&c(-9) * &x) * &d) * &u,
        &c(-9) * &d.pow(3),
    ];
    let rhs = terms.iter().fold(Poly::zero(AB), |acc, t| &acc + t);
    (lhs, rhs)
}

pub fn verify_ew_relation() -> bool {
    let (lhs, rhs) = ew_relation_sides();
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_has_order_six() {
        assert_eq!(even_group().len(), 6);
    }

    #[test]
    fn molien_agrees_with_closed_form() {
        let a = molien_by_averaging(12);
        assert_eq!(a, molien_closed_form(12));
        let first: Vec<i64> = a[..7].iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(first, [1, 1, 2, 3, 4, 5, 7]);
    }

    #[test]
    fn jacobian_is_nonzero() {
        let j = jacobian();
        assert!(!j.is_zero());
        assert_eq!(j.to_string(), "-6*x^2*y + 24*x*y*z + 6*y^3 - 24*y*z^2");
    }

    #[test]
    fn ew_relation_holds() {
        assert!(verify_ew_relation());
        let (l, r) = ew_relation_sides();
        assert_ne!(-&l, r, "the positive-sign form must not hold");
        for (a, b) in [(1, 0), (1, 1), (2, 3)] {
            let pt = [BigInt::from(a), BigInt::from(b)];
            assert_eq!(l.eval(&pt), r.eval(&pt));
        }
    }

    #[test]
    fn decompositions() {
        let xi2 = swe_xi1().pow(2);
        let d = decompose_even(&xi2).unwrap();
        assert_eq!(d.to_string(), "Xi1^2");
        let u2 = Poly::parse("x^2 + 2*y*z + z^2", XYZ).unwrap();
        let d = decompose_general(&u2).unwrap();
        assert_eq!(d.expand(&general_generators()).unwrap(), u2);
        assert!(decompose_even(&swe_gamma1()).is_err());
        assert!(is_selfdual_invariant(&swe_delta2_plus()));
        assert!(is_selfdual_invariant(&swe_upsilon3()));
        assert!(!is_selfdual_invariant(&swe_gamma1()));
        assert!(is_macwilliams_invariant(&swe_gamma1()));
    }
}
