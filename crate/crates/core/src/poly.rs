//! Sparse multivariate polynomials with exact integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{CodeError, Result};

pub const XYZ: &[&str] = &["x", "y", "z"];
pub const UV: &[&str] = &["u", "v"];
pub const AB: &[&str] = &["a", "b"];
pub const PQRS: &[&str] = &["p", "q", "r", "s"];

/// Exponent vector ordered by total degree, then lexicographically, so
/// that the largest monomial is printed first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: &'static [&'static str],
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(vars: &'static [&'static str]) -> Poly {
        Poly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &'static [&'static str], c: impl Into<BigInt>) -> Poly {
        let mut p = Poly::zero(vars);
        p.add_term(vec![0; vars.len()], c.into());
        p
    }

    pub fn one(vars: &'static [&'static str]) -> Poly {
        Poly::constant(vars, 1)
    }

    pub fn var(vars: &'static [&'static str], i: usize) -> Poly {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Poly::zero(vars);
        p.add_term(e, BigInt::one());
        p
    }

    /// All variables of a set, in order.
    pub fn vars_of(vars: &'static [&'static str]) -> Vec<Poly> {
        (0..vars.len()).map(|i| Poly::var(vars, i)).collect()
    }

    pub fn from_terms<I, C>(vars: &'static [&'static str], terms: I) -> Poly
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Poly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector has the wrong arity");
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(exponents);
        let entry = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn vars(&self) -> &'static [&'static str] {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut p = Poly::zero(self.vars);
        if c.is_zero() {
            return p;
        }
        for (m, v) in &self.terms {
            p.terms.insert(m.clone(), v * c);
        }
        p
    }

    /// Divides every coefficient by `d`, failing if any division is inexact.
    pub fn divide_exact(&self, d: &BigInt) -> Result<Poly> {
        let mut p = Poly::zero(self.vars);
        for (m, v) in &self.terms {
            if !(v % d).is_zero() {
                return Err(CodeError::NonIntegral);
            }
            p.terms.insert(m.clone(), v / d);
        }
        Ok(p)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replaces variable `i` by `images[i]`; all images share one variable set.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target = images[0].vars;
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(p.vars), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            out = &out + &t;
        }
        out
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.vars.len());
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum()
    }

    /// Reads text such as `x^3 + 3*x*z^2 - y`.
    pub fn parse(text: &str, vars: &'static [&'static str]) -> Result<Poly> {
        let err = |m: String| CodeError::Parse {
            line: 0,
            message: m,
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut p = Poly::zero(vars);
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                chunks.push((negative, std::mem::take(&mut cur)));
                negative = ch == '-';
            } else if ch == '-' && i == 0 {
                negative = true;
            } else if ch == '+' && i == 0 {
            } else {
                cur.push(ch);
            }
        }
        chunks.push((negative, cur));
        for (neg, chunk) in chunks {
            if chunk.is_empty() {
                return Err(err(format!("empty term in `{text}`")));
            }
            let mut coeff = BigInt::one();
            let mut exps = vec![0u32; vars.len()];
            for factor in chunk.split('*') {
                if factor.is_empty() {
                    return Err(err(format!("empty factor in `{chunk}`")));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor.parse::<BigInt>().map_err(|e| err(e.to_string()))?;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|e| err(e.to_string()))?),
                    None => (factor, 1),
                };
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| err(format!("unknown variable `{name}`")))?;
                exps[idx] += e;
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (exps, c)) in self.terms().enumerate() {
            let mut factors: Vec<String> = Vec::new();
            let magnitude = c.abs();
            let constant = exps.iter().all(|&e| e == 0);
            if !magnitude.is_one() || constant {
                factors.push(magnitude.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].to_string()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
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

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn check_vars(a: &Poly, b: &Poly) {
    assert!(
        a.vars == b.vars,
        "mixing polynomials over {:?} and {:?}",
        a.vars,
        b.vars
    );
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        check_vars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        check_vars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.0.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        check_vars(self, rhs);
        let mut out = Poly::zero(self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s, XYZ).unwrap()
    }

    #[test]
    fn display_order_and_signs() {
        let q = p("z^3 + 3*y^2*z + x^3 + 3*x*z^2");
        assert_eq!(q.to_string(), "x^3 + 3*x*z^2 + 3*y^2*z + z^3");
        assert_eq!(p("x - y").to_string(), "x - y");
        assert_eq!(p("-x + 2").to_string(), "-x + 2");
        assert_eq!(p("x - x").to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = p("x + y");
        assert_eq!(a.pow(2).to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!((&a * &p("x - y")).to_string(), "x^2 - y^2");
        let s = a.substitute(&[p("x + z"), p("x - z"), p("y")]);
        assert_eq!(s.to_string(), "2*x");
        assert_eq!(p("4*x + 2*y").divide_exact(&BigInt::from(2)).unwrap(), p("2*x + y"));
        assert_eq!(p("3*x").divide_exact(&BigInt::from(2)), Err(CodeError::NonIntegral));
    }

    #[test]
    fn eval_and_parse_round_trip() {
        let q = p("x^3 + 3*x*z^2 + 3*y^2*z + z^3");
        assert_eq!(q.eval(&[1.into(), 1.into(), 1.into()]), BigInt::from(8));
        assert_eq!(Poly::parse(&q.to_string(), XYZ).unwrap(), q);
        assert!(Poly::parse("x + t", XYZ).is_err());
        assert!(q.is_homogeneous());
    }
}
