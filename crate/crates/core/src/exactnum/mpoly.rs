//! Commutative multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so the leading term is always the last entry and
//! printing is canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, One, Signed, Zero};

use super::Rational;

/// Shared, ordered list of commutative variable names.
pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .into()
}

/// Graded lexicographic comparison; missing trailing entries count as zero.
pub(crate) fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        let n = a.len().max(b.len());
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            match x.cmp(&y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

/// Exponent vector of a base monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex(&self.0, &other.0)
    }
}

#[derive(Clone, Debug)]
pub struct MPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
            && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn from_int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms
            .insert(Monomial::var(vars.len(), i), Rational::one());
        p
    }

    pub fn var_named(vars: &Vars, name: &str) -> Option<Self> {
        vars.iter()
            .position(|v| v == name)
            .map(|i| Self::var(vars, i))
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity mismatch");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(vars: &Vars, it: I) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.0.len(), self.vars.len());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Leading coefficient split off: returns `(lc, self / lc)`.
    pub fn monic(&self) -> Option<(Rational, MPoly)> {
        let lc = self.leading_coeff()?.clone();
        let inv = lc.recip();
        Some((lc, self.scale(&inv)))
    }

    /// Exact quotient `self / q` when `q` divides `self`, `None` otherwise.
    pub fn divide_exact(&self, q: &MPoly) -> Option<MPoly> {
        let (qm, qc) = q.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((rm, rc)) = rem.leading_term() {
            if !qm.divides(rm) {
                return None;
            }
            let m = rm.div(qm);
            let c = rc / qc;
            rem = &rem - &q.mul_monomial(&m, &c);
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                out.add_term(m2, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Re-express in another variable universe, mapping variable `i` to `map[i]`.
    pub fn relabel(&self, target: &Vars, map: &[usize]) -> MPoly {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    e[map[i]] += k;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Renders the polynomial using the given names instead of its own.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        let mut s = String::new();
        write_poly(&mut s, self.terms.iter().rev(), names).unwrap();
        s
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Writes `coeff*x^i*y^j` style factors for a single monomial.
pub(crate) fn monomial_factors<S: AsRef<str>>(m: &Monomial, names: &[S]) -> Vec<String> {
    let mut out = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push(names[i].as_ref().to_string()),
            _ => out.push(format!("{}^{}", names[i].as_ref(), e)),
        }
    }
    out
}

/// Joins signed terms into `a - b + c` form. Each item is `(negative, body)`.
pub(crate) fn join_signed(items: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut s = String::new();
    for (k, (neg, body)) in items.into_iter().enumerate() {
        match (k, neg) {
            (0, false) => {}
            (0, true) => s.push('-'),
            (_, false) => s.push_str(" + "),
            (_, true) => s.push_str(" - "),
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Body of a single term: `|c|` times the factors, with unit coefficients elided.
pub(crate) fn term_body(c: &Rational, factors: Vec<String>) -> String {
    let a = c.abs();
    if factors.is_empty() {
        return fmt_rational(&a);
    }
    let f = factors.join("*");
    if a.is_one() {
        f
    } else {
        format!("{}*{}", fmt_rational(&a), f)
    }
}

fn write_poly<'a, S: AsRef<str>>(
    out: &mut String,
    terms: impl Iterator<Item = (&'a Monomial, &'a Rational)>,
    names: &[S],
) -> fmt::Result {
    let s = join_signed(
        terms.map(|(m, c)| (c.is_negative(), term_body(c, monomial_factors(m, names)))),
    );
    out.push_str(&s);
    Ok(())
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_poly(&mut s, self.terms.iter().rev(), &self.vars)?;
        f.write_str(&s)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
