use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::Zero;

use crate::exactnum::mpoly::grlex;
use crate::exactnum::{Frac, Rational};

/// Exponents of the skew variables of a PBW monomial, in tower order.
/// Trailing zeros are trimmed so that monomials of a lower tower are
/// literally monomials of every tower built on top of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewMono(Vec<u32>);

impl SkewMono {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        SkewMono(exps)
    }

    pub fn one() -> Self {
        SkewMono(Vec::new())
    }

    pub fn var(j: usize) -> Self {
        let mut e = vec![0; j + 1];
        e[j] = 1;
        SkewMono(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, j: usize) -> u32 {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of leading variable slots in use (index of highest variable + 1).
    pub fn span(&self) -> usize {
        self.0.len()
    }

    /// `(vars < j, exponent of x_j, exponents of vars > j)`.
    pub fn split(&self, j: usize) -> (SkewMono, u32, &[u32]) {
        let lower = SkewMono::new(self.0.iter().take(j).copied().collect());
        let upper = if self.0.len() > j + 1 {
            &self.0[j + 1..]
        } else {
            &[]
        };
        (lower, self.exp(j), upper)
    }

    /// Appends `x_j^e * upper` to a monomial in the variables below `j`.
    pub fn append(&self, j: usize, e: u32, upper: &[u32]) -> SkewMono {
        debug_assert!(self.0.len() <= j);
        let mut v = self.0.clone();
        v.resize(j, 0);
        v.push(e);
        v.extend_from_slice(upper);
        SkewMono::new(v)
    }

    /// Drops the last variable occurrence: returns `(rest, var)` with `self = rest * x_var`.
    pub fn peel_last(&self) -> Option<(SkewMono, usize)> {
        let j = self.0.len().checked_sub(1)?;
        let mut v = self.0.clone();
        v[j] -= 1;
        Some((SkewMono::new(v), j))
    }
}

impl PartialOrd for SkewMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SkewMono {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex(&self.0, &other.0)
    }
}

/// A ring element in PBW normal form: `sum coeff * x_1^e_1 ... x_t^e_t`
/// with fraction coefficients written on the left.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<SkewMono, Frac>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn from_frac(f: Frac) -> Self {
        Self::term(SkewMono::one(), f)
    }

    pub fn term(m: SkewMono, f: Frac) -> Self {
        let mut e = Element::zero();
        e.add_term(m, f);
        e
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SkewMono, &Frac)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SkewMono) -> Option<&Frac> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: SkewMono, f: Frac) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&f);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, f) in &small.terms {
            big.add_term(m.clone(), f.clone());
        }
        big
    }

    pub fn add_assign(&mut self, other: Element) {
        for (m, f) in other.terms {
            self.add_term(m, f);
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, f)| (m.clone(), f.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, f)| (m.clone(), f.scale(c)))
                .collect(),
        }
    }

    /// `f * self` for a base fraction `f`; coefficients sit on the left so this is termwise.
    pub fn mul_frac_left(&self, f: &Frac) -> Element {
        let mut out = Element::zero();
        for (m, g) in &self.terms {
            out.add_term(m.clone(), f.mul(g));
        }
        out
    }

    /// Highest skew degree among the terms (`None` for zero).
    pub fn skew_degree(&self) -> Option<u32> {
        self.terms.keys().map(SkewMono::degree).max()
    }

    /// One more than the index of the highest skew variable occurring.
    pub fn span(&self) -> usize {
        self.terms.keys().map(SkewMono::span).max().unwrap_or(0)
    }

    /// The coefficient if the element has no skew part.
    pub fn as_base(&self) -> Option<Frac> {
        match self.terms.len() {
            0 => None,
            1 => self.terms.get(&SkewMono::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_base(&self) -> bool {
        self.terms.keys().all(SkewMono::is_one)
    }

    /// The scalar value when the element is a rational constant.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        self.as_base()?.constant_value()
    }

    pub fn is_denominator_free(&self) -> bool {
        self.terms.values().all(Frac::is_polynomial)
    }

    /// `self * x_j^e * upper` for an element living strictly below `j`.
    pub(crate) fn append(&self, j: usize, e: u32, upper: &[u32]) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, f)| (m.append(j, e, upper), f.clone()))
                .collect(),
        }
    }
}
