//! Fractions whose denominators come from a declared multiplicative monoid.
//!
//! A [`DenMonoid`] is generated by monic, pairwise non-associate polynomials.
//! Denominators are stored as exponent vectors over those generators, which
//! makes the reduced form canonical once every generator is irreducible.

use std::fmt;
use std::sync::Arc;

use num::{Signed, Zero};

use super::mpoly::{join_signed, monomial_factors, term_body, MPoly, Vars};
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct DenMonoid {
    vars: Vars,
    gens: Vec<MPoly>,
}

impl PartialEq for DenMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.gens == other.gens
    }
}

impl Eq for DenMonoid {}

impl DenMonoid {
    pub fn trivial(vars: &Vars) -> Self {
        DenMonoid {
            vars: vars.clone(),
            gens: Vec::new(),
        }
    }

    /// Builds a monoid from generator polynomials, normalizing each to be monic.
    pub fn new(vars: &Vars, gens: Vec<MPoly>) -> Result<Self> {
        let mut out: Vec<MPoly> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.is_constant() {
                return Err(Error::invalid(format!("monoid generator {g} is a scalar")));
            }
            let (_, m) = g.monic().expect("nonzero");
            if out.contains(&m) {
                return Err(Error::invalid(format!(
                    "monoid generators must be pairwise non-associate ({m})"
                )));
            }
            out.push(m);
        }
        Ok(DenMonoid {
            vars: vars.clone(),
            gens: out,
        })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn gens(&self) -> &[MPoly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Index of the generator associate to `p`, if any.
    pub fn position(&self, p: &MPoly) -> Option<usize> {
        let (_, m) = p.monic()?;
        self.gens.iter().position(|g| *g == m)
    }

    /// Writes `p = scalar * prod gen_i^e_i` by greedy exact division.
    pub fn decompose(&self, p: &MPoly) -> Option<(Rational, Vec<u32>)> {
        if p.is_zero() {
            return None;
        }
        let mut rest = p.clone();
        let mut exps = vec![0u32; self.gens.len()];
        for (i, g) in self.gens.iter().enumerate() {
            while let Some(q) = rest.divide_exact(g) {
                rest = q;
                exps[i] += 1;
            }
        }
        let c = rest.constant_value()?;
        Some((c, exps))
    }

    pub fn contains(&self, p: &MPoly) -> bool {
        self.decompose(p).is_some()
    }

    pub fn product(&self, exps: &[u32]) -> MPoly {
        let mut acc = MPoly::one(&self.vars);
        for (g, &e) in self.gens.iter().zip(exps) {
            if e > 0 {
                acc = &acc * &g.pow(e);
            }
        }
        acc
    }
}

/// Normalized fraction `num / prod gen_i^den_i`.
#[derive(Clone, Debug)]
pub struct Frac {
    num: MPoly,
    den: Vec<u32>,
    monoid: Arc<DenMonoid>,
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for Frac {}

impl Frac {
    pub fn zero(monoid: &Arc<DenMonoid>) -> Self {
        Frac {
            num: MPoly::zero(monoid.vars()),
            den: vec![0; monoid.len()],
            monoid: monoid.clone(),
        }
    }

    pub fn one(monoid: &Arc<DenMonoid>) -> Self {
        Self::from_poly(MPoly::one(monoid.vars()), monoid)
    }

    pub fn scalar(c: Rational, monoid: &Arc<DenMonoid>) -> Self {
        Self::from_poly(MPoly::constant(monoid.vars(), c), monoid)
    }

    pub fn from_poly(num: MPoly, monoid: &Arc<DenMonoid>) -> Self {
        Frac {
            num,
            den: vec![0; monoid.len()],
            monoid: monoid.clone(),
        }
    }

    /// `num / den` reduced; fails when `den` is not a scalar times a monoid element.
    pub fn new(num: MPoly, den: &MPoly, monoid: &Arc<DenMonoid>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, exps) = monoid
            .decompose(den)
            .ok_or_else(|| Error::DenominatorNotInMonoid(den.to_string()))?;
        Ok(Self::from_parts(num.scale(&c.recip()), exps, monoid))
    }

    pub(crate) fn from_parts(num: MPoly, den: Vec<u32>, monoid: &Arc<DenMonoid>) -> Self {
        let mut f = Frac {
            num,
            den,
            monoid: monoid.clone(),
        };
        f.cancel();
        f
    }

    /// `prod gen_i^(-e_i)`.
    pub fn gen_inverse_power(exps: Vec<u32>, monoid: &Arc<DenMonoid>) -> Self {
        Self::from_parts(MPoly::one(monoid.vars()), exps, monoid)
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.iter_mut().for_each(|e| *e = 0);
            return;
        }
        for i in 0..self.den.len() {
            while self.den[i] > 0 {
                match self.num.divide_exact(&self.monoid.gens()[i]) {
                    Some(q) => {
                        self.num = q;
                        self.den[i] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den_exps(&self) -> &[u32] {
        &self.den
    }

    pub fn den(&self) -> MPoly {
        self.monoid.product(&self.den)
    }

    pub fn monoid(&self) -> &Arc<DenMonoid> {
        &self.monoid
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.iter().all(|&e| e == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn neg(&self) -> Frac {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
            monoid: self.monoid.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Frac {
        if c.is_zero() {
            return Frac::zero(&self.monoid);
        }
        Frac {
            num: self.num.scale(c),
            den: self.den.clone(),
            monoid: self.monoid.clone(),
        }
    }

    pub fn add(&self, other: &Frac) -> Frac {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return Self::from_parts(&self.num + &other.num, self.den.clone(), &self.monoid);
        }
        let lcm: Vec<u32> = self
            .den
            .iter()
            .zip(&other.den)
            .map(|(a, b)| *a.max(b))
            .collect();
        let lift = |f: &Frac| {
            let extra: Vec<u32> = lcm.iter().zip(&f.den).map(|(l, e)| l - e).collect();
            &f.num * &self.monoid.product(&extra)
        };
        Self::from_parts(&lift(self) + &lift(other), lcm.clone(), &self.monoid)
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        if self.is_zero() || other.is_zero() {
            return Frac::zero(&self.monoid);
        }
        let den: Vec<u32> = self
            .den
            .iter()
            .zip(&other.den)
            .map(|(a, b)| a + b)
            .collect();
        Self::from_parts(&self.num * &other.num, den, &self.monoid)
    }

    pub fn mul_poly(&self, p: &MPoly) -> Frac {
        Self::from_parts(&self.num * p, self.den.clone(), &self.monoid)
    }

    pub fn pow(&self, e: u32) -> Frac {
        let mut acc = Frac::one(&self.monoid);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; requires the numerator to be a unit of the localization.
    pub fn inv(&self) -> Result<Frac> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, exps) = self
            .monoid
            .decompose(&self.num)
            .ok_or_else(|| Error::NotInvertible(self.to_string()))?;
        let num = self.monoid.product(&self.den).scale(&c.recip());
        Ok(Self::from_parts(num, exps, &self.monoid))
    }

    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.monoid.contains(&self.num)
    }

    /// Cross-multiplication equality, independent of normalization.
    pub fn cross_eq(&self, other: &Frac) -> bool {
        &self.num * &other.den() == &other.num * &self.den()
    }

    /// Factors printed after a coefficient: `inv(g)^k` for each denominator generator.
    pub(crate) fn den_factors(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (g, &e) in self.monoid.gens().iter().zip(&self.den) {
            if e == 0 {
                continue;
            }
            let s = format!("inv({g})");
            out.push(if e == 1 { s } else { format!("{s}^{e}") });
        }
        out
    }

    /// Signed term list `(negative, body)` with `extra` factors appended to each term.
    pub(crate) fn signed_terms(&self, extra: &[String]) -> Vec<(bool, String)> {
        let den = self.den_factors();
        self.num
            .terms()
            .rev()
            .map(|(m, c)| {
                let mut f = monomial_factors(m, self.num.vars());
                f.extend(den.iter().cloned());
                f.extend(extra.iter().cloned());
                (c.is_negative(), term_body(c, f))
            })
            .collect()
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        f.write_str(&join_signed(self.signed_terms(&[])))
    }
}
