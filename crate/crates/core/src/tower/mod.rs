//! Iterated Ore extensions `K[x_1; s_1, d_1][x_2; s_2, d_2]...` over a
//! commutative polynomial ring `K` (optionally localized at a monoid).
//!
//! Elements are kept in PBW normal form with fraction coefficients on the
//! left and skew variables in tower order. Multiplication pushes skew
//! variables rightwards using `x r = s(r) x + d(r)`.

mod element;
pub mod growth;
pub mod sample;
pub mod wellformed;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use element::{Element, SkewMono};
pub use wellformed::{WellFormedFailure, WellFormedReport};

use crate::error::{Error, Result};
use crate::exactnum::mpoly::join_signed;
use crate::exactnum::{CoeffMapSpec, DenMonoid, Frac, MPoly, Monomial, Rational, Vars};

/// Data of one skew variable: images of every lower generator
/// (base variables first, then earlier skew variables).
#[derive(Clone, Debug)]
pub struct SkewVarSpec {
    pub name: String,
    pub sigma: Vec<Element>,
    pub delta: Vec<Element>,
    /// Claimed inverse of `sigma`, checked by the well-formedness report.
    pub sigma_inv: Option<Vec<Element>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Word {
    Base(Monomial),
    Skew(SkewMono),
}

#[derive(Debug)]
struct SkewVar {
    spec: SkewVarSpec,
    /// `sigma = id` and `delta = 0`: the variable is central over everything below it.
    commutes: bool,
    base_sigma: Option<CoeffMapSpec>,
    base_delta: Option<CoeffMapSpec>,
    /// `sigma(p_i)^-1` for each denominator generator `p_i`.
    sigma_den_inv: Vec<Frac>,
    cache: Mutex<HashMap<Word, (Element, Element)>>,
}

/// Which generator a name refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    Base(usize),
    Skew(usize),
}

#[derive(Clone, Debug)]
pub struct OreTower {
    monoid: Arc<DenMonoid>,
    skew: Vec<Arc<SkewVar>>,
}

impl OreTower {
    /// The commutative ring `K[vars]` localized at the given generators.
    pub fn new(base_vars: &[&str], monoid_gens: Vec<MPoly>) -> Result<OreTower> {
        let v = crate::exactnum::vars(base_vars);
        let monoid = DenMonoid::new(&v, monoid_gens)?;
        Ok(Self::with_monoid(Arc::new(monoid)))
    }

    pub fn with_monoid(monoid: Arc<DenMonoid>) -> OreTower {
        OreTower {
            monoid,
            skew: Vec::new(),
        }
    }

    pub fn base_vars(&self) -> &Vars {
        self.monoid.vars()
    }

    pub fn nbase(&self) -> usize {
        self.base_vars().len()
    }

    pub fn monoid(&self) -> &Arc<DenMonoid> {
        &self.monoid
    }

    pub fn is_localized(&self) -> bool {
        !self.monoid.is_empty()
    }

    pub fn num_skew(&self) -> usize {
        self.skew.len()
    }

    pub fn skew_names(&self) -> Vec<&str> {
        self.skew.iter().map(|s| s.spec.name.as_str()).collect()
    }

    pub fn skew_spec(&self, j: usize) -> &SkewVarSpec {
        &self.skew[j].spec
    }

    /// All generator names: base variables, then skew variables.
    pub fn gen_names(&self) -> Vec<String> {
        self.base_vars()
            .iter()
            .cloned()
            .chain(self.skew.iter().map(|s| s.spec.name.clone()))
            .collect()
    }

    pub fn find_gen(&self, name: &str) -> Option<Gen> {
        if let Some(i) = self.base_vars().iter().position(|v| v == name) {
            return Some(Gen::Base(i));
        }
        self.skew
            .iter()
            .position(|s| s.spec.name == name)
            .map(Gen::Skew)
    }

    fn gen_label(&self, idx: usize) -> String {
        let nb = self.nbase();
        if idx < nb {
            self.base_vars()[idx].clone()
        } else {
            self.skew[idx - nb].spec.name.clone()
        }
    }

    /// Appends one skew variable. All images must lie in `self`.
    pub fn extend(&self, spec: SkewVarSpec) -> Result<OreTower> {
        let j = self.skew.len();
        let nb = self.nbase();
        if self.find_gen(&spec.name).is_some() {
            return Err(Error::MalformedTower(format!(
                "duplicate generator name {}",
                spec.name
            )));
        }
        let want = nb + j;
        let lens_ok = spec.sigma.len() == want
            && spec.delta.len() == want
            && spec.sigma_inv.as_ref().is_none_or(|v| v.len() == want);
        if !lens_ok {
            return Err(Error::MalformedTower(format!(
                "{} needs exactly {want} sigma and delta images",
                spec.name
            )));
        }
        let all_images = spec
            .sigma
            .iter()
            .chain(&spec.delta)
            .chain(spec.sigma_inv.iter().flatten());
        for img in all_images {
            let span = img.span();
            if span > j {
                return Err(Error::VariableAboveCut {
                    var: self.skew[span - 1].spec.name.clone(),
                    cut: spec.name.clone(),
                });
            }
        }
        for (k, img) in spec.sigma.iter().enumerate() {
            if img.is_zero() {
                return Err(Error::MalformedTower(format!(
                    "sigma of {} sends {} to 0",
                    spec.name,
                    self.gen_label(k)
                )));
            }
        }

        let mut sigma_den_inv = Vec::with_capacity(self.monoid.len());
        for g in self.monoid.gens() {
            let img = self.eval_poly(g, &spec.sigma[..nb]);
            let unit = img.as_base().filter(Frac::is_unit).ok_or_else(|| {
                Error::MalformedTower(format!(
                    "sigma of {} sends the denominator {g} to {}, which is not a unit",
                    spec.name,
                    self.fmt(&img)
                ))
            })?;
            sigma_den_inv.push(unit.inv()?);
        }

        let base_imgs = |v: &[Element]| -> Option<Vec<Frac>> {
            v[..nb]
                .iter()
                .map(|e| {
                    if e.is_zero() {
                        Some(Frac::zero(&self.monoid))
                    } else {
                        e.as_base()
                    }
                })
                .collect()
        };
        let base_sigma = base_imgs(&spec.sigma)
            .map(|imgs| CoeffMapSpec::endomorphism(imgs, &self.monoid))
            .transpose()?;
        let base_delta = match (&base_sigma, base_imgs(&spec.delta)) {
            (Some(s), Some(d)) => {
                let companion = if s.is_identity() {
                    None
                } else {
                    Some(s.clone())
                };
                Some(CoeffMapSpec::derivation(d, companion, &self.monoid)?)
            }
            _ => None,
        };
        let commutes = spec.delta.iter().all(Element::is_zero)
            && spec
                .sigma
                .iter()
                .enumerate()
                .all(|(k, e)| *e == self.gen_elem(k));

        let mut skew = self.skew.clone();
        skew.push(Arc::new(SkewVar {
            spec,
            commutes,
            base_sigma,
            base_delta,
            sigma_den_inv,
            cache: Mutex::new(HashMap::new()),
        }));
        Ok(OreTower {
            monoid: self.monoid.clone(),
            skew,
        })
    }

    /// The tower with only the first `j` skew variables.
    pub fn truncate(&self, j: usize) -> OreTower {
        OreTower {
            monoid: self.monoid.clone(),
            skew: self.skew[..j].to_vec(),
        }
    }

    /// Same tower with additional denominator generators.
    pub fn localized(&self, extra: &[MPoly]) -> Result<OreTower> {
        let mut gens = self.monoid.gens().to_vec();
        for p in extra {
            let (_, m) = p.monic().ok_or(Error::DivisionByZero)?;
            if !gens.contains(&m) {
                gens.push(m);
            }
        }
        let monoid = Arc::new(DenMonoid::new(self.base_vars(), gens)?);
        self.rebuild_over(monoid)
    }

    /// Same tower over a different denominator monoid (every image must still be defined).
    pub fn rebuild_over(&self, monoid: Arc<DenMonoid>) -> Result<OreTower> {
        let mut t = OreTower::with_monoid(monoid.clone());
        for sv in &self.skew {
            let rb = |v: &Vec<Element>| {
                v.iter()
                    .map(|e| rebase(e, &monoid))
                    .collect::<Result<Vec<_>>>()
            };
            let spec = SkewVarSpec {
                name: sv.spec.name.clone(),
                sigma: rb(&sv.spec.sigma)?,
                delta: rb(&sv.spec.delta)?,
                sigma_inv: sv.spec.sigma_inv.as_ref().map(rb).transpose()?,
            };
            t = t.extend(spec)?;
        }
        Ok(t)
    }

    /// Moves an element of another tower with the same generator names into this one.
    pub fn import(&self, e: &Element) -> Result<Element> {
        rebase(e, &self.monoid)
    }

    // ----- constructors of elements -----

    pub fn zero(&self) -> Element {
        Element::zero()
    }

    pub fn one(&self) -> Element {
        Element::from_frac(Frac::one(&self.monoid))
    }

    pub fn scalar(&self, c: Rational) -> Element {
        Element::from_frac(Frac::scalar(c, &self.monoid))
    }

    pub fn int(&self, c: i64) -> Element {
        self.scalar(Rational::from_integer(c.into()))
    }

    pub fn frac(&self, f: Frac) -> Element {
        Element::from_frac(f)
    }

    pub fn poly(&self, p: MPoly) -> Element {
        Element::from_frac(Frac::from_poly(p, &self.monoid))
    }

    pub fn base_var(&self, i: usize) -> Element {
        self.poly(MPoly::var(self.base_vars(), i))
    }

    pub fn skew_var(&self, j: usize) -> Element {
        Element::term(SkewMono::var(j), Frac::one(&self.monoid))
    }

    pub fn monomial(&self, m: SkewMono) -> Element {
        Element::term(m, Frac::one(&self.monoid))
    }

    /// Generator `idx` in the combined numbering (base, then skew).
    pub fn gen_elem(&self, idx: usize) -> Element {
        let nb = self.nbase();
        if idx < nb {
            self.base_var(idx)
        } else {
            self.skew_var(idx - nb)
        }
    }

    pub fn gen(&self, name: &str) -> Result<Element> {
        match self.find_gen(name) {
            Some(Gen::Base(i)) => Ok(self.base_var(i)),
            Some(Gen::Skew(j)) => Ok(self.skew_var(j)),
            None => Err(Error::UnboundName(name.to_string())),
        }
    }

    /// Inverse of a denominator generator, `p_i^-1`.
    pub fn gen_inverse(&self, i: usize) -> Element {
        let mut exps = vec![0; self.monoid.len()];
        exps[i] = 1;
        Element::from_frac(Frac::gen_inverse_power(exps, &self.monoid))
    }

    // ----- arithmetic -----

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        if y.is_zero() {
            return out;
        }
        for (m, c) in x.terms() {
            let mut acc = y.clone();
            for j in (0..m.span()).rev() {
                for _ in 0..m.exp(j) {
                    acc = self.left_mul_var(j, &acc);
                }
            }
            out.add_assign(acc.mul_frac_left(c));
        }
        out
    }

    pub fn mul_all<'a>(&self, factors: impl IntoIterator<Item = &'a Element>) -> Element {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, x: &Element, e: u32) -> Element {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    /// Inverse of an element that is a unit of the coefficient ring.
    pub fn inverse(&self, x: &Element) -> Result<Element> {
        let f = x
            .as_base()
            .ok_or_else(|| Error::NotInvertible(self.fmt(x)))?;
        Ok(Element::from_frac(f.inv()?))
    }

    /// Whether `x` commutes with every generator.
    pub fn is_central(&self, x: &Element) -> bool {
        (0..self.nbase() + self.num_skew()).all(|k| self.commutator(x, &self.gen_elem(k)).is_zero())
    }

    /// Returns `(d, d*x)` with `d` a product of denominator generators and `d*x` denominator-free.
    pub fn clear_denominators(&self, x: &Element) -> (MPoly, Element) {
        let mut exps = vec![0u32; self.monoid.len()];
        for (_, f) in x.terms() {
            for (e, &k) in exps.iter_mut().zip(f.den_exps()) {
                *e = (*e).max(k);
            }
        }
        let d = self.monoid.product(&exps);
        let cleared = x.mul_frac_left(&Frac::from_poly(d.clone(), &self.monoid));
        (d, cleared)
    }

    /// `x_j * y`.
    fn left_mul_var(&self, j: usize, y: &Element) -> Element {
        let sv = &self.skew[j];
        let mut out = Element::zero();
        for (mono, coef) in y.terms() {
            let (lower, e, upper) = mono.split(j);
            if sv.commutes {
                out.add_term(lower.append(j, e + 1, upper), coef.clone());
                continue;
            }
            let (s, d) = self.sigma_delta_term(j, coef, &lower);
            out.add_assign(s.append(j, e + 1, upper));
            out.add_assign(d.append(j, e, upper));
        }
        out
    }

    /// `(sigma_j(f L), delta_j(f L))` for a coefficient `f` and a monomial `L` below `j`.
    fn sigma_delta_term(&self, j: usize, f: &Frac, l: &SkewMono) -> (Element, Element) {
        let (sf, df) = self.sigma_delta_frac(j, f);
        if l.is_one() {
            return (sf, df);
        }
        let (sl, dl) = self.sigma_delta_word(j, Word::Skew(l.clone()));
        let s = self.mul(&sf, &sl);
        let d = self
            .mul(&sf, &dl)
            .add(&self.mul(&df, &self.monomial(l.clone())));
        (s, d)
    }

    fn sigma_delta_frac(&self, j: usize, f: &Frac) -> (Element, Element) {
        let sv = &self.skew[j];
        if let (Some(bs), Some(bd)) = (&sv.base_sigma, &sv.base_delta) {
            // sigma(p_i) are units, checked at construction
            let s = bs.apply(f).expect("sigma of a denominator is a unit");
            let d = bd.apply(f).expect("sigma of a denominator is a unit");
            return (Element::from_frac(s), Element::from_frac(d));
        }
        let (sn, dn) = self.sigma_delta_poly(j, f.num());
        if f.is_polynomial() {
            return (sn, dn);
        }
        let mut dinv = Frac::one(&self.monoid);
        for (inv, &e) in sv.sigma_den_inv.iter().zip(f.den_exps()) {
            if e > 0 {
                dinv = dinv.mul(&inv.pow(e));
            }
        }
        let (_, dd) = self.sigma_delta_poly(j, &f.den());
        let s = sn.mul_frac_left(&dinv);
        let d = dn
            .sub(&self.mul(&dd, &Element::from_frac(f.clone())))
            .mul_frac_left(&dinv);
        (s, d)
    }

    fn sigma_delta_poly(&self, j: usize, p: &MPoly) -> (Element, Element) {
        let mut s = Element::zero();
        let mut d = Element::zero();
        for (m, c) in p.terms() {
            let (sm, dm) = self.sigma_delta_word(j, Word::Base(m.clone()));
            s.add_assign(sm.scale(c));
            d.add_assign(dm.scale(c));
        }
        (s, d)
    }

    /// `sigma_j` and `delta_j` of a base or skew monomial, by the twisted Leibniz rule.
    fn sigma_delta_word(&self, j: usize, w: Word) -> (Element, Element) {
        let sv = &self.skew[j];
        if let Some(hit) = sv.cache.lock().unwrap().get(&w) {
            return hit.clone();
        }
        let nb = self.nbase();
        let peeled = match &w {
            Word::Base(m) => m.0.iter().rposition(|&e| e > 0).map(|i| {
                let mut rest = m.clone();
                rest.0[i] -= 1;
                (Word::Base(rest), i)
            }),
            Word::Skew(l) => l.peel_last().map(|(rest, i)| (Word::Skew(rest), nb + i)),
        };
        let result = match peeled {
            None => (self.one(), Element::zero()),
            Some((rest, k)) => {
                let (sp, dp) = self.sigma_delta_word(j, rest);
                let x = self.gen_elem(k);
                let s = self.mul(&sp, &sv.spec.sigma[k]);
                let d = self.mul(&sp, &sv.spec.delta[k]).add(&self.mul(&dp, &x));
                (s, d)
            }
        };
        sv.cache.lock().unwrap().insert(w, result.clone());
        result
    }

    /// Evaluates a base polynomial at the given images of the base variables.
    pub fn eval_poly(&self, p: &MPoly, images: &[Element]) -> Element {
        let mut out = Element::zero();
        let mut powers: HashMap<(usize, u32), Element> = HashMap::new();
        for (m, c) in p.terms() {
            let mut t = self.scalar(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((i, e))
                    .or_insert_with(|| self.pow(&images[i], e))
                    .clone();
                t = self.mul(&t, &pw);
            }
            out.add_assign(t);
        }
        out
    }

    fn check_cut(&self, j: usize, x: &Element) -> Result<()> {
        let span = x.span();
        if span > j {
            return Err(Error::VariableAboveCut {
                var: self.skew[span - 1].spec.name.clone(),
                cut: self.skew[j].spec.name.clone(),
            });
        }
        Ok(())
    }

    /// `sigma_j(x)` for `x` in the subring below skew variable `j`.
    pub fn apply_sigma(&self, j: usize, x: &Element) -> Result<Element> {
        self.check_cut(j, x)?;
        let mut out = Element::zero();
        for (m, f) in x.terms() {
            out.add_assign(self.sigma_delta_term(j, f, m).0);
        }
        Ok(out)
    }

    /// `delta_j(x)` for `x` in the subring below skew variable `j`.
    pub fn apply_delta(&self, j: usize, x: &Element) -> Result<Element> {
        self.check_cut(j, x)?;
        let mut out = Element::zero();
        for (m, f) in x.terms() {
            out.add_assign(self.sigma_delta_term(j, f, m).1);
        }
        Ok(out)
    }

    /// Applies the claimed inverse of `sigma_j` (by substitution).
    pub fn apply_sigma_inv(&self, j: usize, x: &Element) -> Result<Option<Element>> {
        self.check_cut(j, x)?;
        let Some(inv) = &self.skew[j].spec.sigma_inv else {
            return Ok(None);
        };
        Ok(Some(self.substitute(x, inv)?))
    }

    /// Image of `x` under the endomorphism sending generator `k` to `images[k]`
    /// (`images` covers base and skew generators in order; missing tail entries are fixed).
    pub fn substitute(&self, x: &Element, images: &[Element]) -> Result<Element> {
        let nb = self.nbase();
        let mut den_inv = Vec::with_capacity(self.monoid.len());
        for g in self.monoid.gens() {
            let img = self.eval_poly(g, &images[..nb]);
            den_inv.push(self.inverse(&img)?);
        }
        let mut out = Element::zero();
        for (m, f) in x.terms() {
            let mut t = self.eval_poly(f.num(), &images[..nb]);
            for (inv, &e) in den_inv.iter().zip(f.den_exps()) {
                if e > 0 {
                    t = self.mul(&t, &self.pow(inv, e));
                }
            }
            for (k, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    let img = images
                        .get(nb + k)
                        .cloned()
                        .unwrap_or_else(|| self.skew_var(k));
                    t = self.mul(&t, &self.pow(&img, e));
                }
            }
            out.add_assign(t);
        }
        Ok(out)
    }

    // ----- printing -----

    /// Fully expanded, parseable rendering of an element.
    pub fn fmt(&self, x: &Element) -> String {
        let names = self.skew_names();
        let mut items = Vec::new();
        for (m, f) in x.terms().rev() {
            let extra: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| {
                    if e == 1 {
                        names[k].to_string()
                    } else {
                        format!("{}^{e}", names[k])
                    }
                })
                .collect();
            items.extend(f.signed_terms(&extra));
        }
        join_signed(items)
    }

    /// One line per skew variable: `x: sigma(g) = ..., delta(g) = ...` (identity/zero entries omitted).
    pub fn describe(&self) -> String {
        let mut lines = vec![format!("base [{}]", self.base_vars().join(", "))];
        if self.is_localized() {
            let gens: Vec<String> = self.monoid.gens().iter().map(|g| g.to_string()).collect();
            lines.push(format!("localized at [{}]", gens.join(", ")));
        }
        for (j, sv) in self.skew.iter().enumerate() {
            let lower = self.truncate(j);
            let mut parts = Vec::new();
            for (k, img) in sv.spec.sigma.iter().enumerate() {
                if *img != self.gen_elem(k) {
                    parts.push(format!("sigma({}) = {}", self.gen_label(k), lower.fmt(img)));
                }
            }
            for (k, img) in sv.spec.delta.iter().enumerate() {
                if !img.is_zero() {
                    parts.push(format!("delta({}) = {}", self.gen_label(k), lower.fmt(img)));
                }
            }
            let body = if parts.is_empty() {
                "commutes".to_string()
            } else {
                parts.join(", ")
            };
            lines.push(format!("{}: {}", sv.spec.name, body));
        }
        lines.join("\n")
    }

    /// Defining commutation relations `x*g - sigma(g)*x - delta(g)` (and `[x,y]` for base pairs).
    pub fn relations(&self) -> Vec<(String, Element)> {
        let nb = self.nbase();
        let mut out = Vec::new();
        for i in 0..nb {
            for k in i + 1..nb {
                out.push((
                    format!(
                        "{}*{} = {}*{}",
                        self.gen_label(k),
                        self.gen_label(i),
                        self.gen_label(i),
                        self.gen_label(k)
                    ),
                    Element::zero(),
                ));
            }
        }
        for (j, sv) in self.skew.iter().enumerate() {
            let x = self.skew_var(j);
            let lower = self.truncate(j);
            for k in 0..nb + j {
                let g = self.gen_elem(k);
                let rhs = self.mul(&sv.spec.sigma[k], &x).add(&sv.spec.delta[k]);
                let lhs = self.mul(&x, &g);
                let label = format!(
                    "{}*{} = ({})*{} + ({})",
                    sv.spec.name,
                    self.gen_label(k),
                    lower.fmt(&sv.spec.sigma[k]),
                    sv.spec.name,
                    lower.fmt(&sv.spec.delta[k])
                );
                out.push((label, lhs.sub(&rhs)));
            }
        }
        out
    }
}

/// Re-expresses an element over another denominator monoid on the same variables.
pub fn rebase(e: &Element, monoid: &Arc<DenMonoid>) -> Result<Element> {
    let mut out = Element::zero();
    for (m, f) in e.terms() {
        out.add_term(m.clone(), rebase_frac(f, monoid)?);
    }
    Ok(out)
}

pub fn rebase_frac(f: &Frac, monoid: &Arc<DenMonoid>) -> Result<Frac> {
    let src = f.monoid();
    let num = if src.vars() == monoid.vars() {
        f.num().clone()
    } else {
        relabel_poly(f.num(), monoid.vars())?
    };
    let mut exps = vec![0u32; monoid.len()];
    for (g, &e) in src.gens().iter().zip(f.den_exps()) {
        if e == 0 {
            continue;
        }
        let g = if src.vars() == monoid.vars() {
            g.clone()
        } else {
            relabel_poly(g, monoid.vars())?
        };
        let pos = monoid
            .position(&g)
            .ok_or_else(|| Error::DenominatorNotInMonoid(g.to_string()))?;
        exps[pos] += e;
    }
    Ok(Frac::from_parts(num, exps, monoid))
}

/// Renames variables by name into a different variable list.
pub fn relabel_poly(p: &MPoly, target: &Vars) -> Result<MPoly> {
    let map: Vec<usize> = p
        .vars()
        .iter()
        .map(|v| target.iter().position(|t| t == v))
        .enumerate()
        .map(|(i, pos)| match pos {
            Some(k) => Ok(k),
            None if p.degree_in(i).unwrap_or(0) == 0 => Ok(usize::MAX),
            None => Err(Error::UnboundName(p.vars()[i].clone())),
        })
        .collect::<Result<_>>()?;
    Ok(p.relabel(target, &map))
}

#[cfg(test)]
mod tests;
