//! Constructors for the algebras studied here, bundled with their
//! distinguished elements, involutions and cross-presentation maps.
//!
//! Every constructor writes its defining relations out as text, independently
//! of the sigma/delta data of the tower, so [`AlgebraBundle::self_check`]
//! compares two descriptions of the same algebra.

pub mod birational;
mod families;
mod gjma;
mod spec;

use std::collections::BTreeMap;

pub use families::*;
pub use gjma::{make_g, make_gf};
pub use spec::{from_spec_str, Param, CTOR_NAMES};

use crate::error::{Error, Result};
use crate::exactnum::MPoly;
use crate::lang::{check_relations, GeneratorMap, Presentation, RelationsReport};
use crate::tower::{Element, OreTower};

/// One way of writing an algebra: a tower, its textual presentation and,
/// when the algebra carries one, its involution.
#[derive(Clone, Debug)]
pub struct Form {
    pub tower: OreTower,
    pub presentation: Presentation,
    pub tau: Option<GeneratorMap>,
}

impl Form {
    /// Reduces every presentation relation in the tower.
    pub fn self_check(&self) -> Result<RelationsReport> {
        let id = GeneratorMap::identity(
            &self.presentation.name,
            self.presentation.clone(),
            &self.tower,
        )?;
        check_relations(&self.presentation, &id)
    }
}

/// A distinguished element together with the form it lives in
/// (`None` for the main form, otherwise the key of an alternate).
#[derive(Clone, Debug)]
pub struct Named {
    pub element: Element,
    pub home: Option<String>,
}

#[derive(Clone, Debug)]
pub struct AlgebraBundle {
    pub name: String,
    pub main: Form,
    /// Other presentations and localizations, keyed by a short label (`pres1`, `ispe`, `u`, `loc`, ...).
    pub alternates: BTreeMap<String, Form>,
    pub named: BTreeMap<String, Named>,
    /// Generator maps between forms, e.g. the change of presentation `d = u + a`.
    pub maps: BTreeMap<String, GeneratorMap>,
    /// Short description of where the algebra comes from.
    pub provenance: String,
    /// Observations recorded during construction (failed literal relations and the like).
    pub notes: Vec<String>,
}

impl AlgebraBundle {
    fn new(name: &str, main: Form, provenance: &str) -> Self {
        AlgebraBundle {
            name: name.to_string(),
            main,
            alternates: BTreeMap::new(),
            named: BTreeMap::new(),
            maps: BTreeMap::new(),
            provenance: provenance.to_string(),
            notes: Vec::new(),
        }
    }

    pub fn tower(&self) -> &OreTower {
        &self.main.tower
    }

    pub fn presentation(&self) -> &Presentation {
        &self.main.presentation
    }

    pub fn tau(&self) -> Option<&GeneratorMap> {
        self.main.tau.as_ref()
    }

    /// The main form (`None` or `""`) or an alternate.
    pub fn form(&self, key: Option<&str>) -> Result<&Form> {
        match key {
            None | Some("") => Ok(&self.main),
            Some(k) => self
                .alternates
                .get(k)
                .ok_or_else(|| Error::UnboundName(format!("{}.{k}", self.name))),
        }
    }

    pub fn forms(&self) -> impl Iterator<Item = (Option<&str>, &Form)> {
        std::iter::once((None, &self.main))
            .chain(self.alternates.iter().map(|(k, f)| (Some(k.as_str()), f)))
    }

    /// A named element and the tower it lives in.
    pub fn element(&self, name: &str) -> Result<(&Element, &OreTower)> {
        let n = self
            .named
            .get(name)
            .ok_or_else(|| Error::UnboundName(format!("{}.{name}", self.name)))?;
        Ok((&n.element, &self.form(n.home.as_deref())?.tower))
    }

    fn name_elem(&mut self, name: &str, element: Element, home: Option<&str>) {
        self.named.insert(
            name.to_string(),
            Named {
                element,
                home: home.map(str::to_string),
            },
        );
    }

    /// Presentation relations of every form, reduced in the matching tower.
    pub fn self_check(&self) -> Result<Vec<(String, RelationsReport)>> {
        self.forms()
            .map(|(k, f)| Ok((k.unwrap_or("main").to_string(), f.self_check()?)))
            .collect()
    }
}

/// Builds a form and rejects towers whose sigma/delta data is inconsistent.
fn form(tower: OreTower, presentation: Presentation, tau: Option<GeneratorMap>) -> Result<Form> {
    let wf = tower.check_well_formed();
    if let Some(f) = wf.failures.first() {
        return Err(Error::MalformedTower(format!(
            "{}: {} fails on {} with residual {}",
            f.var, f.check, f.relation, f.residual
        )));
    }
    Ok(Form {
        tower,
        presentation,
        tau,
    })
}

/// Parenthesized polynomial text for splicing into relations.
fn paren(p: &MPoly) -> String {
    format!("({p})")
}

/// Re-expresses a polynomial in `c` over another variable list containing `c`.
fn lift(p: &MPoly, t: &OreTower) -> Result<MPoly> {
    crate::tower::relabel_poly(p, t.base_vars())
}

/// The polynomial ring `k[c]`, the common base of most constructors.
pub fn base_c() -> OreTower {
    OreTower::new(&["c"], vec![]).expect("trivial monoid")
}

/// Parses a polynomial in `c` (or in the given variables).
pub fn poly_in(vars: &[&str], text: &str) -> Result<MPoly> {
    let t = OreTower::new(vars, vec![])?;
    let e = crate::lang::eval_str(text, &t, &Default::default()).map_err(|e| match e {
        Error::UnboundName(n) => Error::invalid(format!(
            "{text} is not a polynomial in {}: unknown name {n}",
            vars.join(", ")
        )),
        other => other,
    })?;
    if e.is_zero() {
        return Ok(MPoly::zero(t.base_vars()));
    }
    match e.as_base() {
        Some(f) if f.is_polynomial() => Ok(f.num().clone()),
        _ => Err(Error::invalid(format!(
            "{text} is not a polynomial in {}",
            vars.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests;
