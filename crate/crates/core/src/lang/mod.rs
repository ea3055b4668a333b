//! Ring expressions, presented algebras and generator maps.

pub mod checks;
pub mod map;
pub mod parse;
pub mod presentation;

use std::collections::BTreeMap;

pub use checks::{
    check_involution, check_ispe, check_mutually_inverse, check_relations, InverseReport,
    InvolutionReport, IspeReport, RelationCheck, RelationsReport,
};
pub use map::GeneratorMap;
pub use parse::{parse, Expr};
pub use presentation::Presentation;

use crate::error::{Error, Result};
use crate::tower::{Element, OreTower};

/// Names bound to elements; consulted before the tower's own generators.
pub type Bindings = BTreeMap<String, Element>;

/// Evaluates an expression to a normal-form element of `tower`.
pub fn eval(e: &Expr, tower: &OreTower, bindings: &Bindings) -> Result<Element> {
    Ok(match e {
        Expr::Name(n) => match bindings.get(n) {
            Some(x) => x.clone(),
            None => tower.gen(n)?,
        },
        Expr::Num(q) => tower.scalar(q.clone()),
        Expr::Add(l, r) => eval(l, tower, bindings)?.add(&eval(r, tower, bindings)?),
        Expr::Sub(l, r) => eval(l, tower, bindings)?.sub(&eval(r, tower, bindings)?),
        Expr::Mul(l, r) => tower.mul(&eval(l, tower, bindings)?, &eval(r, tower, bindings)?),
        Expr::Neg(x) => eval(x, tower, bindings)?.neg(),
        Expr::Pow(x, k) => tower.pow(&eval(x, tower, bindings)?, *k),
        Expr::Inv(x) => {
            let v = eval(x, tower, bindings)?;
            if v.is_zero() {
                return Err(Error::DivisionByZero);
            }
            tower.inverse(&v)?
        }
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, tower: &OreTower, bindings: &Bindings) -> Result<Element> {
    eval(&parse(text)?, tower, bindings)
}

/// Extends `t` by a skew variable whose sigma/delta images are given as expression
/// text keyed by generator name; generators not listed get `sigma(g) = g`, `delta(g) = 0`.
pub fn extend_with(
    t: &OreTower,
    name: &str,
    sigma: &[(&str, &str)],
    delta: &[(&str, &str)],
    sigma_inv: Option<&[(&str, &str)]>,
    env: &Bindings,
) -> Result<OreTower> {
    let gens = t.gen_names();
    let images = |list: &[(&str, &str)], default_identity: bool| -> Result<Vec<Element>> {
        for (g, _) in list {
            if !gens.iter().any(|x| x == g) {
                return Err(Error::MalformedTower(format!(
                    "{name}: {g} is not a generator below {name}"
                )));
            }
        }
        gens.iter()
            .enumerate()
            .map(|(k, g)| match list.iter().find(|(n, _)| n == g) {
                Some((_, text)) => eval_str(text, t, env),
                None if default_identity => Ok(t.gen_elem(k)),
                None => Ok(Element::zero()),
            })
            .collect()
    };
    let spec = crate::tower::SkewVarSpec {
        name: name.to_string(),
        sigma: images(sigma, true)?,
        delta: images(delta, false)?,
        sigma_inv: sigma_inv.map(|l| images(l, true)).transpose()?,
    };
    t.extend(spec)
}

#[cfg(test)]
mod tests;
