use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::parse::Expr;
use super::presentation::Presentation;
use super::{eval, Bindings};
use crate::error::{Error, Result};
use crate::tower::{Element, OreTower};

/// An assignment of target elements to the generators of a source algebra.
#[derive(Clone, Debug)]
pub struct GeneratorMap {
    pub name: String,
    pub source: Presentation,
    /// Present when the source is itself a tower, which allows applying the map to elements.
    pub source_tower: Option<OreTower>,
    pub target: OreTower,
    pub images: Vec<(String, Expr)>,
    values: BTreeMap<String, Element>,
}

impl GeneratorMap {
    /// Evaluates `images` in `target` (with `env` available for auxiliary names).
    pub fn new(
        name: &str,
        source: Presentation,
        source_tower: Option<OreTower>,
        target: OreTower,
        images: Vec<(String, Expr)>,
        env: &Bindings,
    ) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (g, e) in &images {
            if !source.generators.contains(g) {
                return Err(Error::invalid(format!(
                    "map {name}: {g} is not a generator of {}",
                    source.name
                )));
            }
            values.insert(g.clone(), eval(e, &target, env)?);
        }
        if let Some(missing) = source.generators.iter().find(|g| !values.contains_key(*g)) {
            return Err(Error::invalid(format!(
                "map {name}: no image for generator {missing}"
            )));
        }
        Ok(GeneratorMap {
            name: name.to_string(),
            source,
            source_tower,
            target,
            images,
            values,
        })
    }

    /// Convenience constructor from `(generator, expression text)` pairs.
    pub fn from_strs(
        name: &str,
        source: Presentation,
        source_tower: Option<OreTower>,
        target: OreTower,
        images: &[(&str, &str)],
        env: &Bindings,
    ) -> Result<Self> {
        let images = images
            .iter()
            .map(|(g, e)| Ok((g.to_string(), super::parse(e)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(name, source, source_tower, target, images, env)
    }

    /// The identity map of a tower onto itself.
    pub fn identity(name: &str, source: Presentation, tower: &OreTower) -> Result<Self> {
        let images = source
            .generators
            .iter()
            .map(|g| (g.clone(), Expr::Name(g.clone())))
            .collect();
        Self::new(
            name,
            source,
            Some(tower.clone()),
            tower.clone(),
            images,
            &Bindings::new(),
        )
    }

    pub fn image(&self, gen: &str) -> Option<&Element> {
        self.values.get(gen)
    }

    pub fn values(&self) -> &BTreeMap<String, Element> {
        &self.values
    }

    /// Images keyed by generator, as bindings for evaluating source expressions in the target.
    pub fn as_bindings(&self) -> Bindings {
        self.values.clone()
    }

    /// Whether source and target are the same algebra (same generator names).
    pub fn is_endomorphism(&self) -> bool {
        self.source_tower
            .as_ref()
            .is_some_and(|s| s.gen_names() == self.target.gen_names())
    }

    /// Image of a source-tower element: coefficients are substituted and
    /// denominators inverted in the target.
    pub fn apply(&self, x: &Element) -> Result<Element> {
        let src = self.source_tower.as_ref().ok_or_else(|| {
            Error::invalid(format!(
                "map {} has no source tower to apply to elements",
                self.name
            ))
        })?;
        let t = &self.target;
        let base_images: Vec<Element> = src
            .base_vars()
            .iter()
            .map(|v| self.values[v].clone())
            .collect();
        let skew_images: Vec<Element> = src
            .skew_names()
            .iter()
            .map(|v| self.values[*v].clone())
            .collect();
        let mut den_cache: BTreeMap<usize, Element> = BTreeMap::new();
        let mut out = Element::zero();
        for (m, f) in x.terms() {
            if f.num().vars() != src.base_vars() {
                return Err(Error::invalid(
                    "element does not belong to the source of the map",
                ));
            }
            let mut term = t.eval_poly(f.num(), &base_images);
            for (i, &e) in f.den_exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let inv = match den_cache.entry(i) {
                    Entry::Occupied(o) => o.into_mut(),
                    Entry::Vacant(slot) => {
                        let g = &f.monoid().gens()[i];
                        let img = t.eval_poly(g, &base_images);
                        let inv = t.inverse(&img).map_err(|_| {
                            Error::NotInvertible(format!(
                                "{} (image of denominator {g} under {})",
                                t.fmt(&img),
                                self.name
                            ))
                        })?;
                        slot.insert(inv)
                    }
                };
                term = t.mul(&term, &t.pow(inv, e));
            }
            for (k, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = t.mul(&term, &t.pow(&skew_images[k], e));
                }
            }
            out.add_assign(term);
        }
        Ok(out)
    }
}
