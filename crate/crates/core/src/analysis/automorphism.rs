use serde::Serialize;

use super::*;
use crate::lang::{check_relations, GeneratorMap, RelationsReport};
use crate::report::Verdict;

/// An assignment of images checked to respect the defining relations,
/// optionally with `pi(g) = lambda * g` for a distinguished element `g`.
#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismReport {
    pub relations: RelationsReport,
    /// `(description, holds, residual)` for the scaling condition.
    pub scaling: Option<(String, bool, String)>,
}

impl Verdict for AutomorphismReport {
    fn passed(&self) -> bool {
        self.relations.passed() && self.scaling.as_ref().is_none_or(|s| s.1)
    }

    fn diagnostics(&self) -> Vec<String> {
        let mut out = self.relations.diagnostics();
        if let Some((what, ok, res)) = &self.scaling {
            if !ok {
                out.push(format!("{what} fails; residual: {res}"));
            }
        }
        out
    }
}

/// Checks an endomorphism given by generator images; with `scaled = Some((g, lambda))`
/// also verifies `pi(g) = lambda * g`.
pub fn automorphism_instance(
    map: &GeneratorMap,
    scaled: Option<(&Element, &Rational)>,
) -> Result<AutomorphismReport> {
    let relations = check_relations(&map.source, map)?;
    let scaling = match scaled {
        None => None,
        Some((g, lambda)) => {
            let img = map.apply(g)?;
            let want = map.target.import(g)?.scale(lambda);
            let res = img.sub(&want);
            let t = &map.target;
            Some((
                format!(
                    "pi({}) = {}*({})",
                    t.fmt(g),
                    crate::exactnum::mpoly::fmt_rational(lambda),
                    t.fmt(g)
                ),
                res.is_zero(),
                t.fmt(&res),
            ))
        }
    };
    Ok(AutomorphismReport { relations, scaling })
}
