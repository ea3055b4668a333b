use serde::Serialize;

use super::parse::{parse, Expr};
use crate::error::{Error, Result};
use crate::tower::OreTower;

/// One defining relation, kept with its source text for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub text: String,
    #[serde(skip)]
    pub expr: Expr,
}

/// Generators, named constants (defined by expressions in the generators) and
/// relations asserted to vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<String>,
    pub constants: Vec<(String, Expr)>,
    pub relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(
        name: &str,
        generators: &[&str],
        constants: &[(&str, &str)],
        relations: &[&str],
    ) -> Result<Self> {
        let mut p = Presentation {
            name: name.to_string(),
            generators: generators.iter().map(|s| s.to_string()).collect(),
            constants: Vec::new(),
            relations: Vec::new(),
        };
        for (n, text) in constants {
            let e = parse(text)?;
            p.check_names(&e)?;
            p.constants.push((n.to_string(), e));
        }
        for text in relations {
            p.push_relation(text)?;
        }
        Ok(p)
    }

    fn check_names(&self, e: &Expr) -> Result<()> {
        for n in e.names() {
            let known = self.generators.contains(&n) || self.constants.iter().any(|(c, _)| *c == n);
            if !known {
                return Err(Error::UnboundName(n));
            }
        }
        Ok(())
    }

    pub fn push_relation(&mut self, text: &str) -> Result<()> {
        let expr = parse(text)?;
        self.check_names(&expr)?;
        self.relations.push(Relation {
            text: text.trim().to_string(),
            expr,
        });
        Ok(())
    }

    /// Presentation read off a tower: base variables commute, and each skew
    /// variable satisfies `x*g = sigma(g)*x + delta(g)` on lower generators.
    pub fn from_tower(name: &str, t: &OreTower) -> Self {
        let gens = t.gen_names();
        let nb = t.nbase();
        let mut rels = Vec::new();
        for i in 0..nb {
            for k in i + 1..nb {
                rels.push(format!("{}*{} = {}*{}", gens[k], gens[i], gens[i], gens[k]));
            }
        }
        for j in 0..t.num_skew() {
            let spec = t.skew_spec(j);
            let x = &spec.name;
            for (k, g) in gens.iter().enumerate().take(nb + j) {
                let s = t.fmt(&spec.sigma[k]);
                let d = &spec.delta[k];
                let ds = match t.fmt(d) {
                    text if text.starts_with('-') => format!("({text})"),
                    text => text,
                };
                let rhs = match (s.as_str(), d.is_zero()) {
                    (_, true) if s == *g => format!("{g}*{x}"),
                    (_, true) => format!("({s})*{x}"),
                    _ if s == *g => format!("{g}*{x} + {ds}"),
                    _ => format!("({s})*{x} + {ds}"),
                };
                rels.push(format!("{x}*{g} = {rhs}"));
            }
        }
        let gen_refs: Vec<&str> = gens.iter().map(String::as_str).collect();
        let rel_refs: Vec<&str> = rels.iter().map(String::as_str).collect();
        Presentation::new(name, &gen_refs, &[], &rel_refs).expect("printed normal forms reparse")
    }
}
