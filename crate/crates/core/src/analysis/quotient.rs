use serde::Serialize;

use super::normal::normality_cert_search;
use super::*;
use crate::lang::{check_relations, eval, GeneratorMap, RelationsReport};
use crate::report::Verdict;

#[derive(Clone, Debug, Serialize)]
pub struct ModIdeal {
    pub what: String,
    /// Normal form of the difference that must lie in the ideal.
    pub residual: String,
    pub in_ideal: bool,
}

/// Verification that `t / (ideal)` is presented by the target of `forward`.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub ideal: Vec<String>,
    pub certificates: Vec<NormalityCertificate>,
    pub degree_bound: u32,
    /// `forward` respects the relations of `t`.
    pub forward_relations: RelationsReport,
    /// `forward` sends each ideal generator to 0.
    pub kills: Vec<(String, bool)>,
    /// `backward` respects the claimed relations modulo the ideal.
    pub backward_relations: Vec<ModIdeal>,
    /// `forward(backward(q)) = q` on the claimed generators.
    pub quotient_side: Vec<(String, bool)>,
    /// `backward(forward(g)) - g` lies in the ideal for the generators of `t`.
    pub tower_side: Vec<ModIdeal>,
}

impl Verdict for QuotientReport {
    fn passed(&self) -> bool {
        self.forward_relations.passed()
            && self.kills.iter().all(|k| k.1)
            && self.backward_relations.iter().all(|r| r.in_ideal)
            && self.quotient_side.iter().all(|k| k.1)
            && self.tower_side.iter().all(|r| r.in_ideal)
    }

    fn diagnostics(&self) -> Vec<String> {
        let mut out = self.forward_relations.diagnostics();
        for (x, ok) in &self.kills {
            if !ok {
                out.push(format!("forward map does not kill {x}"));
            }
        }
        for r in self.backward_relations.iter().chain(&self.tower_side) {
            if !r.in_ideal {
                out.push(format!(
                    "{}: residual {} is not in the ideal within degree {}",
                    r.what, r.residual, self.degree_bound
                ));
            }
        }
        for (g, ok) in &self.quotient_side {
            if !ok {
                out.push(format!("forward(backward({g})) != {g}"));
            }
        }
        if self.passed() {
            for c in &self.certificates {
                out.push(format!(
                    "normal: {} ({})",
                    c.element,
                    c.cofactor_text
                        .iter()
                        .map(|(g, y)| format!("{g} -> {y}"))
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
            }
        }
        out
    }
}

fn degree(e: &Element) -> u32 {
    e.terms()
        .map(|(m, f)| m.degree() + f.num().total_degree().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// Whether `r = sum x_i y_i` for some `y_i` of degree `<= bound`.
fn in_ideal(t: &OreTower, ideal: &[Element], r: &Element, bound: u32) -> Result<bool> {
    if r.is_zero() {
        return Ok(true);
    }
    let raw = ansatz(t, bound, bound, DEFAULT_ANSATZ_LIMIT)?;
    let keep = independent_subset(t, &raw);
    let mut cols: Vec<(usize, Element)> = Vec::new();
    for x in ideal {
        for &i in &keep {
            cols.push((0, t.mul(x, &raw[i])));
        }
    }
    let n = cols.len();
    cols.push((0, r.clone()));
    let m = column_matrix(&coordinates(t, &cols));
    let a: Matrix = m.iter().map(|row| row[..n].to_vec()).collect();
    let b: Vec<Rational> = m.iter().map(|row| row[n].clone()).collect();
    Ok(crate::linalg::solve(&a, &b, n).is_some())
}

/// Checks that `forward: t -> Q` and `backward: Q -> t` induce mutually inverse
/// isomorphisms between `t / (ideal)` and `Q`. Every ideal generator must be
/// normal (a certificate is searched at degree 2), so the ideal is `sum x_i t`.
pub fn quotient_check(
    t: &OreTower,
    ideal: &[Element],
    forward: &GeneratorMap,
    backward: &GeneratorMap,
    degree_bound: Option<u32>,
) -> Result<QuotientReport> {
    let mut certificates = Vec::new();
    for x in ideal {
        match normality_cert_search(t, x, 2)? {
            Some(c) => certificates.push(c),
            None => return Err(Error::MissingNormalityCertificate(t.fmt(x))),
        }
    }
    let forward_relations = check_relations(&forward.source, forward)?;
    let kills = ideal
        .iter()
        .map(|x| Ok((t.fmt(x), forward.apply(x)?.is_zero())))
        .collect::<Result<Vec<_>>>()?;

    let claimed = &backward.source;
    let mut env = backward.as_bindings();
    for (n, e) in &claimed.constants {
        let v = eval(e, t, &env)?;
        env.insert(n.clone(), v);
    }
    let residuals: Vec<(String, Element)> = claimed
        .relations
        .iter()
        .map(|r| Ok((r.text.clone(), eval(&r.expr, t, &env)?)))
        .collect::<Result<_>>()?;
    let bound = degree_bound
        .unwrap_or_else(|| 2 + residuals.iter().map(|(_, e)| degree(e)).max().unwrap_or(0));
    let mut backward_relations = Vec::new();
    for (text, r) in residuals {
        backward_relations.push(ModIdeal {
            what: text,
            residual: t.fmt(&r),
            in_ideal: in_ideal(t, ideal, &r, bound)?,
        });
    }

    let q = &forward.target;
    let mut quotient_side = Vec::new();
    for g in &claimed.generators {
        let img = backward.image(g).expect("complete map");
        let back = forward.apply(img)?;
        quotient_side.push((g.clone(), back == q.gen(g)?));
    }
    let mut tower_side = Vec::new();
    for (k, g) in t.gen_names().iter().enumerate() {
        let img = q.import(forward.image(g).expect("complete map"))?;
        let back = backward.apply(&img)?;
        let diff = back.sub(&t.gen_elem(k));
        tower_side.push(ModIdeal {
            what: format!("backward(forward({g})) - {g}"),
            residual: t.fmt(&diff),
            in_ideal: in_ideal(t, ideal, &diff, bound)?,
        });
    }
    Ok(QuotientReport {
        ideal: ideal.iter().map(|x| t.fmt(x)).collect(),
        certificates,
        degree_bound: bound,
        forward_relations,
        kills,
        backward_relations,
        quotient_side,
        tower_side,
    })
}
