use serde::Serialize;

use super::*;
use crate::report::Verdict;

/// `w * x = x * cofactor(w)` for every generator `w`.
#[derive(Clone, Debug, Serialize)]
pub struct NormalityCertificate {
    pub element: String,
    #[serde(skip)]
    pub x: Element,
    #[serde(skip)]
    pub cofactors: Vec<(String, Element)>,
    pub cofactor_text: Vec<(String, String)>,
}

impl NormalityCertificate {
    /// Re-verifies every identity by direct multiplication.
    pub fn verify(&self, t: &OreTower) -> bool {
        self.cofactors.iter().all(|(g, y)| {
            t.gen(g)
                .map(|w| t.mul(&w, &self.x) == t.mul(&self.x, y))
                .unwrap_or(false)
        })
    }
}

impl Verdict for NormalityCertificate {
    fn passed(&self) -> bool {
        true
    }

    fn diagnostics(&self) -> Vec<String> {
        self.cofactor_text
            .iter()
            .map(|(g, y)| format!("certificate: {g}*x = x*({y})"))
            .collect()
    }
}

/// Solves `w*x = x*y` for each generator `w`, with `y` ranging over PBW
/// elements of skew and coefficient degree `<= deg_bound`.
pub fn normality_cert_search(
    t: &OreTower,
    x: &Element,
    deg_bound: u32,
) -> Result<Option<NormalityCertificate>> {
    if x.is_zero() {
        return Err(Error::invalid(
            "the zero element is not a candidate for normality",
        ));
    }
    let raw = ansatz(t, deg_bound, deg_bound, DEFAULT_ANSATZ_LIMIT)?;
    let keep = independent_subset(t, &raw);
    let basis: Vec<Element> = keep.iter().map(|&i| raw[i].clone()).collect();
    let products: Vec<Element> = basis.iter().map(|y| t.mul(x, y)).collect();
    let mut cofactors = Vec::new();
    for (k, name) in t.gen_names().iter().enumerate() {
        let target = t.mul(&t.gen_elem(k), x);
        let mut all: Vec<(usize, Element)> = products.iter().map(|p| (0, p.clone())).collect();
        all.push((0, target.clone()));
        let mut coords = coordinates(t, &all);
        let rhs = coords.pop().unwrap();
        let mut cols = coords;
        cols.push(rhs);
        let m = column_matrix(&cols);
        let b: Vec<Rational> = m.iter().map(|row| row[basis.len()].clone()).collect();
        let a: Matrix = m.iter().map(|row| row[..basis.len()].to_vec()).collect();
        let sol = if a.is_empty() {
            Some(vec![Rational::default(); basis.len()])
        } else {
            crate::linalg::solve(&a, &b, basis.len())
        };
        let Some(sol) = sol else { return Ok(None) };
        let y = combine(&basis, &sol);
        if t.mul(x, &y) != target {
            return Ok(None);
        }
        cofactors.push((name.clone(), y));
    }
    let cofactor_text = cofactors
        .iter()
        .map(|(g, y)| (g.clone(), t.fmt(y)))
        .collect();
    Ok(Some(NormalityCertificate {
        element: t.fmt(x),
        x: x.clone(),
        cofactors,
        cofactor_text,
    }))
}
