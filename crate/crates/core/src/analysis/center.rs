use serde::Serialize;

use super::*;
use crate::report::Verdict;

/// Commutators of an element with every generator.
#[derive(Clone, Debug, Serialize)]
pub struct CentralReport {
    pub element: String,
    /// `(generator, commutator)` for every generator that does not commute.
    pub failures: Vec<(String, String)>,
}

impl Verdict for CentralReport {
    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn diagnostics(&self) -> Vec<String> {
        self.failures
            .iter()
            .map(|(g, r)| format!("residual: [{}, {g}] = {r}", self.element))
            .collect()
    }
}

pub fn centralizer_check(t: &OreTower, x: &Element) -> CentralReport {
    let mut failures = Vec::new();
    for (k, g) in t.gen_names().iter().enumerate() {
        let r = t.commutator(x, &t.gen_elem(k));
        if !r.is_zero() {
            failures.push((g.clone(), t.fmt(&r)));
        }
    }
    CentralReport {
        element: t.fmt(x),
        failures,
    }
}

/// Central elements within an ansatz: a basis of `center ∩ span(ansatz)`.
#[derive(Clone, Debug, Serialize)]
pub struct CenterBasis {
    pub skew_bound: u32,
    pub coeff_bound: u32,
    pub ansatz_size: usize,
    #[serde(skip)]
    pub basis: Vec<Element>,
    pub basis_text: Vec<String>,
}

impl CenterBasis {
    pub fn statement(&self) -> String {
        format!(
            "center within (skew degree <= {}, coefficient degree <= {}) = span{{{}}}",
            self.skew_bound,
            self.coeff_bound,
            self.basis_text.join(", ")
        )
    }
}

/// Solves `[x, g] = 0` for every generator `g` over the ansatz of PBW
/// monomials with skew degree `<= skew_bound` and coefficient degree
/// `<= coeff_bound`. The basis is returned in reduced row-echelon form with
/// columns ordered from the largest monomial down, so it is canonical.
pub fn center_search(
    t: &OreTower,
    skew_bound: u32,
    coeff_bound: u32,
    limit: usize,
) -> Result<CenterBasis> {
    let raw = ansatz(t, skew_bound, coeff_bound, limit)?;
    let keep = independent_subset(t, &raw);
    let mut cols: Vec<Element> = keep.iter().map(|&i| raw[i].clone()).collect();
    cols.reverse();
    let ngen = t.nbase() + t.num_skew();
    let mut tagged = Vec::new();
    for (k, w) in cols.iter().enumerate() {
        for gi in 0..ngen {
            tagged.push((k, gi, t.commutator(w, &t.gen_elem(gi))));
        }
    }
    let coords = coordinates(
        t,
        &tagged
            .iter()
            .map(|(_, g, e)| (*g, e.clone()))
            .collect::<Vec<_>>(),
    );
    // sum the per-generator coordinates back into one column per unknown
    let mut per_col: Vec<BTreeMap<Key, Rational>> = vec![BTreeMap::new(); cols.len()];
    for ((k, _, _), c) in tagged.iter().zip(coords) {
        per_col[*k].extend(c);
    }
    let m = column_matrix(&per_col);
    let mut null = if m.is_empty() {
        (0..cols.len())
            .map(|i| {
                let mut v = vec![Rational::default(); cols.len()];
                v[i] = crate::exactnum::rat(1);
                v
            })
            .collect()
    } else {
        crate::linalg::nullspace(&m, cols.len())
    };
    if !null.is_empty() {
        crate::linalg::rref(&mut null);
    }
    let basis: Vec<Element> = null.iter().map(|v| combine(&cols, v)).collect();
    let basis_text = basis.iter().map(|b| t.fmt(b)).collect();
    Ok(CenterBasis {
        skew_bound,
        coeff_bound,
        ansatz_size: cols.len(),
        basis,
        basis_text,
    })
}
