//! Structural analysis by exact linear algebra over bounded ansatz spaces:
//! centers, normal elements, innerness, local reduction and quotients.

mod automorphism;
mod center;
mod inner;
mod local;
mod normal;
mod quotient;

use std::collections::BTreeMap;

pub use automorphism::{automorphism_instance, AutomorphismReport};
pub use center::{center_search, centralizer_check, CenterBasis, CentralReport};
pub use inner::{
    inner_auto_check, inner_der_check, inner_power_scan, InnerPowerReport, InnerReport,
    PowerWitness,
};
pub use local::{local_reduction, LocalReductionCertificate};
pub use normal::{normality_cert_search, NormalityCertificate};
pub use quotient::{quotient_check, QuotientReport};

use crate::error::{Error, Result};
use crate::exactnum::{Frac, MPoly, Monomial, Rational};
use crate::linalg::Matrix;
use crate::tower::{Element, OreTower, SkewMono};

/// Largest ansatz (number of unknowns) accepted before refusing to solve.
pub const DEFAULT_ANSATZ_LIMIT: usize = 20_000;

/// All exponent vectors of length `n` with entry sum `<= d`, in graded order.
fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    if n == 0 {
        return out;
    }
    for total in 1..=d {
        let mut cur = vec![0u32; n];
        fill(&mut cur, 0, total, &mut out);
    }
    out
}

fn fill(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Vec<u32>>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(cur.clone());
        return;
    }
    for k in (0..=left).rev() {
        cur[i] = k;
        fill(cur, i + 1, left - k, out);
    }
    cur[i] = 0;
}

/// Single-term PBW elements `m / den * X^e` with skew degree `<= skew`,
/// numerator degree `<= coeff` and, in a localized tower, denominator
/// exponent sum `<= coeff`. Duplicates (after cancellation) are removed;
/// the result is sorted by (skew monomial, coefficient) ascending.
fn ansatz(t: &OreTower, skew: u32, coeff: u32, limit: usize) -> Result<Vec<Element>> {
    let monoid = t.monoid();
    let nums = exponent_vectors(t.nbase(), coeff);
    let dens = if t.is_localized() {
        exponent_vectors(monoid.len(), coeff)
    } else {
        vec![vec![0; monoid.len()]]
    };
    let skews = exponent_vectors(t.num_skew(), skew);
    let size = nums.len() * dens.len() * skews.len();
    if size > limit {
        return Err(Error::ResourceGuard { size, limit });
    }
    let mut seen = BTreeMap::new();
    for s in &skews {
        for n in &nums {
            for d in &dens {
                let num =
                    MPoly::monomial(t.base_vars(), Monomial(n.clone()), crate::exactnum::rat(1));
                let f =
                    Frac::from_poly(num, monoid).mul(&Frac::gen_inverse_power(d.clone(), monoid));
                let key = (
                    SkewMono::new(s.clone()),
                    f.num().leading_term().unwrap().0.clone(),
                    f.den_exps().to_vec(),
                );
                seen.entry(key)
                    .or_insert_with(|| Element::term(SkewMono::new(s.clone()), f));
            }
        }
    }
    Ok(seen.into_values().collect())
}

type Key = (usize, SkewMono, Monomial);

/// Coordinates of several elements after multiplying every coefficient by
/// one common denominator, so that equal elements get equal coordinates and
/// the map is linear. `tag` separates independent groups of equations.
fn coordinates(t: &OreTower, elems: &[(usize, Element)]) -> Vec<BTreeMap<Key, Rational>> {
    let mut common = vec![0u32; t.monoid().len()];
    for (_, e) in elems {
        for (_, f) in e.terms() {
            for (c, &k) in common.iter_mut().zip(f.den_exps()) {
                *c = (*c).max(k);
            }
        }
    }
    elems
        .iter()
        .map(|(tag, e)| {
            let mut out = BTreeMap::new();
            for (m, f) in e.terms() {
                let lift: Vec<u32> = common
                    .iter()
                    .zip(f.den_exps())
                    .map(|(c, k)| c - k)
                    .collect();
                let num = f.num() * &t.monoid().product(&lift);
                for (bm, q) in num.terms() {
                    out.insert((*tag, m.clone(), bm.clone()), q.clone());
                }
            }
            out
        })
        .collect()
}

/// Matrix whose columns are the coordinate vectors (rows indexed by all keys that occur).
fn column_matrix(cols: &[BTreeMap<Key, Rational>]) -> Matrix {
    let mut rows: BTreeMap<&Key, usize> = BTreeMap::new();
    for c in cols {
        for k in c.keys() {
            let n = rows.len();
            rows.entry(k).or_insert(n);
        }
    }
    let mut m = vec![vec![Rational::default(); cols.len()]; rows.len()];
    for (j, c) in cols.iter().enumerate() {
        for (k, q) in c {
            m[rows[k]][j] = q.clone();
        }
    }
    m
}

/// Indices of a maximal linearly independent subset, chosen greedily in order.
fn independent_subset(t: &OreTower, elems: &[Element]) -> Vec<usize> {
    let tagged: Vec<(usize, Element)> = elems.iter().map(|e| (0, e.clone())).collect();
    let mut m = column_matrix(&coordinates(t, &tagged));
    if m.is_empty() {
        return Vec::new();
    }
    crate::linalg::rref(&mut m)
}

/// Whether two families span the same subspace over the rationals.
pub fn same_span(t: &OreTower, x: &[Element], y: &[Element]) -> bool {
    let rank = |v: &[Element]| independent_subset(t, v).len();
    let both: Vec<Element> = x.iter().chain(y).cloned().collect();
    let r = rank(x);
    r == rank(y) && r == rank(&both)
}

fn combine(basis: &[Element], coeffs: &[Rational]) -> Element {
    let mut out = Element::zero();
    for (e, q) in basis.iter().zip(coeffs) {
        if !num::Zero::is_zero(q) {
            out.add_assign(e.scale(q));
        }
    }
    out
}

/// Index of the skew variable called `var`.
fn skew_index(t: &OreTower, var: &str) -> Result<usize> {
    t.skew_names()
        .iter()
        .position(|n| *n == var)
        .ok_or_else(|| Error::UnboundName(format!("{var} is not a skew variable")))
}

#[cfg(test)]
mod tests;
