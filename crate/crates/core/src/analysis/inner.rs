use serde::Serialize;

use super::*;
use crate::report::Verdict;

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub generator: String,
    pub expected: String,
    pub got: String,
}

/// Whether a witness reproduces the sigma (or delta) of one skew variable.
#[derive(Clone, Debug, Serialize)]
pub struct InnerReport {
    pub kind: &'static str,
    pub var: String,
    pub witness: String,
    pub mismatches: Vec<Mismatch>,
}

impl Verdict for InnerReport {
    fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn diagnostics(&self) -> Vec<String> {
        let map = if self.kind == "automorphism" {
            "sigma"
        } else {
            "delta"
        };
        let mut out = Vec::new();
        if self.passed() {
            out.push(format!(
                "certificate: {} of {} is inner via {}",
                map, self.var, self.witness
            ));
        }
        for m in &self.mismatches {
            out.push(format!(
                "{map}({}) = {} but the witness gives {}",
                m.generator, m.expected, m.got
            ));
        }
        out
    }
}

fn check_inner(
    t: &OreTower,
    var: &str,
    witness: &Element,
    kind: &'static str,
    f: impl Fn(&Element, &Element, usize) -> Result<(Element, Element)>,
) -> Result<InnerReport> {
    let j = skew_index(t, var)?;
    let w = t.import(witness)?;
    let names = t.gen_names();
    let mut mismatches = Vec::new();
    for (k, name) in names.iter().enumerate().take(t.nbase() + j) {
        let r = t.gen_elem(k);
        let (expected, got) = f(&w, &r, k)?;
        if expected != got {
            mismatches.push(Mismatch {
                generator: name.clone(),
                expected: t.fmt(&expected),
                got: t.fmt(&got),
            });
        }
    }
    Ok(InnerReport {
        kind,
        var: var.to_string(),
        witness: t.fmt(&w),
        mismatches,
    })
}

/// `phi^-1 r phi = sigma(r)` on every generator below `var`.
pub fn inner_auto_check(t: &OreTower, var: &str, phi: &Element) -> Result<InnerReport> {
    let j = skew_index(t, var)?;
    let inv = t.inverse(&t.import(phi)?)?;
    check_inner(t, var, phi, "automorphism", |w, r, k| {
        Ok((t.import(&t.skew_spec(j).sigma[k])?, t.mul_all([&inv, r, w])))
    })
}

/// `theta r - sigma(r) theta = delta(r)` on every generator below `var`.
pub fn inner_der_check(t: &OreTower, var: &str, theta: &Element) -> Result<InnerReport> {
    let j = skew_index(t, var)?;
    check_inner(t, var, theta, "derivation", |w, r, k| {
        let s = t.import(&t.skew_spec(j).sigma[k])?;
        Ok((
            t.import(&t.skew_spec(j).delta[k])?,
            t.mul(w, r).sub(&t.mul(&s, w)),
        ))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerWitness {
    pub n: u32,
    pub exponents: Vec<i64>,
    pub eta: String,
}

/// Search for `eta = prod p_i^{m_i}` with `eta^-1 r eta = sigma^n(r)`.
#[derive(Clone, Debug, Serialize)]
pub struct InnerPowerReport {
    pub var: String,
    pub max_n: u32,
    pub max_exp: u32,
    pub tried: usize,
    pub witness: Option<PowerWitness>,
}

impl Verdict for InnerPowerReport {
    /// Passing means the scan completed; whether a witness exists is the finding.
    fn passed(&self) -> bool {
        true
    }

    fn diagnostics(&self) -> Vec<String> {
        match &self.witness {
            Some(w) => vec![format!(
                "sigma^{} of {} is conjugation by eta = {} (exponents {:?})",
                w.n, self.var, w.eta, w.exponents
            )],
            None => vec![format!(
                "no power sigma^n (n <= {}) of {} is conjugation by a monoid element with |m_i| <= {} ({} candidates)",
                self.max_n, self.var, self.max_exp, self.tried
            )],
        }
    }
}

/// Exponent vectors in `[-b, b]^k`, ordered by `sum |m_i|`, then lexicographically.
fn exponent_candidates(k: usize, b: i64) -> Vec<Vec<i64>> {
    let mut all = vec![Vec::new()];
    for _ in 0..k {
        all = all
            .into_iter()
            .flat_map(|v| {
                (-b..=b).map(move |m| {
                    let mut w = v.clone();
                    w.push(m);
                    w
                })
            })
            .collect();
    }
    all.sort_by_key(|v| (v.iter().map(|m| m.abs()).sum::<i64>(), v.clone()));
    all
}

/// Scans `n = 1..=max_n` and monoid monomials with `|m_i| <= max_exp`.
pub fn inner_power_scan(
    t: &OreTower,
    var: &str,
    max_n: u32,
    max_exp: u32,
) -> Result<InnerPowerReport> {
    let j = skew_index(t, var)?;
    let lower: Vec<Element> = (0..t.nbase() + j).map(|k| t.gen_elem(k)).collect();
    let gens: Vec<Element> = (0..t.monoid().len())
        .map(|i| t.poly(t.monoid().gens()[i].clone()))
        .collect();
    let invs: Vec<Element> = (0..t.monoid().len()).map(|i| t.gen_inverse(i)).collect();
    let cands = exponent_candidates(t.monoid().len(), max_exp as i64);
    let mut tried = 0;
    let mut powers = lower.clone();
    for n in 1..=max_n {
        powers = powers
            .iter()
            .map(|x| t.apply_sigma(j, x))
            .collect::<Result<_>>()?;
        for m in &cands {
            tried += 1;
            let mut eta = t.one();
            let mut eta_inv = t.one();
            for (i, &e) in m.iter().enumerate() {
                let (p, q) = if e >= 0 {
                    (&gens[i], &invs[i])
                } else {
                    (&invs[i], &gens[i])
                };
                eta = t.mul(&eta, &t.pow(p, e.unsigned_abs() as u32));
                eta_inv = t.mul(&eta_inv, &t.pow(q, e.unsigned_abs() as u32));
            }
            if lower
                .iter()
                .zip(&powers)
                .all(|(r, s)| t.mul_all([&eta_inv, r, &eta]) == *s)
            {
                let witness = PowerWitness {
                    n,
                    exponents: m.clone(),
                    eta: t.fmt(&eta),
                };
                return Ok(InnerPowerReport {
                    var: var.into(),
                    max_n,
                    max_exp,
                    tried,
                    witness: Some(witness),
                });
            }
        }
    }
    Ok(InnerPowerReport {
        var: var.into(),
        max_n,
        max_exp,
        tried,
        witness: None,
    })
}
