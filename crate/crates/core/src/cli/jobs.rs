//! Resolved checks and their execution.

use crate::analysis;
use crate::exactnum::MPoly;
use crate::lang::{
    check_involution, check_ispe, check_mutually_inverse, check_relations, GeneratorMap,
    Presentation,
};
use crate::report::Verdict;
use crate::tower::sample::{soundness_sample, Shape};
use crate::tower::{Element, OreTower};
use crate::Result;

/// A check with every name resolved; independent of the declaration environment.
pub enum Job {
    Relations {
        pres: Presentation,
        map: GeneratorMap,
    },
    Central {
        t: OreTower,
        x: Element,
    },
    Involution {
        map: GeneratorMap,
    },
    InversePair {
        f: GeneratorMap,
        g: GeneratorMap,
    },
    InnerAuto {
        t: OreTower,
        var: String,
        x: Element,
    },
    InnerDer {
        t: OreTower,
        var: String,
        x: Element,
    },
    Normal {
        t: OreTower,
        x: Element,
        degree: u32,
    },
    LocalReduction {
        f: MPoly,
        factors: Vec<MPoly>,
        g: MPoly,
        expect: bool,
    },
    CenterSearch {
        t: OreTower,
        skew: u32,
        coeff: u32,
        limit: usize,
        expect: Option<Vec<Element>>,
    },
    Growth {
        t: OreTower,
        n: usize,
        weights: Option<Vec<u32>>,
        expect: Option<usize>,
    },
    Quotient {
        t: OreTower,
        ideal: Vec<Element>,
        fwd: GeneratorMap,
        bwd: GeneratorMap,
        degree: Option<u32>,
    },
    Ispe {
        t: OreTower,
        tau: GeneratorMap,
    },
    WellFormed {
        t: OreTower,
        samples: usize,
        pairs: usize,
        seed: u64,
    },
    InnerPowerScan {
        t: OreTower,
        var: String,
        n: u32,
        exp: u32,
        expect: Option<bool>,
    },
}

fn verdict(v: &impl Verdict) -> (bool, Vec<String>) {
    (v.passed(), v.diagnostics())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Job {
    /// Pass/fail and witness lines.
    pub fn run(&self) -> Result<(bool, Vec<String>)> {
        Ok(match self {
            Job::Relations { pres, map } => verdict(&check_relations(pres, map)?),
            Job::Central { t, x } => verdict(&analysis::centralizer_check(t, x)),
            Job::Involution { map } => verdict(&check_involution(map)?),
            Job::InversePair { f, g } => verdict(&check_mutually_inverse(f, g)?),
            Job::InnerAuto { t, var, x } => verdict(&analysis::inner_auto_check(t, var, x)?),
            Job::InnerDer { t, var, x } => verdict(&analysis::inner_der_check(t, var, x)?),
            Job::Normal { t, x, degree } => match analysis::normality_cert_search(t, x, *degree)? {
                Some(cert) => (cert.verify(t), cert.diagnostics()),
                None => (
                    false,
                    vec![format!(
                        "no normality certificate for {} with cofactor degree <= {degree}",
                        t.fmt(x)
                    )],
                ),
            },
            Job::LocalReduction {
                f,
                factors,
                g,
                expect,
            } => {
                let cert = analysis::local_reduction(f, factors, g)?;
                let found = cert.is_some();
                let mut lines = vec![format!(
                    "local reduction of ({f}, {g}): {} (expected {})",
                    yes_no(found),
                    yes_no(*expect)
                )];
                if let Some(c) = cert {
                    lines.push(format!("certificate: n = {}, m = {:?}", c.n, c.m));
                }
                (found == *expect, lines)
            }
            Job::CenterSearch {
                t,
                skew,
                coeff,
                limit,
                expect,
            } => {
                let cb = analysis::center_search(t, *skew, *coeff, *limit)?;
                let mut lines = vec![cb.statement(), format!("ansatz size {}", cb.ansatz_size)];
                let ok = match expect {
                    None => true,
                    Some(want) => {
                        let same = analysis::same_span(t, &cb.basis, want);
                        if !same {
                            let w: Vec<String> = want.iter().map(|x| t.fmt(x)).collect();
                            lines.push(format!("expected span{{{}}}", w.join(", ")));
                        }
                        same
                    }
                };
                (ok, lines)
            }
            Job::Growth {
                t,
                n,
                weights,
                expect,
            } => {
                let g = t.monomial_count(*n, weights.as_deref())?;
                let counts: Vec<String> = g.counts.iter().map(u128::to_string).collect();
                let mut lines = vec![
                    format!("counts [{}]", counts.join(", ")),
                    format!("fitted degree {}", g.degree),
                ];
                let ok = expect.is_none_or(|d| d == g.degree);
                if let Some(d) = expect.filter(|_| !ok) {
                    lines.push(format!("expected degree {d}"));
                }
                (ok, lines)
            }
            Job::Quotient {
                t,
                ideal,
                fwd,
                bwd,
                degree,
            } => verdict(&analysis::quotient_check(t, ideal, fwd, bwd, *degree)?),
            Job::Ispe { t, tau } => verdict(&check_ispe(t, tau)?),
            Job::WellFormed {
                t,
                samples,
                pairs,
                seed,
            } => {
                let wf = t.check_well_formed();
                let mut lines: Vec<String> = wf
                    .failures
                    .iter()
                    .map(|f| {
                        format!(
                            "{}: {} on {}; residual: {}",
                            f.var, f.check, f.relation, f.residual
                        )
                    })
                    .collect();
                lines.push(format!("{} structural identities checked", wf.checked));
                let mut ok = wf.passed();
                if ok && (*samples > 0 || *pairs > 0) {
                    let s = soundness_sample(t, *seed, *samples, *pairs, Shape::default());
                    ok = s.passed();
                    lines.extend(s.diagnostics());
                }
                (ok, lines)
            }
            Job::InnerPowerScan {
                t,
                var,
                n,
                exp,
                expect,
            } => {
                let r = analysis::inner_power_scan(t, var, *n, *exp)?;
                let found = r.witness.is_some();
                let mut lines = r.diagnostics();
                let ok = expect.is_none_or(|e| e == found);
                if !ok {
                    lines.push(format!(
                        "expected {}",
                        if found { "no witness" } else { "a witness" }
                    ));
                }
                (ok, lines)
            }
        })
    }
}
