//! Verification that the sigma/delta data of a tower defines legitimate
//! Ore extensions: sigma respects every lower relation, delta satisfies the
//! twisted Leibniz rule on them, and supplied inverses really are inverses.

use serde::Serialize;

use super::{Element, OreTower};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellFormedFailure {
    pub var: String,
    pub check: String,
    pub relation: String,
    pub residual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct WellFormedReport {
    pub checked: usize,
    pub failures: Vec<WellFormedFailure>,
}

impl WellFormedReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A lower defining relation written as `l1*l2 - r1*r2 - extra = 0`.
struct Relation {
    label: String,
    l: (Element, Element),
    r: (Element, Element),
    extra: Element,
}

impl OreTower {
    fn lower_relations(&self, j: usize) -> Vec<Relation> {
        let nb = self.nbase();
        let mut out = Vec::new();
        for i in 0..nb {
            for k in i + 1..nb {
                let (x, y) = (self.base_var(i), self.base_var(k));
                out.push(Relation {
                    label: format!(
                        "{}*{} - {}*{}",
                        self.gen_label(i),
                        self.gen_label(k),
                        self.gen_label(k),
                        self.gen_label(i)
                    ),
                    l: (x.clone(), y.clone()),
                    r: (y, x),
                    extra: Element::zero(),
                });
            }
        }
        for i in 0..j {
            let sv = &self.skew[i];
            let x = self.skew_var(i);
            for k in 0..nb + i {
                out.push(Relation {
                    label: format!(
                        "{}*{} - sigma({})*{} - delta({})",
                        sv.spec.name,
                        self.gen_label(k),
                        self.gen_label(k),
                        sv.spec.name,
                        self.gen_label(k)
                    ),
                    l: (x.clone(), self.gen_elem(k)),
                    r: (sv.spec.sigma[k].clone(), x.clone()),
                    extra: sv.spec.delta[k].clone(),
                });
            }
        }
        out
    }

    /// Runs every consistency check on every skew variable.
    pub fn check_well_formed(&self) -> WellFormedReport {
        let mut report = WellFormedReport::default();
        for j in 0..self.num_skew() {
            self.check_var(j, &mut report);
        }
        report
    }

    fn check_var(&self, j: usize, report: &mut WellFormedReport) {
        let nb = self.nbase();
        let name = self.skew[j].spec.name.clone();
        let lower = self.truncate(j);
        let spec = self.skew[j].spec.clone();
        let sig = |e: &Element| self.apply_sigma(j, e).expect("element below the cut");
        let del = |e: &Element| self.apply_delta(j, e).expect("element below the cut");
        let fail =
            |report: &mut WellFormedReport, check: &str, relation: &str, residual: &Element| {
                report.checked += 1;
                if !residual.is_zero() {
                    report.failures.push(WellFormedFailure {
                        var: name.clone(),
                        check: check.to_string(),
                        relation: relation.to_string(),
                        residual: lower.fmt(residual),
                    });
                }
            };

        for rel in self.lower_relations(j) {
            // sigma(l1) sigma(l2) - sigma(r1) sigma(r2) - sigma(extra)
            let (sl1, sl2, sr1, sr2) = (sig(&rel.l.0), sig(&rel.l.1), sig(&rel.r.0), sig(&rel.r.1));
            let hom = self
                .mul(&sl1, &sl2)
                .sub(&self.mul(&sr1, &sr2))
                .sub(&sig(&rel.extra));
            fail(report, "sigma respects relation", &rel.label, &hom);

            // delta(xy) = sigma(x) delta(y) + delta(x) y applied to both products
            let dl = self
                .mul(&sl1, &del(&rel.l.1))
                .add(&self.mul(&del(&rel.l.0), &rel.l.1));
            let dr = self
                .mul(&sr1, &del(&rel.r.1))
                .add(&self.mul(&del(&rel.r.0), &rel.r.1));
            let leib = dl.sub(&dr).sub(&del(&rel.extra));
            fail(report, "delta respects relation", &rel.label, &leib);
        }

        if let Some(inv) = &spec.sigma_inv {
            for k in 0..nb + j {
                let g = self.gen_elem(k);
                let label = self.gen_label(k);
                let there = lower.substitute(&spec.sigma[k], inv).map(|e| e.sub(&g));
                let back = self.apply_sigma(j, &inv[k]).map(|e| e.sub(&g));
                match there {
                    Ok(r) => fail(report, "sigma^-1 after sigma is the identity", &label, &r),
                    Err(e) => {
                        report.checked += 1;
                        report.failures.push(WellFormedFailure {
                            var: name.clone(),
                            check: "sigma^-1 after sigma is the identity".into(),
                            relation: label.clone(),
                            residual: e.to_string(),
                        });
                    }
                }
                if let Ok(r) = back {
                    fail(report, "sigma after sigma^-1 is the identity", &label, &r);
                }
            }
        }

        // sigma sends every denominator generator to a unit; enforced by `extend`
        report.checked += self.monoid.len();
    }
}
