//! Seeded random elements and sampled ring-axiom checks.

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Element, OreTower, SkewMono};
use crate::exactnum::{MPoly, Monomial, Rational};
use crate::report::Verdict;

/// Size limits for random elements.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub terms: usize,
    pub skew_degree: u32,
    pub coeff_degree: u32,
}

impl Default for Shape {
    fn default() -> Self {
        Shape {
            terms: 3,
            skew_degree: 2,
            coeff_degree: 2,
        }
    }
}

fn random_exps<R: Rng>(rng: &mut R, n: usize, total: u32) -> Vec<u32> {
    let mut e = vec![0u32; n];
    if n == 0 {
        return e;
    }
    let d = rng.gen_range(0..=total);
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    e
}

/// A random element supported on the first `nskew` skew variables.
/// Coefficients are polynomials with small integer coefficients.
pub fn random_element<R: Rng>(t: &OreTower, nskew: usize, shape: Shape, rng: &mut R) -> Element {
    let nb = t.nbase();
    let mut out = Element::zero();
    for _ in 0..shape.terms.max(1) {
        let c = Rational::from_integer(rng.gen_range(-3i64..=3).into());
        if c.is_zero() {
            continue;
        }
        let p = MPoly::monomial(
            t.base_vars(),
            Monomial(random_exps(rng, nb, shape.coeff_degree)),
            c,
        );
        let mut sk = random_exps(rng, nskew, shape.skew_degree);
        sk.resize(t.num_skew(), 0);
        out.add_assign(t.mul(&t.poly(p), &t.monomial(SkewMono::new(sk))));
    }
    out
}

/// Counts of sampled identities that failed, with the first counterexample of each kind.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SoundnessReport {
    pub seed: u64,
    pub triples: usize,
    pub pairs: usize,
    pub failures: Vec<String>,
}

impl Verdict for SoundnessReport {
    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn diagnostics(&self) -> Vec<String> {
        let mut out = vec![format!(
            "seed {}: {} associativity triples, {} sigma/delta pairs per skew variable",
            self.seed, self.triples, self.pairs
        )];
        out.extend(self.failures.iter().cloned());
        out
    }
}

/// `(xy)z = x(yz)` on `triples` random triples; for every skew variable `x_j`,
/// multiplicativity of `sigma_j`, the twisted Leibniz rule for `delta_j` and
/// `x_j r = sigma_j(r) x_j + delta_j(r)` on `pairs` random pairs from the subring below `x_j`.
pub fn soundness_sample(
    t: &OreTower,
    seed: u64,
    triples: usize,
    pairs: usize,
    shape: Shape,
) -> SoundnessReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = SoundnessReport {
        seed,
        triples,
        pairs,
        failures: Vec::new(),
    };
    let fail = |rep: &mut SoundnessReport, what: String| {
        if rep.failures.len() < 8 {
            rep.failures.push(what);
        }
    };
    let ns = t.num_skew();
    for _ in 0..triples {
        let x = random_element(t, ns, shape, &mut rng);
        let y = random_element(t, ns, shape, &mut rng);
        let z = random_element(t, ns, shape, &mut rng);
        let l = t.mul(&t.mul(&x, &y), &z);
        let r = t.mul(&x, &t.mul(&y, &z));
        if l != r {
            fail(
                &mut rep,
                format!(
                    "residual: (xy)z - x(yz) = {} for x = {}, y = {}, z = {}",
                    t.fmt(&l.sub(&r)),
                    t.fmt(&x),
                    t.fmt(&y),
                    t.fmt(&z)
                ),
            );
        }
    }
    for j in 0..ns {
        let xj = t.skew_var(j);
        let name = t.skew_names()[j].to_string();
        for _ in 0..pairs {
            let r = random_element(t, j, shape, &mut rng);
            let s = random_element(t, j, shape, &mut rng);
            let rs = t.mul(&r, &s);
            let (Ok(sr), Ok(ss), Ok(srs), Ok(dr), Ok(ds), Ok(drs)) = (
                t.apply_sigma(j, &r),
                t.apply_sigma(j, &s),
                t.apply_sigma(j, &rs),
                t.apply_delta(j, &r),
                t.apply_delta(j, &s),
                t.apply_delta(j, &rs),
            ) else {
                fail(
                    &mut rep,
                    format!("sigma/delta of {name} not applicable to r = {}", t.fmt(&r)),
                );
                continue;
            };
            let mult = srs.sub(&t.mul(&sr, &ss));
            if !mult.is_zero() {
                fail(
                    &mut rep,
                    format!(
                        "residual: sigma_{name}(rs) - sigma(r)sigma(s) = {} for r = {}, s = {}",
                        t.fmt(&mult),
                        t.fmt(&r),
                        t.fmt(&s)
                    ),
                );
            }
            let leib = drs.sub(&t.mul(&sr, &ds)).sub(&t.mul(&dr, &s));
            if !leib.is_zero() {
                fail(&mut rep, format!("residual: delta_{name}(rs) - sigma(r)delta(s) - delta(r)s = {} for r = {}, s = {}", t.fmt(&leib), t.fmt(&r), t.fmt(&s)));
            }
            let comm = t.mul(&xj, &r).sub(&t.mul(&sr, &xj)).sub(&dr);
            if !comm.is_zero() {
                fail(
                    &mut rep,
                    format!(
                        "residual: {name}*r - sigma(r)*{name} - delta(r) = {} for r = {}",
                        t.fmt(&comm),
                        t.fmt(&r)
                    ),
                );
            }
        }
    }
    rep
}
