//! Homomorphism, involution, inverse-pair and ISPE verification.

use serde::Serialize;

use super::map::GeneratorMap;
use super::presentation::Presentation;
use super::{eval, Bindings};
use crate::error::{Error, Result};
use crate::report::Verdict;
use crate::tower::OreTower;

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    /// Normal form of the image; `None` when it vanishes.
    pub residual: Option<String>,
    pub error: Option<String>,
}

impl RelationCheck {
    pub fn ok(&self) -> bool {
        self.residual.is_none() && self.error.is_none()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationsReport {
    pub map: String,
    pub results: Vec<RelationCheck>,
    pub notes: Vec<String>,
}

impl Verdict for RelationsReport {
    fn passed(&self) -> bool {
        self.results.iter().all(RelationCheck::ok)
    }

    fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in self.results.iter().filter(|r| !r.ok()) {
            out.push(format!("relation: {}", r.relation));
            if let Some(res) = &r.residual {
                out.push(format!("residual: {res}"));
            }
            if let Some(e) = &r.error {
                out.push(format!("error: {e}"));
            }
        }
        out.extend(self.notes.iter().cloned());
        out
    }
}

/// Evaluates the constants of `p` under the images of its generators.
fn bind_constants(p: &Presentation, map: &GeneratorMap) -> Result<Bindings> {
    let mut env = map.as_bindings();
    for (n, e) in &p.constants {
        let v = eval(e, &map.target, &env)?;
        env.insert(n.clone(), v);
    }
    Ok(env)
}

/// Checks every relation of `p` under `map` by reducing its image to normal form.
pub fn check_relations(p: &Presentation, map: &GeneratorMap) -> Result<RelationsReport> {
    for g in &p.generators {
        if map.image(g).is_none() {
            return Err(Error::invalid(format!(
                "map {} gives no image for generator {g} of {}",
                map.name, p.name
            )));
        }
    }
    let mut notes = Vec::new();
    if map.target.is_localized() && map.source_tower.as_ref().is_none_or(|s| !s.is_localized()) {
        notes.push(
            "note: target is localized; birational equivalence verified on generators".into(),
        );
    }
    let env = match bind_constants(p, map) {
        Ok(env) => env,
        Err(e) => {
            let results = vec![RelationCheck {
                relation: "constants".into(),
                residual: None,
                error: Some(e.to_string()),
            }];
            return Ok(RelationsReport {
                map: map.name.clone(),
                results,
                notes,
            });
        }
    };
    let results = p
        .relations
        .iter()
        .map(|r| match eval(&r.expr, &map.target, &env) {
            Ok(v) if v.is_zero() => RelationCheck {
                relation: r.text.clone(),
                residual: None,
                error: None,
            },
            Ok(v) => RelationCheck {
                relation: r.text.clone(),
                residual: Some(map.target.fmt(&v)),
                error: None,
            },
            Err(e) => RelationCheck {
                relation: r.text.clone(),
                residual: None,
                error: Some(e.to_string()),
            },
        })
        .collect();
    Ok(RelationsReport {
        map: map.name.clone(),
        results,
        notes,
    })
}

/// Per-generator identity check `composite(g) = g`.
#[derive(Clone, Debug, Serialize)]
pub struct GenIdentity {
    pub generator: String,
    pub image: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionReport {
    pub relations: RelationsReport,
    pub squares: Vec<GenIdentity>,
}

impl Verdict for InvolutionReport {
    fn passed(&self) -> bool {
        self.relations.passed() && self.squares.iter().all(|s| s.ok)
    }

    fn diagnostics(&self) -> Vec<String> {
        let mut out = self.relations.diagnostics();
        for s in self.squares.iter().filter(|s| !s.ok) {
            out.push(format!(
                "map applied twice sends {} to {}",
                s.generator, s.image
            ));
        }
        out
    }
}

fn composite_identities(outer: &GeneratorMap, inner: &GeneratorMap) -> Result<Vec<GenIdentity>> {
    let mut out = Vec::new();
    for g in &inner.source.generators {
        let mid = inner.image(g).expect("complete map");
        let src = outer
            .source_tower
            .as_ref()
            .ok_or_else(|| Error::invalid(format!("map {} has no source tower", outer.name)))?;
        let mid = src.import(mid)?;
        let back = outer.apply(&mid)?;
        let expected = outer.target.gen(g)?;
        let ok = back == expected;
        out.push(GenIdentity {
            generator: g.clone(),
            image: outer.target.fmt(&back),
            ok,
        });
    }
    Ok(out)
}

/// Homomorphism check plus `m(m(g)) = g` on every generator.
pub fn check_involution(map: &GeneratorMap) -> Result<InvolutionReport> {
    if !map.is_endomorphism() {
        return Err(Error::invalid(format!(
            "map {} does not send an algebra to itself",
            map.name
        )));
    }
    let relations = check_relations(&map.source, map)?;
    let squares = composite_identities(map, map)?;
    Ok(InvolutionReport { relations, squares })
}

#[derive(Clone, Debug, Serialize)]
pub struct InverseReport {
    pub forward: String,
    pub backward: String,
    /// `backward(forward(g)) = g` on the generators of the source of `forward`.
    pub source_side: Vec<GenIdentity>,
    /// `forward(backward(g)) = g` on the generators of the source of `backward`.
    pub target_side: Vec<GenIdentity>,
    pub notes: Vec<String>,
}

impl Verdict for InverseReport {
    fn passed(&self) -> bool {
        self.source_side
            .iter()
            .chain(&self.target_side)
            .all(|s| s.ok)
    }

    fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        for s in self.source_side.iter().filter(|s| !s.ok) {
            out.push(format!(
                "{}({}({})) = {}",
                self.backward, self.forward, s.generator, s.image
            ));
        }
        for s in self.target_side.iter().filter(|s| !s.ok) {
            out.push(format!(
                "{}({}({})) = {}",
                self.forward, self.backward, s.generator, s.image
            ));
        }
        out.extend(self.notes.iter().cloned());
        out
    }
}

/// Verifies `g . f = id` and `f . g = id` on generators.
pub fn check_mutually_inverse(f: &GeneratorMap, g: &GeneratorMap) -> Result<InverseReport> {
    let source_side = composite_identities(g, f)?;
    let target_side = composite_identities(f, g)?;
    let mut notes = Vec::new();
    if f.target.is_localized() || g.target.is_localized() {
        notes.push(
            "note: maps pass through localizations; birational equivalence verified on generators"
                .into(),
        );
    }
    Ok(InverseReport {
        forward: f.name.clone(),
        backward: g.name.clone(),
        source_side,
        target_side,
        notes,
    })
}

/// Outcome of the involutive-extension checks on a two-step tower.
#[derive(Clone, Debug, Serialize)]
pub struct IspeReport {
    pub involution: InvolutionReport,
    /// `tau` fixes the base and swaps the two skew variables.
    pub swaps: bool,
    /// `delta_2(a) = a^2 - sigma_2(a) a`, i.e. `u = d - a` is normal.
    pub u_normal: bool,
    pub u_normal_residual: String,
    /// Hypotheses for birational equivalence with `A_1(R)`, checked in the
    /// localization inverting the base generators.
    pub sigma1_identity: bool,
    pub log_derivatives_agree: bool,
    pub a_commutes_with_scaled_u: bool,
}

impl IspeReport {
    pub fn birational_hypotheses(&self) -> bool {
        self.sigma1_identity
            && self.u_normal
            && self.log_derivatives_agree
            && self.a_commutes_with_scaled_u
    }
}

impl Verdict for IspeReport {
    fn passed(&self) -> bool {
        self.involution.passed() && self.swaps
    }

    fn diagnostics(&self) -> Vec<String> {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = self.involution.diagnostics();
        if !self.swaps {
            out.push("tau does not fix the base and swap the skew variables".into());
        }
        out.push(format!("u-normal: {}", yn(self.u_normal)));
        if !self.u_normal {
            out.push(format!(
                "delta_2(a) - a^2 + sigma_2(a)*a = {}",
                self.u_normal_residual
            ));
        }
        out.push(format!(
            "birational hypotheses: {}",
            yn(self.birational_hypotheses())
        ));
        out
    }
}

pub fn check_ispe(t: &OreTower, tau: &GeneratorMap) -> Result<IspeReport> {
    if t.num_skew() != 2 {
        return Err(Error::MalformedTower(format!(
            "an ISPE has exactly two skew variables, found {}",
            t.num_skew()
        )));
    }
    let names = t.skew_names();
    let (an, dn) = (names[0].to_string(), names[1].to_string());
    let involution = check_involution(tau)?;
    let img = |g: &str| tau.image(g).cloned().unwrap_or_default();
    let swaps = t.base_vars().iter().all(|v| img(v) == t.gen(v).unwrap())
        && img(&an) == t.skew_var(1)
        && img(&dn) == t.skew_var(0);

    let a = t.skew_var(0);
    let d2a = &t.skew_spec(1).delta[t.nbase()];
    let s2a = &t.skew_spec(1).sigma[t.nbase()];
    let resid = d2a.sub(&t.mul(&a, &a)).add(&t.mul(s2a, &a));

    let nb = t.nbase();
    let sigma1_identity = (0..nb).all(|i| t.skew_spec(0).sigma[i] == t.base_var(i));
    let lt = t.localized(
        &(0..nb)
            .map(|i| crate::exactnum::MPoly::var(t.base_vars(), i))
            .collect::<Vec<_>>(),
    )?;
    let la = lt.skew_var(0);
    let lu = lt.skew_var(1).sub(&la);
    let mut logs = Vec::new();
    let mut commutes = true;
    for i in 0..nb {
        let rinv = lt.gen_inverse(
            lt.monoid()
                .position(&crate::exactnum::MPoly::var(t.base_vars(), i))
                .unwrap(),
        );
        let d1 = lt.import(&t.skew_spec(0).delta[i])?;
        logs.push(lt.mul(&rinv, &d1));
        let ru = lt.mul(&rinv, &lu);
        commutes &= lt.commutator(&la, &ru).is_zero();
    }
    let log_derivatives_agree = logs.windows(2).all(|w| w[0] == w[1]);
    Ok(IspeReport {
        involution,
        swaps,
        u_normal: resid.is_zero(),
        u_normal_residual: t.fmt(&resid),
        sigma1_identity,
        log_derivatives_agree,
        a_commutes_with_scaled_u: commutes,
    })
}
