//! Declarations of a task file and resolution of names.

use std::collections::BTreeMap;

use super::jobs::Job;
use super::task::{image_list, split_keyword, split_top, CheckStmt, StmtKind};
use super::Options;
use crate::exactnum::{rational_factors, MPoly};
use crate::lang::{eval_str, extend_with, parse, Bindings, GeneratorMap, Presentation};
use crate::tower::{relabel_poly, Element, OreTower};
use crate::zoo::{from_spec_str, AlgebraBundle, Form};

type Res<T> = std::result::Result<T, String>;

fn pairs(v: &[(String, String)]) -> Vec<(&str, &str)> {
    v.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

#[derive(Default)]
pub struct Env {
    base_vars: Vec<String>,
    params: Vec<(String, bool)>,
    monoid: Vec<String>,
    polys: BTreeMap<String, MPoly>,
    towers: BTreeMap<String, Form>,
    bundles: BTreeMap<String, AlgebraBundle>,
    elems: BTreeMap<String, (Element, OreTower)>,
    maps: BTreeMap<String, GeneratorMap>,
}

impl Env {
    fn declared(&self, name: &str) -> bool {
        self.polys.contains_key(name)
            || self.towers.contains_key(name)
            || self.bundles.contains_key(name)
            || self.elems.contains_key(name)
            || self.maps.contains_key(name)
            || self.params.iter().any(|(p, _)| p == name)
    }

    fn fresh(&self, name: &str) -> Res<()> {
        if self.declared(name) {
            Err(format!("{name} is already declared"))
        } else {
            Ok(())
        }
    }

    /// The base ring: declared variables (default `c`) and parameters,
    /// localized at the monoid and the invertible parameters.
    fn base(&self) -> Res<OreTower> {
        let mut vars: Vec<&str> = if self.base_vars.is_empty() {
            vec!["c"]
        } else {
            self.base_vars.iter().map(String::as_str).collect()
        };
        vars.extend(self.params.iter().map(|(p, _)| p.as_str()));
        let plain = OreTower::new(&vars, vec![]).map_err(err)?;
        let mut gens = Vec::new();
        for text in &self.monoid {
            gens.push(self.poly_in(&plain, text)?);
        }
        for (i, (_, inv)) in self.params.iter().enumerate() {
            if *inv {
                gens.push(MPoly::var(
                    plain.base_vars(),
                    vars.len() - self.params.len() + i,
                ));
            }
        }
        OreTower::new(&vars, gens).map_err(err)
    }

    /// A polynomial of the base ring, with declared polys in scope.
    fn poly_in(&self, t: &OreTower, text: &str) -> Res<MPoly> {
        let e = eval_str(text, t, &self.bindings(t)).map_err(err)?;
        if e.is_zero() {
            return Ok(MPoly::zero(t.base_vars()));
        }
        match e.as_base() {
            Some(f) if f.is_polynomial() => Ok(f.num().clone()),
            _ => Err(format!(
                "{text} is not a polynomial in {}",
                t.base_vars().join(", ")
            )),
        }
    }

    /// Every declared poly, element and named element that can be moved into `t`.
    fn bindings(&self, t: &OreTower) -> Bindings {
        let mut env = Bindings::new();
        for (n, p) in &self.polys {
            if let Ok(q) = relabel_poly(p, t.base_vars()) {
                env.insert(n.clone(), t.poly(q));
            }
        }
        let same = |s: &OreTower| s.gen_names() == t.gen_names();
        for (bn, b) in &self.bundles {
            for (n, named) in &b.named {
                let Ok(home) = b.form(named.home.as_deref()) else {
                    continue;
                };
                if same(&home.tower) {
                    if let Ok(x) = t.import(&named.element) {
                        env.insert(format!("{bn}.{n}"), x);
                    }
                }
            }
        }
        for (n, (x, s)) in &self.elems {
            if same(s) {
                if let Ok(x) = t.import(x) {
                    env.insert(n.clone(), x);
                }
            }
        }
        env
    }

    /// A zoo bundle by name; undeclared constructor strings such as `MJ2` are built on demand.
    fn bundle(&mut self, name: &str) -> Res<&AlgebraBundle> {
        if !self.bundles.contains_key(name) {
            if self.declared(name) {
                return Err(format!("{name} is not a zoo algebra"));
            }
            let b = from_spec_str(name).map_err(|e| format!("unknown algebra {name}: {e}"))?;
            self.bundles.insert(name.to_string(), b);
        }
        Ok(&self.bundles[name])
    }

    /// `T`, `A` or `A.key`.
    pub fn form(&mut self, r: &str) -> Res<Form> {
        let r = r.trim();
        if let Some(f) = self.towers.get(r) {
            return Ok(f.clone());
        }
        let (b, key) = match r.split_once('.') {
            Some((b, k)) => (b, Some(k)),
            None => (r, None),
        };
        let bundle = self.bundle(b)?;
        bundle.form(key).cloned().map_err(err)
    }

    fn tower(&mut self, r: &str) -> Res<OreTower> {
        Ok(self.form(r)?.tower)
    }

    fn elem(&mut self, text: &str, r: &str) -> Res<(Element, OreTower)> {
        let t = self.tower(r)?;
        let x =
            eval_str(text, &t, &self.bindings(&t)).map_err(|e| format!("{text} in {r}: {e}"))?;
        Ok((x, t))
    }

    /// `m`, `A.m`, `A.tau`, `A.key.tau` or `m on A`.
    pub fn map(&mut self, r: &str) -> Res<GeneratorMap> {
        let r = r.trim();
        if let Some((m, on)) = split_keyword(r, "on") {
            return self.map(&format!("{on}.{m}"));
        }
        if let Some(m) = self.maps.get(r) {
            return Ok(m.clone());
        }
        let (owner, m) = r
            .rsplit_once('.')
            .ok_or_else(|| format!("unknown map {r}"))?;
        if m == "tau" {
            return self
                .form(owner)?
                .tau
                .ok_or_else(|| format!("{owner} carries no involution"));
        }
        let bundle = self.bundle(owner)?;
        bundle.maps.get(m).cloned().ok_or_else(|| {
            format!(
                "{owner} has no map {m} (available: {})",
                bundle.maps.keys().cloned().collect::<Vec<_>>().join(", ")
            )
        })
    }

    /// Executes one declaration; checks are resolved into jobs.
    pub fn declare(&mut self, kind: &StmtKind, opts: &Options) -> Res<Option<Job>> {
        match kind {
            StmtKind::Param { name, invertible } => {
                self.fresh(name)?;
                self.params.push((name.clone(), *invertible));
                self.base()?;
            }
            StmtKind::Base(vars) => {
                // affects towers and polys declared afterwards
                self.base_vars = vars.clone();
                self.monoid.clear();
                self.base()?;
            }
            StmtKind::Monoid(gens) => {
                self.monoid.extend(gens.iter().cloned());
                self.base()?;
            }
            StmtKind::Poly { name, expr } => {
                self.fresh(name)?;
                let base = self.base()?;
                let p = self.poly_in(&base, expr)?;
                self.polys.insert(name.clone(), p);
            }
            StmtKind::Tower { name, body } => {
                self.fresh(name)?;
                // inconsistent sigma/delta data is accepted here and reported by `check tower-wellformed`
                let t = self.build_tower(body)?;
                let presentation = Presentation::from_tower(name, &t);
                self.towers.insert(
                    name.clone(),
                    Form {
                        tower: t,
                        presentation,
                        tau: None,
                    },
                );
            }
            StmtKind::Zoo { name, ctor } => {
                self.fresh(name)?;
                let b = from_spec_str(ctor).map_err(err)?;
                self.bundles.insert(name.clone(), b);
            }
            StmtKind::Elem { name, expr, tower } => {
                self.fresh(name)?;
                let v = self.elem(expr, tower)?;
                self.elems.insert(name.clone(), v);
            }
            StmtKind::Map {
                name,
                src,
                dst,
                images,
            } => {
                self.fresh(name)?;
                let (s, d) = (self.form(src)?, self.form(dst)?);
                let mut imgs = Vec::new();
                for g in &s.presentation.generators {
                    let text = match images.iter().find(|(n, _)| n == g) {
                        Some((_, e)) => e.clone(),
                        None if d.tower.find_gen(g).is_some() => g.clone(),
                        None => return Err(format!("map {name}: no image for {g}")),
                    };
                    imgs.push((g.clone(), parse(&text).map_err(err)?));
                }
                if let Some((g, _)) = images
                    .iter()
                    .find(|(g, _)| !s.presentation.generators.contains(g))
                {
                    return Err(format!("map {name}: {g} is not a generator of {src}"));
                }
                let env = self.bindings(&d.tower);
                let m = GeneratorMap::new(name, s.presentation, Some(s.tower), d.tower, imgs, &env)
                    .map_err(err)?;
                self.maps.insert(name.clone(), m);
            }
            StmtKind::Check(c) => return self.resolve_check(c, opts).map(Some),
        }
        Ok(None)
    }

    /// `[<parent> +] x(sigma g=e, ...; delta g=e, ...; sigmainv g=e, ...), y(...)`,
    /// or `base` for the base ring itself.
    fn build_tower(&mut self, body: &str) -> Res<OreTower> {
        if body.trim() == "base" {
            return self.base();
        }
        let (mut t, vars) = match split_keyword(body, "+") {
            Some((parent, rest)) => (self.tower(parent)?, rest.to_string()),
            None => (self.base()?, body.to_string()),
        };
        for item in split_top(&vars, ',') {
            let (name, inner) = match item.find('(') {
                Some(i) if item.ends_with(')') => (
                    item[..i].trim().to_string(),
                    item[i + 1..item.len() - 1].to_string(),
                ),
                None => (item.clone(), String::new()),
                _ => return Err(format!("malformed skew variable `{item}`")),
            };
            if !super::task::is_ident(&name) {
                return Err(format!("`{name}` is not a valid variable name"));
            }
            let (mut sigma, mut delta, mut sinv) = (Vec::new(), Vec::new(), None);
            for clause in split_top(&inner, ';') {
                let (kw, list) = clause
                    .split_once(char::is_whitespace)
                    .unwrap_or((&clause, ""));
                let list = image_list(list)?;
                match kw {
                    "sigma" => sigma = list,
                    "delta" => delta = list,
                    "sigmainv" => sinv = Some(list),
                    other => return Err(format!(
                        "unknown clause `{other}` in {name} (expected sigma, delta or sigmainv)"
                    )),
                }
            }
            let (s, d) = (pairs(&sigma), pairs(&delta));
            let si = sinv.as_deref().map(pairs);
            let env = self.bindings(&t);
            t = extend_with(&t, &name, &s, &d, si.as_deref(), &env).map_err(err)?;
        }
        Ok(t)
    }

    fn resolve_check(&mut self, c: &CheckStmt, opts: &Options) -> Res<Job> {
        let o = &c.options;
        let num = |k: &str, default: u32| -> Res<u32> {
            o.get(k).map_or(Ok(default), |v| {
                v.parse()
                    .map_err(|_| format!("option {k}={v} is not a number"))
            })
        };
        let known = |keys: &[&str]| -> Res<()> {
            match o.keys().find(|k| !keys.contains(&k.as_str())) {
                Some(k) => Err(format!(
                    "unknown option `{k}` for check {} (allowed: {})",
                    c.kind,
                    keys.join(", ")
                )),
                None => Ok(()),
            }
        };
        let yes_no = |k: &str, yes: &str, no: &str| -> Res<Option<bool>> {
            match o.get(k).map(String::as_str) {
                None => Ok(None),
                Some(v) if v == yes => Ok(Some(true)),
                Some(v) if v == no => Ok(Some(false)),
                Some(v) => Err(format!("option {k} takes {yes} or {no}, not {v}")),
            }
        };
        let in_tower = |args: &str| -> Res<(String, String)> {
            split_keyword(args, "in")
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .ok_or_else(|| format!("expected `... in <tower>` in `{args}`"))
        };
        let args = c.args.as_str();
        Ok(match c.kind.as_str() {
            "relations" => {
                known(&[])?;
                let (target, extra) = match split_keyword(args, "with") {
                    Some((t, rels)) => (t, Some(split_top(rels, ';'))),
                    None => (args, None),
                };
                let (pres, map) =
                    match self.map(target) {
                        Ok(m) => (m.source.clone(), m),
                        Err(map_err) => match self.form(target) {
                            Ok(f) => {
                                let id = GeneratorMap::identity(
                                    &f.presentation.name,
                                    f.presentation.clone(),
                                    &f.tower,
                                )
                                .map_err(err)?;
                                (f.presentation, id)
                            }
                            Err(form_err) => return Err(format!(
                                "{target} is neither a map ({map_err}) nor a tower ({form_err})"
                            )),
                        },
                    };
                let pres = match extra {
                    None => pres,
                    Some(rels) => {
                        let mut p = Presentation {
                            relations: Vec::new(),
                            ..pres
                        };
                        for r in rels {
                            p.push_relation(&r).map_err(err)?;
                        }
                        p
                    }
                };
                Job::Relations { pres, map }
            }
            "central" => {
                known(&[])?;
                let (x, r) = in_tower(args)?;
                let (x, t) = self.elem(&x, &r)?;
                Job::Central { t, x }
            }
            "involution" => {
                known(&[])?;
                Job::Involution {
                    map: self.map(args)?,
                }
            }
            "inverse-pair" => {
                known(&[])?;
                let names: Vec<&str> = args
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .collect();
                let [f, g] = names.as_slice() else {
                    return Err("expected `inverse-pair <map> <map>`".into());
                };
                Job::InversePair {
                    f: self.map(f)?,
                    g: self.map(g)?,
                }
            }
            "inner-auto" | "inner-der" => {
                known(&[])?;
                let (head, r) = in_tower(args)?;
                let (var, x) =
                    split_keyword(&head, "by").ok_or("expected `<var> by <expr> in <tower>`")?;
                let (x, t) = self.elem(x, &r)?;
                let var = var.to_string();
                if c.kind == "inner-auto" {
                    Job::InnerAuto { t, var, x }
                } else {
                    Job::InnerDer { t, var, x }
                }
            }
            "normal" => {
                known(&["degree"])?;
                let (x, r) = in_tower(args)?;
                let (x, t) = self.elem(&x, &r)?;
                Job::Normal {
                    t,
                    x,
                    degree: num("degree", 2)?,
                }
            }
            "local-reduction" => {
                known(&["factors", "expect"])?;
                let parts = split_top(args, ',');
                let [f, g] = parts.as_slice() else {
                    return Err("expected `local-reduction <f>, <g>`".into());
                };
                let base = self.base()?;
                let plain = OreTower::new(
                    &base
                        .base_vars()
                        .iter()
                        .map(String::as_str)
                        .collect::<Vec<_>>(),
                    vec![],
                )
                .map_err(err)?;
                let (f, g) = (self.poly_in(&plain, f)?, self.poly_in(&plain, g)?);
                let factors = match o.get("factors") {
                    Some(list) => split_top(list, ';')
                        .iter()
                        .map(|p| self.poly_in(&plain, p))
                        .collect::<Res<Vec<_>>>()?,
                    None => rational_factors(&f),
                };
                Job::LocalReduction {
                    f,
                    factors,
                    g,
                    expect: yes_no("expect", "yes", "no")?.unwrap_or(true),
                }
            }
            "center-search" => {
                known(&["skew", "coeff", "expect", "limit"])?;
                let t = self.tower(args)?;
                let expect = match o.get("expect") {
                    None => None,
                    Some(list) => {
                        let env = self.bindings(&t);
                        Some(
                            split_top(list, ';')
                                .iter()
                                .map(|e| eval_str(e, &t, &env).map_err(|x| format!("{e}: {x}")))
                                .collect::<Res<Vec<_>>>()?,
                        )
                    }
                };
                let limit = o
                    .get("limit")
                    .map_or(Ok(crate::analysis::DEFAULT_ANSATZ_LIMIT), |v| {
                        v.parse().map_err(|_| format!("limit={v} is not a number"))
                    })?;
                Job::CenterSearch {
                    t,
                    skew: num("skew", opts.skew_bound)?,
                    coeff: num("coeff", opts.coeff_bound)?,
                    limit,
                    expect,
                }
            }
            "growth" => {
                known(&["n", "expect", "weights"])?;
                let t = self.tower(args)?;
                let weights = o
                    .get("weights")
                    .map(|w| {
                        split_top(w, ';')
                            .iter()
                            .map(|x| {
                                x.parse::<u32>()
                                    .map_err(|_| format!("weight {x} is not a number"))
                            })
                            .collect::<Res<Vec<_>>>()
                    })
                    .transpose()?;
                let expect = o
                    .get("expect")
                    .map(|v| {
                        v.parse::<usize>()
                            .map_err(|_| format!("expect={v} is not a number"))
                    })
                    .transpose()?;
                Job::Growth {
                    t,
                    n: num("n", 8)? as usize,
                    weights,
                    expect,
                }
            }
            "quotient" => {
                known(&["degree"])?;
                let (r, rest) = split_keyword(args, "by")
                    .ok_or("expected `quotient <tower> by <expr>; ... via <map> <map>`")?;
                let (ideal, via) =
                    split_keyword(rest, "via").ok_or("expected `... via <forward> <backward>`")?;
                let t = self.tower(r)?;
                let env = self.bindings(&t);
                let ideal = split_top(ideal, ';')
                    .iter()
                    .map(|e| eval_str(e, &t, &env).map_err(err))
                    .collect::<Res<Vec<_>>>()?;
                let names: Vec<&str> = via.split_whitespace().collect();
                let [f, g] = names.as_slice() else {
                    return Err("expected `via <forward> <backward>`".into());
                };
                let degree = o
                    .get("degree")
                    .map(|v| {
                        v.parse::<u32>()
                            .map_err(|_| format!("degree={v} is not a number"))
                    })
                    .transpose()?;
                Job::Quotient {
                    t,
                    ideal,
                    fwd: self.map(f)?,
                    bwd: self.map(g)?,
                    degree,
                }
            }
            "ispe" => {
                known(&["tau"])?;
                let f = self.form(args)?;
                let tau = match o.get("tau") {
                    Some(m) => self.map(m)?,
                    None => f
                        .tau
                        .ok_or_else(|| format!("{args} carries no involution; pass [tau=<map>]"))?,
                };
                Job::Ispe { t: f.tower, tau }
            }
            "tower-wellformed" => {
                known(&["samples", "pairs"])?;
                let samples = num("samples", opts.samples)?;
                Job::WellFormed {
                    t: self.tower(args)?,
                    samples: samples as usize,
                    pairs: num("pairs", samples)? as usize,
                    seed: opts.seed,
                }
            }
            "inner-power-scan" => {
                known(&["n", "exp", "expect"])?;
                let (var, r) = in_tower(args)?;
                let t = self.tower(&r)?;
                Job::InnerPowerScan {
                    t,
                    var,
                    n: num("n", 4)?,
                    exp: num("exp", 4)?,
                    expect: yes_no("expect", "found", "none")?,
                }
            }
            other => return Err(format!("unknown check kind {other}")),
        })
    }
}
