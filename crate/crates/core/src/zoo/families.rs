//! Differential operator rings, quantum planes, the rings `P(f,g)`, the
//! quantum and Jordanian matrix algebras and the classified two-step
//! involutive extensions.

use super::*;
use crate::exactnum::rational_factors;
use crate::lang::{extend_with, Bindings};

fn env() -> Bindings {
    Bindings::new()
}

fn pres(name: &str, gens: &[&str], rels: &[String]) -> Result<Presentation> {
    let rels: Vec<&str> = rels.iter().map(String::as_str).collect();
    Presentation::new(name, gens, &[], &rels)
}

fn map(name: &str, src: &Form, dst: &OreTower, images: &[(&str, &str)]) -> Result<GeneratorMap> {
    GeneratorMap::from_strs(
        name,
        src.presentation.clone(),
        Some(src.tower.clone()),
        dst.clone(),
        images,
        &env(),
    )
}

fn univariate(f: &MPoly, what: &str) -> Result<MPoly> {
    lift(f, &base_c()).map_err(|_| Error::invalid(format!("{what} = {f} is not a polynomial in c")))
}

/// `R_f = k[c][a; d/dc scaled by f]`, i.e. `a*c = c*a + f`.
pub fn make_rf(f: &MPoly) -> Result<AlgebraBundle> {
    let f = univariate(f, "f")?;
    let t = extend_with(&base_c(), "a", &[], &[("c", &f.to_string())], None, &env())?;
    let p = pres("Rf", &["c", "a"], &[format!("a*c = c*a + {}", paren(&f))])?;
    let name = format!("Rf({f})");
    let mut b = AlgebraBundle::new(
        &name,
        form(t, p, None)?,
        "differential operator ring k<a,c | ca - ac + f>",
    );
    b.name_elem("f", b.tower().poly(f), None);
    Ok(b)
}

fn q_ring(q: &Param, name: &str, delta_c: &str) -> Result<(OreTower, Presentation)> {
    if q.is_zero() {
        return Err(Error::invalid("q must be nonzero"));
    }
    let base = q.base()?;
    let (qt, qi) = (q.text(), q.inv_text());
    let t = extend_with(
        &base,
        "a",
        &[("c", &format!("{qt}*c"))],
        &[("c", delta_c)],
        Some(&[("c", &format!("{qi}*c"))]),
        &env(),
    )?;
    let mut rels = vec![format!("a*c = {qt}*c*a + {delta_c}")];
    let mut gens = vec!["c"];
    if let Some(s) = q.symbol() {
        rels.extend(q.central_relations(&["c", "a"]));
        gens.push(s);
    }
    gens.push("a");
    Ok((t, pres(name, &gens, &rels)?))
}

/// Quantum plane `a*c = q*c*a`.
pub fn make_quantum_plane(q: &Param) -> Result<AlgebraBundle> {
    let (t, p) = q_ring(q, "Oq", "0")?;
    Ok(AlgebraBundle::new(
        &format!("Oq({q})"),
        form(t, p, None)?,
        "quantum plane k<a,c | ac - qca>",
    ))
}

/// Quantum Weyl algebra `a*c = q*c*a + 1`.
pub fn make_quantum_weyl(q: &Param) -> Result<AlgebraBundle> {
    let (t, p) = q_ring(q, "AW", "1")?;
    Ok(AlgebraBundle::new(
        &format!("AW({q})"),
        form(t, p, None)?,
        "quantum Weyl algebra k<a,c | ac - qca - 1>",
    ))
}

/// The tower `k[c,u][a; D]` with `D = f d/dc + g u d/du`.
pub(crate) fn p_pres2(f: &MPoly, g: &MPoly, name: &str) -> Result<Form> {
    let base = OreTower::new(&["c", "u"], vec![])?;
    let (fb, gb) = (lift(f, &base)?, lift(g, &base)?);
    let t = extend_with(
        &base,
        "a",
        &[],
        &[("c", &fb.to_string()), ("u", &format!("{}*u", paren(&gb)))],
        None,
        &env(),
    )?;
    let p = pres(
        name,
        &["c", "u", "a"],
        &[
            format!("a*c = c*a + {}", paren(f)),
            "u*c = c*u".to_string(),
            format!("a*u = u*a + {}*u", paren(g)),
        ],
    )?;
    let tau = GeneratorMap::from_strs(
        "tau",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &[("c", "c"), ("u", "-u"), ("a", "u + a")],
        &env(),
    )?;
    form(t, p, Some(tau))
}

/// `P(f,g)` in its three forms. The main form is `k[c,u][a; D]`; `pres1` is
/// `k[c][a; delta][u; sigma]` with `u*a = (a - g)*u`; `ispe` is the two-step
/// involutive extension in `a` and `d = u + a`; `loc` and `pres1loc` invert the
/// factors of `f` in the main and `pres1` forms.
pub fn make_p(f: &MPoly, g: &MPoly) -> Result<AlgebraBundle> {
    let f = univariate(f, "f")?;
    let g = univariate(g, "g")?;
    let (fs, gs) = (f.to_string(), g.to_string());
    let main = p_pres2(&f, &g, "P")?;
    let name = format!("P({f}, {g})");
    let mut b = AlgebraBundle::new(&name, main, "ring P(f,g) generated by a, c, u");

    // k[c][a; delta_1][u; sigma_2]
    let a1 = extend_with(&base_c(), "a", &[], &[("c", &fs)], None, &env())?;
    let t1 = extend_with(
        &a1,
        "u",
        &[("a", &format!("a - ({gs})"))],
        &[],
        Some(&[("a", &format!("a + ({gs})"))]),
        &env(),
    )?;
    let p1 = pres(
        "P.pres1",
        &["c", "a", "u"],
        &[
            format!("a*c = c*a + ({fs})"),
            "u*c = c*u".into(),
            format!("u*a = (a - ({gs}))*u"),
        ],
    )?;
    let tau1 = GeneratorMap::from_strs(
        "tau",
        p1.clone(),
        Some(t1.clone()),
        t1.clone(),
        &[("c", "c"), ("a", "u + a"), ("u", "-u")],
        &env(),
    )?;
    let pres1 = form(t1, p1, Some(tau1))?;

    // involutive form in a and d
    let td = extend_with(
        &a1,
        "d",
        &[("a", &format!("a - ({gs})"))],
        &[("c", &fs), ("a", &format!("({gs})*a"))],
        Some(&[("a", &format!("a + ({gs})"))]),
        &env(),
    )?;
    let pd = pres(
        "P.ispe",
        &["c", "a", "d"],
        &[
            format!("a*c = c*a + ({fs})"),
            format!("d*c = c*d + ({fs})"),
            format!("d*a = (a - ({gs}))*d + ({gs})*a"),
        ],
    )?;
    let taud = GeneratorMap::from_strs(
        "tau",
        pd.clone(),
        Some(td.clone()),
        td.clone(),
        &[("c", "c"), ("a", "d"), ("d", "a")],
        &env(),
    )?;
    let ispe = form(td, pd, Some(taud))?;

    let mt = b.main.tower.clone();
    b.maps.insert(
        "pres1_to_main".into(),
        map(
            "pres1_to_main",
            &pres1,
            &mt,
            &[("c", "c"), ("a", "a"), ("u", "u")],
        )?,
    );
    b.maps.insert(
        "main_to_pres1".into(),
        map(
            "main_to_pres1",
            &b.main,
            &pres1.tower,
            &[("c", "c"), ("u", "u"), ("a", "a")],
        )?,
    );
    b.maps.insert(
        "ispe_to_main".into(),
        map(
            "ispe_to_main",
            &ispe,
            &mt,
            &[("c", "c"), ("a", "a"), ("d", "u + a")],
        )?,
    );
    b.maps.insert(
        "main_to_ispe".into(),
        map(
            "main_to_ispe",
            &b.main,
            &ispe.tower,
            &[("c", "c"), ("u", "d - a"), ("a", "a")],
        )?,
    );
    b.alternates.insert("pres1".into(), pres1);
    b.alternates.insert("ispe".into(), ispe);

    b.name_elem("u", mt.gen("u")?, None);
    b.name_elem("d", eval_in(&mt, "u + a")?, None);
    b.name_elem("f", mt.poly(lift(&f, &mt)?), None);
    b.name_elem("g", mt.poly(lift(&g, &mt)?), None);

    if !f.is_constant() {
        let factors = rational_factors(&f);
        let lt = mt.localized(
            &factors
                .iter()
                .map(|p| lift(p, &mt))
                .collect::<Result<Vec<_>>>()?,
        )?;
        if let Some(cert) = crate::analysis::local_reduction(&f, &factors, &g)? {
            // prod p_i^{m_i} u^n is annihilated by the derivation
            let mut v = lt.pow(&lt.gen("u")?, cert.n.unsigned_abs() as u32);
            if cert.n < 0 {
                return Err(Error::invalid(
                    "local reduction certificate with negative n",
                ));
            }
            for (p, &m) in factors.iter().zip(&cert.m) {
                let pi = lt.poly(lift(p, &lt)?);
                let pm = if m >= 0 {
                    lt.pow(&pi, m as u32)
                } else {
                    lt.pow(&lt.inverse(&pi)?, m.unsigned_abs() as u32)
                };
                v = lt.mul(&pm, &v);
            }
            b.name_elem("v", v, Some("loc"));
        }
        let p1 = &b.alternates["pres1"];
        let l1 = p1.tower.localized(
            &factors
                .iter()
                .map(|p| lift(p, &p1.tower))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let l1p = Presentation::from_tower("P.pres1loc", &l1);
        b.alternates.insert(
            "pres1loc".into(),
            Form {
                tower: l1,
                presentation: l1p,
                tau: None,
            },
        );
        let lp = Presentation::from_tower("P.loc", &lt);
        b.alternates.insert(
            "loc".into(),
            Form {
                tower: lt,
                presentation: lp,
                tau: None,
            },
        );
    }
    Ok(b)
}

pub(crate) fn eval_in(t: &OreTower, text: &str) -> Result<Element> {
    crate::lang::eval_str(text, t, &env())
}

/// Quantum matrix algebra `M_q(2)` as the tower `c, a, d, b`.
pub fn make_mq2(q: &Param) -> Result<AlgebraBundle> {
    if q.is_zero() {
        return Err(Error::invalid("q must be nonzero"));
    }
    let (qt, qi) = (q.text(), q.inv_text());
    let base = q.base()?;
    let qc = format!("{qt}*c");
    let a = extend_with(
        &base,
        "a",
        &[("c", &qc)],
        &[],
        Some(&[("c", &format!("{qi}*c"))]),
        &env(),
    )?;
    let d = extend_with(
        &a,
        "d",
        &[("c", &qc)],
        &[],
        Some(&[("c", &format!("{qi}*c"))]),
        &env(),
    )?;
    let t = extend_with(
        &d,
        "b",
        &[("a", &format!("{qt}*a")), ("d", &format!("{qt}*d"))],
        &[("c", &format!("({qt} - {qi})*a*d"))],
        Some(&[("a", &format!("{qi}*a")), ("d", &format!("{qi}*d"))]),
        &env(),
    )?;
    let mut rels = vec![
        format!("a*c = {qt}*c*a"),
        format!("d*c = {qt}*c*d"),
        "d*a = a*d".to_string(),
        format!("b*a = {qt}*a*b"),
        format!("b*d = {qt}*d*b"),
        format!("b*c = c*b + ({qt} - {qi})*a*d"),
    ];
    let mut gens = vec!["c"];
    let mut tau_images = vec![("c", "c"), ("a", "d"), ("d", "a"), ("b", "b")];
    if let Some(s) = q.symbol() {
        rels.extend(q.central_relations(&["c", "a", "d", "b"]));
        gens.push(s);
        tau_images.push((s, s));
    }
    gens.extend(["a", "d", "b"]);
    let p = pres("Mq2", &gens, &rels)?;
    let tau = GeneratorMap::from_strs(
        "tau",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &tau_images,
        &env(),
    )?;
    let mut b = AlgebraBundle::new(
        &format!("Mq2({q})"),
        form(t, p, Some(tau))?,
        "quantum 2x2 matrices M_q(2)",
    );
    let det = eval_in(b.tower(), &format!("b*c - {qt}*a*d"))?;
    b.name_elem("detq", det, None);
    Ok(b)
}

/// Jordanian matrix algebra `M_J(2)`: the `abcd` form and the form in `u = d - a`.
pub fn make_mj2() -> Result<AlgebraBundle> {
    let a = extend_with(&base_c(), "a", &[], &[("c", "c^2")], None, &env())?;
    let d = extend_with(
        &a,
        "d",
        &[("a", "a - c")],
        &[("c", "c^2"), ("a", "c*a")],
        Some(&[("a", "a + c")]),
        &env(),
    )?;
    let t = extend_with(
        &d,
        "b",
        &[("a", "a + c"), ("d", "d + c")],
        &[
            ("c", "c*a + c*d + c^2"),
            ("a", "c*d - a*d + a^2"),
            ("d", "c*d - a*d + d^2"),
        ],
        Some(&[("a", "a - c"), ("d", "d - c")]),
        &env(),
    )?;
    let p = Presentation::new(
        "MJ2",
        &["c", "a", "d", "b"],
        &[],
        &[
            "a*c = c*a + c^2",
            "d*c = c*d + c^2",
            "d*a = a*d - c*d + c*a",
            "b*c = c*b + c*a + c*d + c^2",
            "b*d = d*b + c*b + c*d - a*d + d^2",
            "b*a = a*b + c*b + c*d - a*d + a^2",
        ],
    )?;
    let tau = GeneratorMap::from_strs(
        "tau",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &[("c", "c"), ("a", "d"), ("d", "a"), ("b", "b")],
        &env(),
    )?;
    let mut bundle = AlgebraBundle::new(
        "MJ2",
        form(t, p, Some(tau))?,
        "Jordanian 2x2 matrices M_J(2)",
    );

    let ub = OreTower::new(&["c", "u"], vec![])?;
    let ua = extend_with(&ub, "a", &[], &[("c", "c^2"), ("u", "c*u")], None, &env())?;
    let ut = extend_with(
        &ua,
        "b",
        &[("a", "a + c")],
        &[
            ("c", "c*(2*a + u + c)"),
            ("u", "u*(2*a + u + c)"),
            ("a", "(c - u)*a"),
        ],
        Some(&[("a", "a - c")]),
        &env(),
    )?;
    let up = Presentation::new(
        "MJ2.u",
        &["c", "u", "a", "b"],
        &[],
        &[
            "a*c = c*a + c^2",
            "u*c = c*u",
            "u*a = a*u - c*u",
            "b*c = c*b + c*(2*a + u + c)",
            "b*u = u*b + u*(2*a + u + c)",
            "b*a = (a + c)*b + (c - u)*a",
        ],
    )?;
    let utau = GeneratorMap::from_strs(
        "tau",
        up.clone(),
        Some(ut.clone()),
        ut.clone(),
        &[("c", "c"), ("u", "-u"), ("a", "u + a"), ("b", "b")],
        &env(),
    )?;
    let uform = form(ut, up, Some(utau))?;

    let mt = bundle.main.tower.clone();
    bundle.maps.insert(
        "to_u".into(),
        map(
            "to_u",
            &bundle.main,
            &uform.tower,
            &[("c", "c"), ("a", "a"), ("d", "u + a"), ("b", "b")],
        )?,
    );
    bundle.maps.insert(
        "from_u".into(),
        map(
            "from_u",
            &uform,
            &mt,
            &[("c", "c"), ("u", "d - a"), ("a", "a"), ("b", "b")],
        )?,
    );
    bundle.name_elem("detJ", eval_in(&mt, "a*d - c*b - c*d")?, None);
    bundle.name_elem("u", eval_in(&mt, "d - a")?, None);
    bundle.name_elem(
        "z",
        eval_in(&uform.tower, "c*b + (c - u)*a - a^2")?,
        Some("u"),
    );
    bundle.alternates.insert("u".into(), uform);
    Ok(bundle)
}

/// Two-step extension with `ac + ca = 1`, `dc + cd = 1`, `da + ad = h`.
pub fn make_ispe_neg_weyl(h: &MPoly) -> Result<AlgebraBundle> {
    let h = univariate(h, "h")?;
    let hs = h.to_string();
    let a = extend_with(
        &base_c(),
        "a",
        &[("c", "-c")],
        &[("c", "1")],
        Some(&[("c", "-c")]),
        &env(),
    )?;
    let t = extend_with(
        &a,
        "d",
        &[("c", "-c"), ("a", "-a")],
        &[("c", "1"), ("a", &hs)],
        Some(&[("c", "-c"), ("a", "-a")]),
        &env(),
    )?;
    let p = pres(
        "ISPEnegWeyl",
        &["c", "a", "d"],
        &[
            "a*c + c*a = 1".into(),
            "d*c + c*d = 1".into(),
            format!("d*a + a*d = ({hs})"),
        ],
    )?;
    let tau = GeneratorMap::from_strs(
        "tau",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &[("c", "c"), ("a", "d"), ("d", "a")],
        &env(),
    )?;
    Ok(AlgebraBundle::new(
        &format!("ISPEnegWeyl({h})"),
        form(t, p, Some(tau))?,
        "involutive extension of k[c] by two copies of the q = -1 quantum Weyl algebra",
    ))
}

/// Relation between `d` and `a` in the quantum-plane involutive extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneVariant {
    /// `d*a = a*d`
    Commuting,
    /// `d*a + a*d = h`
    Anti,
}

impl PlaneVariant {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "commuting" | "comm" | "da=ad" => Ok(PlaneVariant::Commuting),
            "anti" | "da+ad=h" => Ok(PlaneVariant::Anti),
            other => Err(Error::invalid(format!(
                "unknown plane variant {other} (expected commuting or anti)"
            ))),
        }
    }
}

/// Two-step extension with `ac = qcd`, `dc = qcd` and either `da = ad` or
/// `da + ad = h`. The anticommuting variant with `h != 0` is only a valid
/// Ore extension when `q^2 = 1`; otherwise the tower check reports the
/// residual `(1 - q^2) h c`.
pub fn make_ispe_plane(q: &Param, variant: PlaneVariant, h: &MPoly) -> Result<AlgebraBundle> {
    let h = univariate(h, "h")?;
    let qv = q
        .value()
        .ok_or_else(|| Error::invalid("the plane family needs a rational q"))?;
    if q.is_zero() || num::One::is_one(qv) {
        return Err(Error::invalid("q must differ from 0 and 1"));
    }
    let (qt, qi) = (q.text(), q.inv_text());
    let hs = h.to_string();
    let qc = format!("{qt}*c");
    let a = extend_with(
        &base_c(),
        "a",
        &[("c", &qc)],
        &[],
        Some(&[("c", &format!("{qi}*c"))]),
        &env(),
    )?;
    let (sa, da, rel) = match variant {
        PlaneVariant::Commuting => {
            if !h.is_zero() {
                return Err(Error::invalid("the commuting variant takes h = 0"));
            }
            ("a", "0".to_string(), "d*a = a*d".to_string())
        }
        PlaneVariant::Anti => ("-a", hs.clone(), format!("d*a + a*d = ({hs})")),
    };
    let t = extend_with(
        &a,
        "d",
        &[("c", &qc), ("a", sa)],
        &[("a", &da)],
        Some(&[("c", &format!("{qi}*c")), ("a", sa)]),
        &env(),
    )?;
    let p = pres(
        "ISPEplane",
        &["c", "a", "d"],
        &[format!("a*c = {qt}*c*a"), format!("d*c = {qt}*c*d"), rel],
    )?;
    let tau = GeneratorMap::from_strs(
        "tau",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &[("c", "c"), ("a", "d"), ("d", "a")],
        &env(),
    )?;
    let v = match variant {
        PlaneVariant::Commuting => "commuting",
        PlaneVariant::Anti => "anti",
    };
    Ok(AlgebraBundle::new(
        &format!("ISPEplane({q}, {v}, {h})"),
        form(t, p, Some(tau))?,
        "involutive extension of k[c] by two copies of the quantum plane",
    ))
}
