//! Ore extensions `P(f,g)[b; sigma, delta]` with `sigma` conjugation by a
//! factor `p` of `f` and `delta` the inner sigma-derivation of some `theta`.

use super::families::{eval_in, p_pres2};
use super::*;
use crate::exactnum::{poly_divide_check, rational_factors};
use crate::lang::{extend_with, Bindings};
use crate::report::Verdict;
use crate::tower::SkewVarSpec;

const PGENS: [&str; 3] = ["c", "u", "a"];

/// `G(f, p, theta)`: `f = c*g`, `sigma(x) = p^-1 x p` and
/// `delta(x) = theta*x - sigma(x)*theta` on `x in {c, u, a}`, with `theta`
/// an expression over `P(f,g)` with the factors of `f` inverted.
pub fn make_g(f: &MPoly, p: &MPoly, theta: &str) -> Result<AlgebraBundle> {
    let f = lift(f, &base_c())
        .map_err(|_| Error::invalid(format!("f = {f} is not a polynomial in c")))?;
    let p = lift(p, &base_c())
        .map_err(|_| Error::invalid(format!("p = {p} is not a polynomial in c")))?;
    let c = MPoly::var(f.vars(), 0);
    let g = poly_divide_check(&f, &c)
        .filter(|_| !f.is_zero())
        .ok_or_else(|| Error::invalid(format!("f = {f} is not divisible by c")))?;
    if p.is_constant() || poly_divide_check(&f, &p).is_none() {
        return Err(Error::invalid(format!(
            "p = {p} is not a non-constant factor of f = {f}"
        )));
    }
    let pform = p_pres2(&f, &g, "P")?;
    let pt = pform.tower.clone();
    let factors: Vec<MPoly> = rational_factors(&f)
        .iter()
        .map(|q| lift(q, &pt))
        .collect::<Result<_>>()?;
    let lp = pt.localized(&factors)?;
    let pl = lift(&p, &lp)?;
    if lp.monoid().decompose(&pl).is_none() {
        return Err(Error::DenominatorNotInMonoid(p.to_string()));
    }
    let phi = lp.poly(pl);
    let phi_inv = lp.inverse(&phi)?;
    let th = crate::lang::eval_str(theta, &lp, &Bindings::new())?;

    let mut sigma = Vec::new();
    let mut delta = Vec::new();
    let mut sigma_inv = Some(Vec::new());
    for x in PGENS {
        let xe = lp.gen(x)?;
        let s = lp.mul_all([&phi_inv, &xe, &phi]);
        let d = lp.mul(&th, &xe).sub(&lp.mul(&s, &th));
        for (what, img) in [("sigma", &s), ("delta", &d)] {
            if !img.is_denominator_free() {
                return Err(Error::ImageNotInP(format!("{what}({x}) = {}", lp.fmt(img))));
            }
        }
        sigma.push(pt.import(&s)?);
        delta.push(pt.import(&d)?);
        let si = lp.mul_all([&phi, &xe, &phi_inv]);
        sigma_inv = match (sigma_inv, si.is_denominator_free()) {
            (Some(mut v), true) => {
                v.push(pt.import(&si)?);
                Some(v)
            }
            _ => None,
        };
    }

    // conditions making tau extend by tau(b) = b
    let tau_p = pform.tau.as_ref().expect("P carries tau");
    let (dc, du, da) = (&delta[0], &delta[1], &delta[2]);
    let r1 = du.sub(&tau_p.apply(da)?.sub(da));
    if !r1.is_zero() {
        return Err(Error::GjmaConditionFailed {
            check: "delta(u) = tau(delta(a)) - delta(a)".into(),
            residual: pt.fmt(&r1),
        });
    }
    let r2 = dc.sub(&tau_p.apply(dc)?);
    if !r2.is_zero() {
        return Err(Error::GjmaConditionFailed {
            check: "delta(c) = tau(delta(c))".into(),
            residual: pt.fmt(&r2),
        });
    }

    // reorder images to the tower's generator order c, u, a
    let order: Vec<usize> = pt
        .gen_names()
        .iter()
        .map(|n| PGENS.iter().position(|x| x == n).unwrap())
        .collect();
    let pick = |v: &Vec<Element>| order.iter().map(|&k| v[k].clone()).collect::<Vec<_>>();
    let t = pt.extend(SkewVarSpec {
        name: "b".into(),
        sigma: pick(&sigma),
        delta: pick(&delta),
        sigma_inv: sigma_inv.as_ref().map(pick),
    })?;
    let pres = Presentation::from_tower("G", &t);
    let tau = GeneratorMap::from_strs(
        "tau",
        pres.clone(),
        Some(t.clone()),
        t.clone(),
        &[("c", "c"), ("u", "-u"), ("a", "u + a"), ("b", "b")],
        &Bindings::new(),
    )?;
    let main = form(t, pres, Some(tau))?;
    let lt = main.tower.localized(&factors)?;
    let lpres = Presentation::from_tower("G.loc", &lt);

    let mut b = AlgebraBundle::new(
        &format!("G({f}, {p}, {theta})"),
        main,
        "Ore extension of P(f,g) by an inner sigma-derivation, sigma conjugation by a factor of f",
    );
    let theta_l = lt.import(&th)?;
    let phi_l = lt.import(&phi)?;
    let z = lt.mul(&phi_l, &lt.gen("b")?.sub(&theta_l));
    if z.is_denominator_free() {
        b.name_elem("z", b.tower().import(&z)?, None);
    } else {
        b.name_elem("z", z, Some("loc"));
    }
    b.name_elem("theta", theta_l, Some("loc"));
    b.name_elem("phi", b.tower().poly(lift(&p, b.tower())?), None);
    b.name_elem("u", b.tower().gen("u")?, None);
    b.alternates.insert(
        "loc".into(),
        Form {
            tower: lt,
            presentation: lpres,
            tau: None,
        },
    );
    Ok(b)
}

/// `G_f = G(f, g, g^-1 (a^2 + (u - g) a))` for `f = c*g` with `deg g >= 1`.
///
/// Besides the generic checks of [`make_g`], verifies the closed forms
/// `sigma(a) = a + h`, `delta(c) = c*gamma`, `delta(u) = u*gamma`,
/// `delta(a) = (h - u)*a` with `h = c g'` and `gamma = h + u + 2a`, the
/// criterion `delta(c) = c u^-1 delta(u)`, and the relations of the form in
/// `a, b, c, d = u + a`.
pub fn make_gf(f: &MPoly) -> Result<AlgebraBundle> {
    let f = lift(f, &base_c())
        .map_err(|_| Error::invalid(format!("f = {f} is not a polynomial in c")))?;
    let c = MPoly::var(f.vars(), 0);
    let g = poly_divide_check(&f, &c)
        .filter(|_| !f.is_zero())
        .ok_or_else(|| Error::invalid(format!("f = {f} is not of the form c*g")))?;
    if g.total_degree().unwrap_or(0) < 1 {
        return Err(Error::invalid(format!(
            "f = {f} needs g = f/c of degree at least 1"
        )));
    }
    let h = &c * &g.derivative(0);
    let (gs, hs) = (paren(&g), paren(&h));
    let theta = format!("inv{gs}*(a^2 + (u - {gs})*a)");
    let mut b = make_g(&f, &g, &theta)?;
    b.name = format!("Gf({f})");
    b.provenance = "generalized Jordanian matrix algebra G_f, equal to M_J(2) at f = c^2".into();
    b.main.presentation.name = "Gf".into();
    let t = b.tower().clone();
    let env: Bindings = [
        ("h".to_string(), eval_in(&t, &hs)?),
        ("g".to_string(), eval_in(&t, &gs)?),
    ]
    .into();
    let gamma = crate::lang::eval_str("h + u + 2*a", &t, &env)?;
    let mut env = env;
    env.insert("gamma".into(), gamma.clone());

    let bj = t.num_skew() - 1;
    let spec = t.skew_spec(bj).clone();
    let idx = |n: &str| t.gen_names().iter().position(|x| x == n).unwrap();
    let expect = [
        ("sigma(a) = a + h", &spec.sigma[idx("a")], "a + h"),
        ("delta(c) = c*gamma", &spec.delta[idx("c")], "c*gamma"),
        ("delta(u) = u*gamma", &spec.delta[idx("u")], "u*gamma"),
        ("delta(a) = (h - u)*a", &spec.delta[idx("a")], "(h - u)*a"),
    ];
    for (label, got, text) in expect {
        let want = crate::lang::eval_str(text, &t, &env)?;
        if *got != want {
            return Err(Error::GjmaConditionFailed {
                check: label.into(),
                residual: t.fmt(&got.sub(&want)),
            });
        }
    }
    let report =
        crate::analysis::inner_auto_check(&b.alternates["loc"].tower, "b", &t.poly(lift(&g, &t)?))?;
    if !report.passed() {
        return Err(Error::GjmaConditionFailed {
            check: "sigma is conjugation by g".into(),
            residual: report.diagnostics().join("; "),
        });
    }

    // the central element in closed form
    let z = crate::lang::eval_str("g*b + (g - u)*a - a^2", &t, &env)?;
    if b.named.get("z").map(|n| &n.element) != Some(&z) {
        return Err(Error::GjmaConditionFailed {
            check: "z = g*b + (g - u)*a - a^2".into(),
            residual: "closed form differs".into(),
        });
    }

    // delta(c) = c u^-1 delta(u) once u is inverted
    let ut = t.localized(&[MPoly::var(t.base_vars(), 1)])?;
    let crit = ut.import(&spec.delta[idx("c")])?.sub(&ut.mul_all([
        &ut.gen("c")?,
        &ut.inverse(&ut.gen("u")?)?,
        &ut.import(&spec.delta[idx("u")])?,
    ]));
    if !crit.is_zero() {
        return Err(Error::GjmaConditionFailed {
            check: "delta(c) = c*inv(u)*delta(u)".into(),
            residual: ut.fmt(&crit),
        });
    }

    // u-presentation written out
    let up = Presentation::new(
        "Gf.u",
        &["c", "u", "a", "b"],
        &[
            ("g", &g.to_string()),
            ("h", &h.to_string()),
            ("gamma", "h + u + 2*a"),
        ],
        &[
            &format!("a*c = c*a + ({f})"),
            "a*u = u*a + u*g",
            "c*u = u*c",
            "b*c = c*b + c*gamma",
            "b*u = u*b + u*gamma",
            "b*a = (a + h)*b + (h - u)*a",
        ],
    )?;
    let listed = Form {
        tower: t.clone(),
        presentation: up,
        tau: b.main.tau.clone(),
    };
    let rep = listed.self_check()?;
    if !rep.passed() {
        return Err(Error::GjmaConditionFailed {
            check: "listed relations".into(),
            residual: rep.diagnostics().join("; "),
        });
    }
    b.main.presentation = listed.presentation;

    abcd_form(&mut b, &f, &g, &h)?;
    b.name_elem("g", t.poly(lift(&g, &t)?), None);
    b.name_elem("h", t.poly(lift(&h, &t)?), None);
    b.name_elem("gamma", gamma, None);
    let lt = b.alternates["loc"].tower.clone();
    let v = lt.mul(&lt.inverse(&lt.gen("c")?)?, &lt.gen("u")?);
    b.name_elem("v", v, Some("loc"));
    let pair = super::birational::weyl_pair(&b, &f)?;
    super::birational::attach(&mut b, &pair);
    Ok(b)
}

/// Adds the form in `a, b, c, d = u + a` and its cross maps. The naive forms of
/// two relations fail; they are recorded as notes next to the relations that hold.
fn abcd_form(b: &mut AlgebraBundle, f: &MPoly, g: &MPoly, h: &MPoly) -> Result<()> {
    let t = b.tower().clone();
    let env = Bindings::new();
    let (fs, gs) = (f.to_string(), g.to_string());
    let a = extend_with(&base_c(), "a", &[], &[("c", &fs)], None, &env)?;
    let d = extend_with(
        &a,
        "d",
        &[("a", &format!("a - ({gs})"))],
        &[("c", &fs), ("a", &format!("({gs})*a"))],
        Some(&[("a", &format!("a + ({gs})"))]),
        &env,
    )?;
    // sigma_b and delta_b images translated through u = d - a
    let to_d = GeneratorMap::from_strs(
        "p_to_d",
        Presentation::new("P", &["c", "u", "a"], &[], &[])?,
        Some(t.truncate(1)),
        d.clone(),
        &[("c", "c"), ("u", "d - a"), ("a", "a")],
        &env,
    )?;
    let spec = t.skew_spec(1).clone();
    let idx = |n: &str| t.gen_names().iter().position(|x| x == n).unwrap();
    let u_sig = to_d.apply(&spec.sigma[idx("u")])?;
    let u_del = to_d.apply(&spec.delta[idx("u")])?;
    let a_sig = to_d.apply(&spec.sigma[idx("a")])?;
    let a_del = to_d.apply(&spec.delta[idx("a")])?;
    let sig = vec![
        to_d.apply(&spec.sigma[idx("c")])?,
        a_sig.clone(),
        u_sig.add(&a_sig),
    ];
    let del = vec![
        to_d.apply(&spec.delta[idx("c")])?,
        a_del.clone(),
        u_del.add(&a_del),
    ];
    let inv = spec.sigma_inv.as_ref().map(|si| -> Result<Vec<Element>> {
        let (ui, ai) = (to_d.apply(&si[idx("u")])?, to_d.apply(&si[idx("a")])?);
        Ok(vec![to_d.apply(&si[idx("c")])?, ai.clone(), ui.add(&ai)])
    });
    let bt = d.extend(SkewVarSpec {
        name: "b".into(),
        sigma: sig,
        delta: del,
        sigma_inv: inv.transpose()?,
    })?;

    let hs = h.to_string();
    let consts: &[(&str, &str)] = &[
        ("g", &gs),
        ("h", &hs),
        ("u", "d - a"),
        ("gamma", "h + a + d"),
    ];
    let correct = Presentation::new(
        "Gf.abcd",
        &["c", "a", "d", "b"],
        consts,
        &[
            &format!("a*c = c*a + ({fs})"),
            &format!("d*c = c*d + ({fs})"),
            "d*a = (a - g)*d + g*a",
            "b*c = c*b + c*gamma",
            "b*a = (a + h)*b + (h - u)*a",
            "b*d = (d + h)*b + (h + u)*d",
        ],
    )?;
    let tau = GeneratorMap::from_strs(
        "tau",
        correct.clone(),
        Some(bt.clone()),
        bt.clone(),
        &[("c", "c"), ("a", "d"), ("d", "a"), ("b", "b")],
        &env,
    )?;
    let abcd = form(bt.clone(), correct, Some(tau))?;
    let rep = abcd.self_check()?;
    if !rep.passed() {
        return Err(Error::GjmaConditionFailed {
            check: "abcd relations".into(),
            residual: rep.diagnostics().join("; "),
        });
    }
    // naive forms of two relations, evaluated and reported as notes
    let literal = Presentation::new(
        "Gf.abcd.literal",
        &["c", "a", "d", "b"],
        consts,
        &["d*a = (a - g)*d + g*(a - h)", "b*d = (d + h)*b + (h - u)*d"],
    )?;
    let lit = Form {
        tower: bt.clone(),
        presentation: literal,
        tau: None,
    }
    .self_check()?;
    for r in lit.results.iter().filter(|r| !r.ok()) {
        b.notes.push(format!(
            "naive form: {} does not hold (residual {}); the corrected form holds",
            r.relation,
            r.residual.as_deref().unwrap_or("?")
        ));
    }

    let to_abcd = GeneratorMap::from_strs(
        "to_abcd",
        b.main.presentation.clone(),
        Some(t.clone()),
        bt.clone(),
        &[("c", "c"), ("u", "d - a"), ("a", "a"), ("b", "b")],
        &env,
    )?;
    let from_abcd = GeneratorMap::from_strs(
        "from_abcd",
        abcd.presentation.clone(),
        Some(bt),
        t,
        &[("c", "c"), ("a", "a"), ("d", "u + a"), ("b", "b")],
        &env,
    )?;
    b.maps.insert("to_abcd".into(), to_abcd);
    b.maps.insert("from_abcd".into(), from_abcd);
    b.alternates.insert("abcd".into(), abcd);
    Ok(())
}
