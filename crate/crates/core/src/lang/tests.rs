use super::*;
use crate::exactnum::{vars, MPoly};
use crate::report::Verdict;
use crate::tower::SkewVarSpec;

fn jordan_plane() -> OreTower {
    let base = OreTower::new(&["c"], vec![]).unwrap();
    let c = base.base_var(0);
    let spec = SkewVarSpec {
        name: "a".into(),
        sigma: vec![c.clone()],
        delta: vec![base.mul(&c, &c)],
        sigma_inv: None,
    };
    base.extend(spec).unwrap()
}

fn localized_p() -> OreTower {
    let v = vars(&["c", "u"]);
    let base = OreTower::new(&["c", "u"], vec![MPoly::var(&v, 0)]).unwrap();
    let (c, u) = (base.base_var(0), base.base_var(1));
    let spec = SkewVarSpec {
        name: "a".into(),
        sigma: vec![c.clone(), u.clone()],
        delta: vec![base.mul(&c, &c), base.mul(&c, &u)],
        sigma_inv: None,
    };
    base.extend(spec).unwrap()
}

#[test]
fn evaluation_basics() {
    let t = localized_p();
    let env = Bindings::new();
    let v = eval_str("inv(c)*u", &t, &env).unwrap();
    assert_eq!(v, t.mul(&t.gen_inverse(0), &t.base_var(1)));
    assert!(eval_str("0", &t, &env).unwrap().is_zero());
    assert!(matches!(
        eval_str("inv(a)", &t, &env),
        Err(Error::NotInvertible(_))
    ));
    assert!(matches!(
        eval_str("inv(u)", &t, &env),
        Err(Error::NotInvertible(_))
    ));
    assert!(matches!(eval_str("x + 1", &t, &env), Err(Error::UnboundName(n)) if n == "x"));
    let mut env = Bindings::new();
    env.insert("h".into(), t.base_var(0));
    assert_eq!(t.fmt(&eval_str("a*h - h*a", &t, &env).unwrap()), "c^2");
}

#[test]
fn print_parse_round_trip() {
    let t = localized_p();
    let env = Bindings::new();
    for text in [
        "inv(c)*u*a^2 - 3/2*c",
        "(a + u)^3",
        "a*inv(c)^2 - 7",
        "-a*c*a",
    ] {
        let x = eval_str(text, &t, &env).unwrap();
        let printed = t.fmt(&x);
        assert_eq!(eval_str(&printed, &t, &env).unwrap(), x, "{printed}");
    }
}

#[test]
fn presentation_of_tower_holds() {
    let t = jordan_plane();
    let p = Presentation::from_tower("R", &t);
    assert_eq!(p.relations.len(), 1);
    assert_eq!(p.relations[0].text, "a*c = c*a + c^2");
    let id = GeneratorMap::identity("id", p.clone(), &t).unwrap();
    let r = check_relations(&p, &id).unwrap();
    assert!(r.passed());
    let inv = check_involution(&id).unwrap();
    assert!(inv.passed());
}

#[test]
fn wrong_map_shows_residual() {
    let t = jordan_plane();
    let p = Presentation::new("R", &["c", "a"], &[], &["a*c - c*a - c^2"]).unwrap();
    let m = GeneratorMap::from_strs(
        "m",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &[("c", "2*c"), ("a", "a")],
        &Bindings::new(),
    )
    .unwrap();
    let r = check_relations(&p, &m).unwrap();
    assert!(!r.passed());
    assert_eq!(r.results[0].residual.as_deref(), Some("-2*c^2"));
    assert!(r.diagnostics().contains(&"residual: -2*c^2".to_string()));
    // scaling a relation does not change the verdict
    let p2 = Presentation::new("R", &["c", "a"], &[], &["-5*(a*c - c*a - c^2)"]).unwrap();
    let id = GeneratorMap::identity("id", p2.clone(), &t).unwrap();
    assert!(check_relations(&p2, &id).unwrap().passed());
}

#[test]
fn presentation_rejects_unknown_names() {
    assert!(matches!(
        Presentation::new("R", &["c", "a"], &[], &["a*x"]),
        Err(Error::UnboundName(_))
    ));
    let p = Presentation::new("R", &["c", "a"], &[("h", "c^2")], &["a*c = c*a + h"]).unwrap();
    let t = jordan_plane();
    let id = GeneratorMap::identity("id", p.clone(), &t).unwrap();
    assert!(check_relations(&p, &id).unwrap().passed());
}

#[test]
fn translation_automorphism_and_inverse() {
    // a -> a - c^3 - 1 on A_1 and its inverse
    let base = OreTower::new(&["c"], vec![]).unwrap();
    let spec = SkewVarSpec {
        name: "a".into(),
        sigma: vec![base.base_var(0)],
        delta: vec![base.one()],
        sigma_inv: None,
    };
    let t = base.extend(spec).unwrap();
    let p = Presentation::from_tower("A1", &t);
    let env = Bindings::new();
    let f = GeneratorMap::from_strs(
        "f",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &[("c", "c"), ("a", "a - (c^3 + 1)")],
        &env,
    )
    .unwrap();
    let g = GeneratorMap::from_strs(
        "g",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &[("c", "c"), ("a", "a + c^3 + 1")],
        &env,
    )
    .unwrap();
    assert!(check_relations(&p, &f).unwrap().passed());
    let r = check_mutually_inverse(&f, &g).unwrap();
    assert!(r.passed());
    assert!(!check_involution(&f).unwrap().passed());
    assert_eq!(check_mutually_inverse(&g, &f).unwrap().passed(), r.passed());
}
