use super::*;
use crate::lang::{eval_str, Bindings, GeneratorMap, Presentation};
use crate::report::Verdict;
use crate::zoo::{from_spec_str, poly_in, AlgebraBundle};

fn b(spec: &str) -> AlgebraBundle {
    from_spec_str(spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

fn el(t: &OreTower, s: &str) -> Element {
    eval_str(s, t, &Bindings::new()).unwrap()
}

fn c_poly(s: &str) -> MPoly {
    poly_in(&["c"], s).unwrap()
}

#[test]
fn commutator_reports() {
    let rf = b("Rf(c^2)");
    let rep = centralizer_check(rf.tower(), &el(rf.tower(), "a"));
    assert!(!rep.passed());
    assert_eq!(rep.failures, vec![("c".to_string(), "c^2".to_string())]);
    let p = b("P(c^2, c)");
    let (v, t) = p.element("v").unwrap();
    assert!(centralizer_check(t, v).passed());
}

#[test]
fn bounded_centers() {
    let rf = b("Rf(c^2)");
    let cb = center_search(rf.tower(), 4, 4, DEFAULT_ANSATZ_LIMIT).unwrap();
    assert_eq!(cb.basis_text, vec!["1"]);

    let gf = b("Gf(c^2)");
    let cb = center_search(gf.tower(), 2, 3, DEFAULT_ANSATZ_LIMIT).unwrap();
    let (z, t) = gf.element("z").unwrap();
    assert!(
        same_span(t, &cb.basis, &[t.one(), z.clone()]),
        "{:?}",
        cb.basis_text
    );

    let mq = b("Mq2(2)");
    let cb = center_search(mq.tower(), 2, 2, DEFAULT_ANSATZ_LIMIT).unwrap();
    let t = mq.tower();
    assert!(
        same_span(t, &cb.basis, &[t.one(), el(t, "b*c - 2*a*d")]),
        "{:?}",
        cb.basis_text
    );

    let p = b("P(c^2, c)");
    let lt = &p.alternates["loc"].tower;
    let cb = center_search(lt, 3, 3, DEFAULT_ANSATZ_LIMIT).unwrap();
    let v = el(lt, "inv(c)*u");
    let powers: Vec<Element> = (0..4).map(|k| lt.pow(&v, k)).collect();
    assert!(same_span(lt, &cb.basis, &powers), "{:?}", cb.basis_text);
    for x in &cb.basis {
        assert!(lt.is_central(x));
    }
}

#[test]
fn center_search_is_monotone() {
    let p = b("P(c^2, c)");
    let lt = &p.alternates["loc"].tower;
    let small = center_search(lt, 1, 1, DEFAULT_ANSATZ_LIMIT).unwrap();
    let big = center_search(lt, 2, 2, DEFAULT_ANSATZ_LIMIT).unwrap();
    let both: Vec<Element> = small.basis.iter().chain(&big.basis).cloned().collect();
    assert_eq!(independent_subset(lt, &both).len(), big.basis.len());
    assert!(matches!(
        center_search(lt, 8, 8, 100),
        Err(Error::ResourceGuard { limit: 100, .. })
    ));
}

#[test]
fn normal_elements() {
    let p = b("P(c^2, c)");
    let t = p.tower();
    let cert = normality_cert_search(t, &el(t, "u"), 2)
        .unwrap()
        .expect("u is normal");
    assert!(cert.verify(t));
    let cof: Vec<(String, String)> = cert.cofactor_text.clone();
    assert_eq!(
        cof,
        vec![
            ("c".into(), "c".into()),
            ("u".into(), "u".into()),
            ("a".into(), "a + c".into())
        ]
    );
    assert!(normality_cert_search(t, &el(t, "a"), 3).unwrap().is_none());

    let gf = b("Gf(c^2)");
    let t = gf.tower();
    let cert = normality_cert_search(t, &el(t, "c"), 1)
        .unwrap()
        .expect("c is normal");
    assert!(cert.verify(t));
    let get = |g: &str| {
        cert.cofactors
            .iter()
            .find(|(n, _)| n == g)
            .unwrap()
            .1
            .clone()
    };
    assert_eq!(get("a"), el(t, "a + c"));
    assert_eq!(get("b"), el(t, "b + c + u + 2*a"));
    assert!(normality_cert_search(t, &el(t, "u"), 1).unwrap().is_some());
}

#[test]
fn inner_witnesses() {
    for spec in ["P(c^2, c)", "P(c^3, c^2)", "P(1, 0)"] {
        let p = b(spec);
        let t = &p.alternates["ispe"].tower;
        let rep = inner_der_check(t, "d", &el(t, "a")).unwrap();
        assert!(rep.passed(), "{spec}: {:?}", rep.diagnostics());
    }
    let gf = b("Gf(c^2)");
    let lt = &gf.alternates["loc"].tower;
    assert!(inner_auto_check(lt, "b", &el(lt, "c")).unwrap().passed());

    let p = b("P(c^2, c)");
    let t = p.alternates["pres1"]
        .tower
        .localized(&[c_poly("c")])
        .unwrap();
    let rep = inner_auto_check(&t, "u", &el(&t, "c")).unwrap();
    assert!(!rep.passed());
    assert_eq!(rep.mismatches[0].generator, "a");
    assert_eq!(rep.mismatches[0].got, "a + c");
    assert!(matches!(
        inner_auto_check(p.tower(), "a", &el(p.tower(), "a")),
        Err(Error::NotInvertible(_))
    ));
}

#[test]
fn local_reduction_agrees_with_inner_powers() {
    let cases = [
        ("c^2", "c", true),
        ("c^2", "1", false),
        ("c^3", "c^2", true),
        ("c^3", "c", false),
    ];
    for (f, g, expected) in cases {
        let (fp, gp) = (c_poly(f), c_poly(g));
        let factors = crate::exactnum::rational_factors(&fp);
        let cert = local_reduction(&fp, &factors, &gp).unwrap();
        assert_eq!(cert.is_some(), expected, "({f}, {g})");
        let p = b(&format!("P({f}, {g})"));
        let t = p.alternates["pres1"].tower.localized(&factors).unwrap();
        let scan = inner_power_scan(&t, "u", 4, 4).unwrap();
        assert_eq!(scan.witness.is_some(), expected, "({f}, {g})");
        if let (Some(c), Some(w)) = (cert, scan.witness) {
            assert_eq!(w.n as i64, c.n);
            assert_eq!(w.exponents, c.m);
        }
    }
    let c2 = local_reduction(&c_poly("c^2"), &[c_poly("c")], &c_poly("c"))
        .unwrap()
        .unwrap();
    assert_eq!((c2.n, c2.m), (1, vec![-1]));
    let one = c_poly("1");
    assert!(local_reduction(&one, &[], &c_poly("0")).unwrap().is_some());
    assert!(local_reduction(&one, &[], &c_poly("c")).unwrap().is_none());
    assert!(matches!(
        local_reduction(&c_poly("c^2 + c"), &[c_poly("c")], &c_poly("c")),
        Err(Error::FactorizationMismatch(_))
    ));
    // g = 1/2 f_1 needs n = 2
    let h = local_reduction(
        &c_poly("c^2 + c"),
        &[c_poly("c"), c_poly("c + 1")],
        &c_poly("1/2*c + 1/2"),
    )
    .unwrap()
    .unwrap();
    assert_eq!((h.n, h.m), (2, vec![-1, 0]));

    let p = b("P(1, 0)");
    let scan = inner_power_scan(&p.alternates["pres1"].tower, "u", 2, 4).unwrap();
    let w = scan.witness.unwrap();
    assert_eq!((w.n, w.eta.as_str()), (1, "1"));
}

type QuotientCase<'a> = (
    &'a str,
    OreTower,
    Presentation,
    [(&'a str, &'a str); 3],
    Vec<(&'a str, &'a str)>,
);

#[test]
fn quotients_of_p() {
    let p = b("P(c^2, c)");
    let t = p.tower().clone();
    let rf = b("Rf(c^2)");
    let rt = rf.tower().clone();
    let env = Bindings::new();
    let kau = OreTower::new(&["a", "u"], vec![]).unwrap();
    let kau_pres = Presentation::new("k[a,u]", &["a", "u"], &[], &["a*u = u*a"]).unwrap();
    let cases: [QuotientCase; 3] = [
        (
            "u",
            rt.clone(),
            rf.presentation().clone(),
            [("c", "c"), ("u", "0"), ("a", "a")],
            vec![("c", "c"), ("a", "a")],
        ),
        (
            "c",
            kau.clone(),
            kau_pres,
            [("c", "0"), ("u", "u"), ("a", "a")],
            vec![("a", "a"), ("u", "u")],
        ),
        (
            "u - c",
            rt.clone(),
            rf.presentation().clone(),
            [("c", "c"), ("u", "c"), ("a", "a")],
            vec![("c", "c"), ("a", "a")],
        ),
    ];
    for (ideal, q, qp, fwd, bwd) in cases {
        let x = el(&t, ideal);
        let forward = GeneratorMap::from_strs(
            "pi",
            p.presentation().clone(),
            Some(t.clone()),
            q.clone(),
            &fwd,
            &env,
        )
        .unwrap();
        let backward = GeneratorMap::from_strs("s", qp, Some(q), t.clone(), &bwd, &env).unwrap();
        let rep = quotient_check(&t, &[x], &forward, &backward, None).unwrap();
        assert!(rep.passed(), "ideal ({ideal}): {:?}", rep.diagnostics());
    }
    // a is not normal, so it cannot define a quotient this way
    let forward = GeneratorMap::from_strs(
        "pi",
        p.presentation().clone(),
        Some(t.clone()),
        rt.clone(),
        &[("c", "c"), ("u", "0"), ("a", "0")],
        &env,
    )
    .unwrap();
    let backward = GeneratorMap::from_strs(
        "s",
        rf.presentation().clone(),
        Some(rt),
        t.clone(),
        &[("c", "c"), ("a", "a")],
        &env,
    )
    .unwrap();
    assert!(matches!(
        quotient_check(&t, &[el(&t, "a")], &forward, &backward, None),
        Err(Error::MissingNormalityCertificate(_))
    ));
}

#[test]
fn automorphism_instances() {
    let env = Bindings::new();
    let p = b("P(c^2, c)");
    let t = p.tower();
    let m = GeneratorMap::from_strs(
        "pi",
        p.presentation().clone(),
        Some(t.clone()),
        t.clone(),
        &[("a", "2*a"), ("c", "2*c"), ("u", "3*u + 5*c")],
        &env,
    )
    .unwrap();
    let g = el(t, "c");
    let rep = automorphism_instance(&m, Some((&g, &crate::exactnum::rat(2)))).unwrap();
    assert!(rep.passed(), "{:?}", rep.diagnostics());
    let bad = automorphism_instance(&m, Some((&g, &crate::exactnum::rat(3)))).unwrap();
    assert!(!bad.passed());

    let rf = b("Rf(c^2)");
    let m = GeneratorMap::from_strs(
        "pi",
        rf.presentation().clone(),
        Some(rf.tower().clone()),
        rf.tower().clone(),
        &[("a", "a - c"), ("c", "c")],
        &env,
    )
    .unwrap();
    assert!(automorphism_instance(&m, None).unwrap().passed());

    let w = b("Rf(1)");
    let m = GeneratorMap::from_strs(
        "pi",
        w.presentation().clone(),
        Some(w.tower().clone()),
        w.tower().clone(),
        &[("a", "a - (c^3 + 1)"), ("c", "c")],
        &env,
    )
    .unwrap();
    assert!(automorphism_instance(&m, None).unwrap().passed());
    let m = GeneratorMap::from_strs(
        "pi",
        w.presentation().clone(),
        Some(w.tower().clone()),
        w.tower().clone(),
        &[("a", "2*a"), ("c", "c")],
        &env,
    )
    .unwrap();
    assert!(!automorphism_instance(&m, None).unwrap().passed());
}

#[test]
fn growth_degrees() {
    for spec in ["P(c^2, c)", "P(c^3, c^2)", "P(1, 0)"] {
        assert_eq!(
            b(spec).tower().monomial_count(10, None).unwrap().degree,
            3,
            "{spec}"
        );
    }
    for spec in ["Gf(c^2)", "Gf(c^3)"] {
        assert_eq!(
            b(spec).tower().monomial_count(8, None).unwrap().degree,
            4,
            "{spec}"
        );
    }
}
