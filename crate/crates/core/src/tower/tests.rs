use super::*;
use crate::exactnum::{rat, vars};

fn c_poly(tower: &OreTower, coeffs: &[i64]) -> Element {
    // coeffs[i] is the coefficient of c^i
    let v = tower.base_vars().clone();
    let c = MPoly::var(&v, 0);
    let mut p = MPoly::zero(&v);
    for (i, &k) in coeffs.iter().enumerate() {
        p = &p + &c.pow(i as u32).scale(&rat(k));
    }
    tower.poly(p)
}

/// `k[c][a; d/dc * f]`
fn rf(coeffs: &[i64]) -> OreTower {
    let base = OreTower::new(&["c"], vec![]).unwrap();
    let f = c_poly(&base, coeffs);
    base.extend(SkewVarSpec {
        name: "a".into(),
        sigma: vec![base.base_var(0)],
        delta: vec![f],
        sigma_inv: None,
    })
    .unwrap()
}

/// Two-step presentation of P(c^2, c) with the second variable `d = u + a`.
fn ispe_p() -> OreTower {
    let t = rf(&[0, 0, 1]);
    let (c, a) = (t.base_var(0), t.skew_var(0));
    let c2 = t.mul(&c, &c);
    let spec = SkewVarSpec {
        name: "d".into(),
        sigma: vec![c.clone(), a.sub(&c)],
        delta: vec![c2, t.mul(&c, &a)],
        sigma_inv: Some(vec![c.clone(), a.add(&c)]),
    };
    t.extend(spec).unwrap()
}

/// `k[c,u][a; D]` with `D = c^2 d/dc + c u d/du`, optionally localized at `c`.
fn p2(localize: bool) -> OreTower {
    let v = vars(&["c", "u"]);
    let gens = if localize {
        vec![MPoly::var(&v, 0)]
    } else {
        vec![]
    };
    let base = OreTower::new(&["c", "u"], gens).unwrap();
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
fn jordan_plane_relation() {
    let t = rf(&[0, 0, 1]);
    let (c, a) = (t.base_var(0), t.skew_var(0));
    assert_eq!(t.fmt(&t.mul(&a, &c)), "c*a + c^2");
    let c3 = t.pow(&c, 3);
    assert_eq!(t.fmt(&t.mul(&a, &c3)), "c^3*a + 3*c^4");
}

#[test]
fn a_times_power_of_c() {
    for coeffs in [&[0, 1][..], &[0, 0, 1], &[0, 0, 0, 1], &[0, 1, 1]] {
        let t = rf(coeffs);
        let (c, a) = (t.base_var(0), t.skew_var(0));
        let f = c_poly(&t, coeffs);
        for n in 1..=10u32 {
            let cn = t.pow(&c, n);
            let lhs = t.mul(&a, &cn).sub(&t.mul(&cn, &a));
            let rhs = t.mul(&f, &t.pow(&c, n - 1)).scale(&rat(n as i64));
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}

#[test]
fn sigma_and_delta_below_cut() {
    let t = ispe_p();
    let (c, a) = (t.base_var(0), t.skew_var(0));
    let c5 = t.pow(&c, 5);
    assert_eq!(t.apply_sigma(1, &c5).unwrap(), c5);
    assert!(t.apply_delta(1, &t.one()).unwrap().is_zero());
    // delta(a^2) = sigma(a) delta(a) + delta(a) a = (a - c) c a + c a^2 = 2 c a^2
    let a2 = t.mul(&a, &a);
    assert_eq!(t.fmt(&t.apply_delta(1, &a2).unwrap()), "2*c*a^2");
    let d = t.skew_var(1);
    assert!(matches!(
        t.apply_sigma(1, &d),
        Err(Error::VariableAboveCut { .. })
    ));
    assert!(matches!(
        t.apply_delta(0, &a),
        Err(Error::VariableAboveCut { .. })
    ));
}

#[test]
fn ispe_tower_is_well_formed() {
    let t = ispe_p();
    let r = t.check_well_formed();
    assert!(r.passed(), "{:?}", r.failures);
    assert!(r.checked > 0);
}

#[test]
fn broken_delta_is_reported() {
    // delta_2(a) = a is not compatible with a*c = c*a + c^2
    let t = rf(&[0, 0, 1]);
    let (c, a) = (t.base_var(0), t.skew_var(0));
    let spec = SkewVarSpec {
        name: "d".into(),
        sigma: vec![c.clone(), a.clone()],
        delta: vec![t.zero(), a],
        sigma_inv: None,
    };
    let t = t.extend(spec).unwrap();
    let r = t.check_well_formed();
    assert!(!r.passed());
    assert_eq!(r.failures[0].check, "delta respects relation");
    assert_eq!(r.failures[0].residual, "c^2");
}

#[test]
fn v_commutes_with_a_in_localization() {
    let t = p2(true);
    let v = t.mul(&t.gen_inverse(0), &t.base_var(1));
    assert_eq!(t.fmt(&v), "u*inv(c)");
    assert!(t.commutator(&t.skew_var(0), &v).is_zero());
    assert!(t.is_central(&v));
    // but c^-1 alone does not commute with a
    assert!(!t.commutator(&t.skew_var(0), &t.gen_inverse(0)).is_zero());
}

#[test]
fn clear_denominators_examples() {
    let t = p2(true);
    let v = t.mul(&t.gen_inverse(0), &t.base_var(1));
    let (d, cleared) = t.clear_denominators(&v);
    assert_eq!(d.to_string(), "c");
    assert_eq!(t.fmt(&cleared), "u");
    let a = t.skew_var(0);
    let (d, cleared) = t.clear_denominators(&a);
    assert!(d.is_one());
    assert_eq!(cleared, a);
}

#[test]
fn growth_counts() {
    let t = OreTower::new(&["c"], vec![]).unwrap();
    let g = t.monomial_count(3, None).unwrap();
    assert_eq!(g.counts, vec![1, 2, 3, 4]);
    assert_eq!(g.degree, 1);
    let g = p2(false).monomial_count(8, None).unwrap();
    assert_eq!(g.counts[8], 165);
    assert_eq!(g.degree, 3);
    assert_eq!(
        p2(true).monomial_count(3, None),
        Err(Error::LocalizedTowerUnsupported)
    );
}

#[test]
fn substitution_and_localization() {
    let t = p2(false);
    let lt = t.localized(&[MPoly::var(t.base_vars(), 0)]).unwrap();
    let a = lt.import(&t.skew_var(0)).unwrap();
    let c = lt.base_var(0);
    // c^-1 a c = a + c
    let conj = lt.mul_all([&lt.gen_inverse(0), &a, &c]);
    assert_eq!(lt.fmt(&conj), "a + c");
    // swapping c and u is not an endomorphism, but substitution is still defined
    let img = t
        .substitute(
            &t.mul(&t.base_var(0), &t.skew_var(0)),
            &[t.base_var(1), t.base_var(0), t.skew_var(0)],
        )
        .unwrap();
    assert_eq!(t.fmt(&img), "u*a");
}
