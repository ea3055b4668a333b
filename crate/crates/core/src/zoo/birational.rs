//! Mutually inverse maps between localizations of the Jordanian-type algebras
//! and Weyl algebras over polynomial rings.

use super::*;
use crate::exactnum::rational_factors;
use crate::lang::{extend_with, Bindings};

/// A pair of maps claimed to be mutually inverse.
#[derive(Clone, Debug)]
pub struct BirationalPair {
    pub name: String,
    pub forward: GeneratorMap,
    pub backward: GeneratorMap,
    /// Presentation the forward map is checked against.
    pub source_presentation: Presentation,
}

/// `A_1(k[vars])` on `x, y` with `x*y = y*x + 1`, localized at `dens` (polynomials in the base).
pub fn weyl_over(vars: &[&str], dens: &[&str]) -> Result<OreTower> {
    let mut all: Vec<&str> = vars.to_vec();
    all.push("y");
    let base = OreTower::new(&all, vec![])?;
    let t = extend_with(&base, "x", &[], &[("y", "1")], None, &Bindings::new())?;
    let dens = dens
        .iter()
        .map(|d| poly_in(&all, d))
        .collect::<Result<Vec<_>>>()?;
    t.localized(
        &dens
            .iter()
            .flat_map(|d| factors_of_univariate(d, &all))
            .collect::<Vec<_>>(),
    )
}

/// Rational factors of a polynomial in the last variable `y` of `all`.
fn factors_of_univariate(d: &MPoly, all: &[&str]) -> Vec<MPoly> {
    let y = all.len() - 1;
    let vy = crate::exactnum::vars(&["y"]);
    let map: Vec<usize> = (0..all.len())
        .map(|i| if i == y { 0 } else { usize::MAX })
        .collect();
    let dy = d.relabel(&vy, &map);
    let back: Vec<usize> = vec![y];
    let target = crate::exactnum::vars(all);
    rational_factors(&dy)
        .iter()
        .map(|p| p.relabel(&target, &back))
        .collect()
}

/// `G_f` with the factors of `f` inverted is isomorphic to `A_1(k[s,t])` with
/// the factors of `f(y)` inverted:
/// `c -> y`, `u -> y t`, `a -> x f(y)`, `b -> g(y)^-1 (s + (x f(y))^2 - (g(y) - y t) x f(y))`,
/// and back `x -> a f^-1`, `y -> c`, `t -> c^-1 u`, `s -> z`.
pub fn gjma_weyl_maps(f: &MPoly) -> Result<BirationalPair> {
    weyl_pair(&make_gf(f)?, f)
}

/// The pair for an already built `G_f`.
pub(crate) fn weyl_pair(gf: &AlgebraBundle, f: &MPoly) -> Result<BirationalPair> {
    let f = lift(f, &base_c())?;
    let g = f
        .divide_exact(&MPoly::var(f.vars(), 0))
        .expect("checked by make_gf");
    let (fy, gy) = (f.to_string_with(&["y"]), g.to_string_with(&["y"]));
    let (fc, gc) = (f.to_string(), g.to_string());
    let src = gf.alternates["loc"].tower.clone();
    let weyl = weyl_over(&["s", "t"], &[&fy])?;
    let env = Bindings::new();
    let forward = GeneratorMap::from_strs(
        "Phi",
        gf.presentation().clone(),
        Some(src.clone()),
        weyl.clone(),
        &[
            ("c", "y"),
            ("u", "y*t"),
            ("a", &format!("x*({fy})")),
            (
                "b",
                &format!("inv({gy})*(s + (x*({fy}))^2 - (({gy}) - y*t)*x*({fy}))"),
            ),
        ],
        &env,
    )?;
    let wp = Presentation::from_tower("A1(k[s,t])", &weyl);
    let backward = GeneratorMap::from_strs(
        "Psi",
        wp,
        Some(weyl),
        src,
        &[
            ("s", &format!("({gc})*b + (({gc}) - u)*a - a^2")),
            ("t", "inv(c)*u"),
            ("y", "c"),
            ("x", &format!("a*inv({fc})")),
        ],
        &env,
    )?;
    Ok(BirationalPair {
        name: gf.name.clone(),
        source_presentation: gf.presentation().clone(),
        forward,
        backward,
    })
}

/// The involutive extension of `k[r]` with `a*r = r*a + r`, `d*r = r*d + r`,
/// `d*a = (a - 1)*d + a`, birational to `A_1(k[t])`:
/// `r -> y`, `a -> x y`, `d -> y t + x y` and back `x -> a r^-1`, `y -> r`, `t -> r^-1 (d - a)`.
pub fn ispe_weyl_example() -> Result<(AlgebraBundle, BirationalPair)> {
    let env = Bindings::new();
    let base = OreTower::new(&["r"], vec![])?;
    let a = extend_with(&base, "a", &[], &[("r", "r")], None, &env)?;
    let t = extend_with(
        &a,
        "d",
        &[("a", "a - 1")],
        &[("r", "r"), ("a", "a")],
        Some(&[("a", "a + 1")]),
        &env,
    )?;
    let p = Presentation::new(
        "S",
        &["r", "a", "d"],
        &[],
        &["a*r = r*a + r", "d*r = r*d + r", "d*a = (a - 1)*d + a"],
    )?;
    let tau = GeneratorMap::from_strs(
        "tau",
        p.clone(),
        Some(t.clone()),
        t.clone(),
        &[("r", "r"), ("a", "d"), ("d", "a")],
        &env,
    )?;
    let lt = t.localized(&[MPoly::var(t.base_vars(), 0)])?;
    let mut bundle = AlgebraBundle::new(
        "S",
        form(t, p.clone(), Some(tau))?,
        "involutive extension of k[r] birational to A_1(k[t])",
    );
    bundle.name_elem("u", families::eval_in(bundle.tower(), "d - a")?, None);
    bundle.alternates.insert(
        "loc".into(),
        Form {
            tower: lt.clone(),
            presentation: Presentation::from_tower("S.loc", &lt),
            tau: None,
        },
    );

    let weyl = weyl_over(&["t"], &["y"])?;
    let forward = GeneratorMap::from_strs(
        "Phi",
        p.clone(),
        Some(lt.clone()),
        weyl.clone(),
        &[("r", "y"), ("a", "x*y"), ("d", "y*t + x*y")],
        &env,
    )?;
    let wp = Presentation::from_tower("A1(k[t])", &weyl);
    let backward = GeneratorMap::from_strs(
        "Psi",
        wp,
        Some(weyl),
        lt,
        &[("t", "inv(r)*(d - a)"), ("y", "r"), ("x", "a*inv(r)")],
        &env,
    )?;
    let pair = BirationalPair {
        name: "S".into(),
        source_presentation: p,
        forward,
        backward,
    };
    attach(&mut bundle, &pair);
    Ok((bundle, pair))
}

/// Records the pair in the bundle as `to_weyl` / `from_weyl`, with the Weyl algebra as form `weyl`.
pub(crate) fn attach(bundle: &mut AlgebraBundle, pair: &BirationalPair) {
    let w = &pair.backward;
    bundle.alternates.insert(
        "weyl".into(),
        Form {
            tower: w.source_tower.clone().expect("built from a tower"),
            presentation: w.source.clone(),
            tau: None,
        },
    );
    bundle.maps.insert("to_weyl".into(), pair.forward.clone());
    bundle
        .maps
        .insert("from_weyl".into(), pair.backward.clone());
}
