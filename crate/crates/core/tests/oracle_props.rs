//! Property tests: the tower engine against the word-rewriting oracle on
//! random words written in arbitrary letter order.

mod common;

use common::{systems, WordAlgebra};
use oretower::lang::{eval_str, Bindings};
use oretower::tower::OreTower;
use oretower::zoo::from_spec_str;
use proptest::prelude::*;

struct Case {
    alg: WordAlgebra,
    tower: OreTower,
    /// Engine spelling of each oracle letter.
    spelling: Vec<&'static str>,
    inverse_letters: Vec<&'static str>,
}

fn case(name: &str) -> Case {
    let main = |spec: &str| from_spec_str(spec).unwrap().tower().clone();
    match name {
        "rf" => Case {
            alg: systems::rf_c2(),
            tower: main("Rf(c^2)"),
            spelling: vec!["c", "a"],
            inverse_letters: vec![],
        },
        "mq" => Case {
            alg: systems::mq2("3", "1/3"),
            tower: main("Mq2(3)"),
            spelling: vec!["c", "a", "d", "b"],
            inverse_letters: vec![],
        },
        "mj" => Case {
            alg: systems::mj2(),
            tower: main("MJ2"),
            spelling: vec!["c", "a", "d", "b"],
            inverse_letters: vec![],
        },
        "gf" => Case {
            alg: systems::g_c2(),
            tower: main("Gf(c^2)"),
            spelling: vec!["c", "u", "a", "b"],
            inverse_letters: vec![],
        },
        "ploc" => Case {
            alg: systems::p_c2_c_loc(),
            tower: from_spec_str("P(c^2, c)").unwrap().alternates["loc"]
                .tower
                .clone(),
            spelling: vec!["inv(c)", "c", "u", "a"],
            inverse_letters: vec!["C"],
        },
        _ => unreachable!(),
    }
}

type Terms = Vec<(i8, Vec<usize>)>;

fn terms(letters: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((-4i8..=4, prop::collection::vec(0..letters, 0..5)), 1..4)
}

fn spell(t: &Terms, names: &[&str]) -> String {
    t.iter()
        .map(|(c, w)| {
            let mut parts = vec![format!("({c})")];
            parts.extend(w.iter().map(|&i| names[i].to_string()));
            parts.join("*")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn agree(name: &str, x: &Terms, y: &Terms) -> Result<(), TestCaseError> {
    let k = case(name);
    let env = Bindings::new();
    let letters: Vec<&str> = k.alg.letters.iter().map(String::as_str).collect();
    let ex = eval_str(&spell(x, &k.spelling), &k.tower, &env).unwrap();
    let ey = eval_str(&spell(y, &k.spelling), &k.tower, &env).unwrap();
    let (ox, oy) = (
        k.alg.parse(&spell(x, &letters)),
        k.alg.parse(&spell(y, &letters)),
    );
    // normal forms of the same text agree
    prop_assert_eq!(k.alg.poly_of(&k.tower, &ex, &k.inverse_letters), ox.clone());
    // so do products
    let prod = k.tower.mul(&ex, &ey);
    prop_assert_eq!(
        k.alg.poly_of(&k.tower, &prod, &k.inverse_letters),
        k.alg.mul(&ox, &oy)
    );
    // distributivity and commutators on the engine side
    let sum = ex.add(&ey);
    let lhs = k.tower.mul(&sum, &ex);
    let rhs = k.tower.mul(&ex, &ex).add(&k.tower.mul(&ey, &ex));
    prop_assert_eq!(lhs, rhs);
    let c = k.tower.commutator(&ex, &ey);
    prop_assert_eq!(c.add(&k.tower.commutator(&ey, &ex)), k.tower.zero());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rf_matches_oracle(x in terms(2), y in terms(2)) {
        agree("rf", &x, &y)?;
    }

    #[test]
    fn mq_matches_oracle(x in terms(4), y in terms(4)) {
        agree("mq", &x, &y)?;
    }

    #[test]
    fn mj_matches_oracle(x in terms(4), y in terms(4)) {
        agree("mj", &x, &y)?;
    }

    #[test]
    fn gf_matches_oracle(x in terms(4), y in terms(4)) {
        agree("gf", &x, &y)?;
    }

    #[test]
    fn localized_p_matches_oracle(x in terms(4), y in terms(4)) {
        agree("ploc", &x, &y)?;
    }
}
