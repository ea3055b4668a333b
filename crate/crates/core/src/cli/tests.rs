use super::*;

fn run(text: &str) -> Report {
    run_task(
        "t",
        text,
        &Options {
            threads: 2,
            ..Options::default()
        },
    )
    .unwrap_or_else(|e| panic!("{e}"))
}

fn run_err(text: &str) -> TaskError {
    run_task("t", text, &Options::default()).expect_err("should not parse")
}

#[test]
fn central_element_of_gf() {
    let r = run("zoo A = Gf(c^2)\ncheck central A.z in A\n");
    assert_eq!(
        r.render_plain(),
        "1..1\nok 1 - central A.z\n# passed 1 / failed 0 / errored 0\n"
    );
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn involution_on_undeclared_constructor() {
    let r = run("check involution tau on MJ2");
    assert_eq!(r.checks[0].status, Status::Pass);
    assert_eq!(r.checks[0].name, "involution tau on MJ2");
}

#[test]
fn wrong_relation_reports_residual() {
    let r = run("zoo R = Rf(c^2)\ncheck relations R with a*c = c*a\ncheck relations R\n");
    let text = r.render_plain();
    assert!(
        text.contains(
            "not ok 1 - relations R with a*c = c*a\n#   relation: a*c = c*a\n#   residual: c^2\n"
        ),
        "{text}"
    );
    assert!(text.contains("ok 2 - relations R\n"));
    assert!(text.ends_with("# passed 1 / failed 1 / errored 0\n"));
    assert_eq!(r.exit_code(), 1);
}

#[test]
fn errors_carry_locations() {
    let e = run_err("zoo A = Gf(c^2)\n\ncheck central A.w in A\n");
    assert_eq!(e.line, 3);
    assert!(e.message.contains("A.w"), "{}", e.message);
    assert!(e.to_string().starts_with("t:3: error:"));
    assert_eq!(run_err("zoo A = Gf(c)").line, 1);
    assert_eq!(run_err("zoo A = MJ2\nzoo A = MJ2").line, 2);
    assert_eq!(run_err("check frobnicate A").line, 1);
    assert_eq!(run_err("zoo A = MJ2\ncheck growth A [n=x]").line, 2);
    assert_eq!(run_err("zoo A = MJ2\ncheck growth A [bogus=1]").line, 2);
    assert!(run_suite("paper-nope", &Options::default()).is_err());
}

#[test]
fn runtime_errors_are_counted() {
    // a is not a unit, so the conjugation check cannot run
    let r = run("zoo P = P(c^2, c)\ncheck inner-auto a by a in P\n");
    assert_eq!(r.checks[0].status, Status::Error);
    assert_eq!(r.exit_code(), 2);
    assert!(r
        .render_plain()
        .contains("not ok 1 - inner-auto a by a # ERROR\n"));
}

#[test]
fn user_towers() {
    let text = "\
base c u
poly f = c^2
tower W = a(delta c=f, u=u)
check tower-wellformed W [samples=10]
elem x = a*c in W
check central x in W
tower T = a(delta c=1), b(sigma a=c*a)
check tower-wellformed T [samples=0]
";
    let r = run(text);
    assert_eq!(r.checks[0].status, Status::Pass, "{:?}", r.checks[0]);
    assert_eq!(r.checks[1].status, Status::Fail);
    assert!(
        r.checks[1]
            .witness
            .iter()
            .any(|w| w == "residual: [c*a + c^2, c] = c^3"),
        "{:?}",
        r.checks[1].witness
    );
    assert_eq!(r.checks[2].status, Status::Fail);
    assert!(
        r.checks[2].witness[0].contains("residual: c - 1"),
        "{:?}",
        r.checks[2].witness
    );
}

#[test]
fn parameters_and_maps() {
    let text = "\
param q invertible
tower Q = y, x(sigma y=q*y; sigmainv y=inv(q)*y)
check tower-wellformed Q [samples=5]
map s : Q -> Q with x=y, y=x
check relations s
map t : Q -> Q with x=q*x
check relations t
";
    let r = run(text);
    let st: Vec<Status> = r.checks.iter().map(|c| c.status).collect();
    assert_eq!(st, vec![Status::Pass, Status::Fail, Status::Pass]);
}

#[test]
fn structured_report() {
    let r = run("zoo R = Rf(c^2)\ncheck relations R with a*c = c*a\n");
    let v: serde_json::Value = serde_json::from_str(&r.render_structured()).unwrap();
    assert_eq!(v["checks"][0]["status"], "FAIL");
    assert_eq!(v["checks"][0]["line"], 2);
    assert_eq!(v["summary"]["failed"], 1);
}

#[test]
fn quick_suite_is_deterministic() {
    let opts = Options {
        threads: 3,
        ..Options::default()
    };
    let a = run_suite("paper-quick", &opts).unwrap();
    let b = run_suite("paper-quick", &Options { threads: 1, ..opts }).unwrap();
    assert_eq!(a.render_plain(), b.render_plain());
    assert_eq!(a.exit_code(), 0, "{}", a.render_plain());
}

#[test]
fn bounds_flag() {
    let mut o = Options::default();
    o.set_bounds("skew=3,coeff=1").unwrap();
    assert_eq!((o.skew_bound, o.coeff_bound), (3, 1));
    assert!(o.set_bounds("deg=2").is_err());
    assert!(o.set_bounds("skew=x").is_err());
}
