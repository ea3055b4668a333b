//! Exact arithmetic: rationals, commutative polynomials, restricted fractions
//! and maps on the coefficient ring.

pub mod coeffmap;
pub mod frac;
pub mod mpoly;

pub use coeffmap::{CoeffMapKind, CoeffMapSpec};
pub use frac::{DenMonoid, Frac};
pub use mpoly::{vars, MPoly, Monomial, Vars};

/// Arbitrary-precision rational number; always kept in lowest terms.
pub type Rational = num::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Exact quotient of `p` by `q`, or `None` when `q` does not divide `p`.
pub fn poly_divide_check(p: &MPoly, q: &MPoly) -> Option<MPoly> {
    if q.is_zero() {
        return None;
    }
    p.divide_exact(q)
}

/// Distinct rational linear factors of a univariate polynomial plus the
/// remaining cofactor (returned only when it is non-constant).
pub fn rational_factors(f: &MPoly) -> Vec<MPoly> {
    use num::{Integer, One, Signed, Zero};
    assert_eq!(
        f.nvars(),
        1,
        "rational_factors expects a univariate polynomial"
    );
    let vars = f.vars().clone();
    let x = MPoly::var(&vars, 0);
    let mut rest = f.clone();
    let mut out = Vec::new();
    if rest.is_zero() {
        return out;
    }
    while let Some(q) = rest.divide_exact(&x) {
        if !out.contains(&x) {
            out.push(x.clone());
        }
        rest = q;
    }
    // clear denominators to get integer coefficients
    let lcm = rest
        .terms()
        .fold(num::BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let ints: Vec<(u32, num::BigInt)> = rest
        .terms()
        .map(|(m, c)| {
            (
                m.0[0],
                (c * Rational::from_integer(lcm.clone())).to_integer(),
            )
        })
        .collect();
    let lead = ints
        .iter()
        .max_by_key(|(e, _)| *e)
        .map(|(_, c)| c.abs())
        .unwrap_or_default();
    let constant = ints
        .iter()
        .find(|(e, _)| *e == 0)
        .map(|(_, c)| c.abs())
        .unwrap_or_default();
    let divisors = |n: &num::BigInt| -> Vec<num::BigInt> {
        let mut d = Vec::new();
        let mut i = num::BigInt::one();
        while &i * &i <= *n {
            if (n % &i).is_zero() {
                d.push(i.clone());
                d.push(n / &i);
            }
            i += 1;
        }
        d
    };
    if !constant.is_zero() {
        for p in divisors(&constant) {
            for q in divisors(&lead) {
                for sign in [1i64, -1] {
                    let root = Rational::new(&p * sign, q.clone());
                    let lin = &x - &MPoly::constant(&vars, root);
                    if out.contains(&lin) {
                        continue;
                    }
                    let mut hit = false;
                    while let Some(qq) = rest.divide_exact(&lin) {
                        rest = qq;
                        hit = true;
                    }
                    if hit {
                        out.push(lin);
                    }
                }
            }
        }
    }
    if !rest.is_constant() {
        out.push(rest.monic().unwrap().1);
    }
    out
}
