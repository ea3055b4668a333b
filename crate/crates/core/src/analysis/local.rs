use num::{Integer, One, Signed, ToPrimitive};
use serde::Serialize;

use super::*;

/// `g = -(1/n) * sum m_i * f/p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalReductionCertificate {
    pub n: i64,
    pub m: Vec<i64>,
    #[serde(skip)]
    pub factors: Vec<MPoly>,
}

/// Checks that `factors` are pairwise distinct non-constant divisors of `f`
/// exhausting it up to a scalar.
fn check_factorization(f: &MPoly, factors: &[MPoly]) -> Result<()> {
    let mut rest = f.clone();
    for (i, p) in factors.iter().enumerate() {
        if p.is_constant() {
            return Err(Error::FactorizationMismatch(format!(
                "factor {p} is constant"
            )));
        }
        if factors[..i]
            .iter()
            .any(|q| q.monic().map(|x| x.1) == p.monic().map(|x| x.1))
        {
            return Err(Error::FactorizationMismatch(format!(
                "factor {p} listed twice"
            )));
        }
        let mut hit = false;
        while let Some(q) = rest.divide_exact(p) {
            rest = q;
            hit = true;
        }
        if !hit {
            return Err(Error::FactorizationMismatch(format!(
                "{p} does not divide {f}"
            )));
        }
    }
    if !rest.is_constant() {
        return Err(Error::FactorizationMismatch(format!(
            "{f} has the further factor {rest}"
        )));
    }
    Ok(())
}

/// Decides whether `g` is a local reduction of `f`, i.e. lies in the
/// rational span of the cofactors `f / p_i`, and returns integer data.
pub fn local_reduction(
    f: &MPoly,
    factors: &[MPoly],
    g: &MPoly,
) -> Result<Option<LocalReductionCertificate>> {
    if f.is_zero() {
        return Err(Error::FactorizationMismatch("f = 0".into()));
    }
    check_factorization(f, factors)?;
    if f.is_constant() {
        return Ok(g.is_zero().then(|| LocalReductionCertificate {
            n: 1,
            m: Vec::new(),
            factors: Vec::new(),
        }));
    }
    let cof: Vec<MPoly> = factors
        .iter()
        .map(|p| f.divide_exact(p).expect("checked"))
        .collect();
    let mut monos: Vec<Monomial> = cof
        .iter()
        .chain([g])
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monos.sort();
    monos.dedup();
    let a: Matrix = monos
        .iter()
        .map(|m| cof.iter().map(|p| p.coeff(m)).collect())
        .collect();
    let b: Vec<Rational> = monos.iter().map(|m| g.coeff(m)).collect();
    let Some(lambda) = crate::linalg::solve(&a, &b, cof.len()) else {
        return Ok(None);
    };
    let n = lambda
        .iter()
        .fold(num::BigInt::one(), |acc, l| acc.lcm(l.denom()));
    let m: Vec<num::BigInt> = lambda
        .iter()
        .map(|l| -(l * Rational::from_integer(n.clone())).to_integer())
        .collect();
    // g * n = -sum m_i f_i, re-verified exactly
    let mut rhs = MPoly::zero(f.vars());
    for (mi, p) in m.iter().zip(&cof) {
        rhs = &rhs - &p.scale(&Rational::from_integer(mi.clone()));
    }
    assert_eq!(
        rhs,
        g.scale(&Rational::from_integer(n.clone())),
        "local reduction certificate"
    );
    let to_i64 = |x: &num::BigInt| {
        x.to_i64()
            .ok_or_else(|| Error::invalid("certificate entries too large"))
    };
    let n = to_i64(&n.abs())?;
    let m = m.iter().map(to_i64).collect::<Result<Vec<_>>>()?;
    Ok(Some(LocalReductionCertificate {
        n,
        m,
        factors: factors.to_vec(),
    }))
}
