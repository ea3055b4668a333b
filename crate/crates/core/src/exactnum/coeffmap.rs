//! Endomorphisms and (twisted) derivations of the commutative coefficient ring,
//! specified by their values on the base variables.

use std::sync::Arc;

use super::frac::{DenMonoid, Frac};
use super::mpoly::MPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffMapKind {
    Endomorphism,
    Derivation,
}

#[derive(Clone, Debug)]
pub struct CoeffMapSpec {
    kind: CoeffMapKind,
    images: Vec<Frac>,
    /// Twisting endomorphism of a derivation; `None` means the identity.
    companion: Option<Box<CoeffMapSpec>>,
    monoid: Arc<DenMonoid>,
}

impl CoeffMapSpec {
    pub fn endomorphism(images: Vec<Frac>, monoid: &Arc<DenMonoid>) -> Result<Self> {
        let spec = Self::raw(CoeffMapKind::Endomorphism, images, None, monoid)?;
        for g in monoid.gens() {
            let img = spec.apply_poly(g);
            if !img.is_unit() {
                return Err(Error::DenominatorNotInMonoid(img.to_string()));
            }
        }
        Ok(spec)
    }

    pub fn identity(monoid: &Arc<DenMonoid>) -> Self {
        let vars = monoid.vars().clone();
        let images = (0..vars.len())
            .map(|i| Frac::from_poly(MPoly::var(&vars, i), monoid))
            .collect();
        CoeffMapSpec {
            kind: CoeffMapKind::Endomorphism,
            images,
            companion: None,
            monoid: monoid.clone(),
        }
    }

    /// A derivation twisted by `companion` (`None` for an ordinary derivation).
    pub fn derivation(
        images: Vec<Frac>,
        companion: Option<CoeffMapSpec>,
        monoid: &Arc<DenMonoid>,
    ) -> Result<Self> {
        if let Some(c) = &companion {
            if c.kind != CoeffMapKind::Endomorphism {
                return Err(Error::invalid(
                    "companion of a derivation must be an endomorphism",
                ));
            }
        }
        Self::raw(
            CoeffMapKind::Derivation,
            images,
            companion.map(Box::new),
            monoid,
        )
    }

    fn raw(
        kind: CoeffMapKind,
        images: Vec<Frac>,
        companion: Option<Box<CoeffMapSpec>>,
        monoid: &Arc<DenMonoid>,
    ) -> Result<Self> {
        if images.len() != monoid.vars().len() {
            return Err(Error::invalid("one image per base variable is required"));
        }
        Ok(CoeffMapSpec {
            kind,
            images,
            companion,
            monoid: monoid.clone(),
        })
    }

    pub fn kind(&self) -> &CoeffMapKind {
        &self.kind
    }

    pub fn images(&self) -> &[Frac] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.kind == CoeffMapKind::Endomorphism
            && self.images.iter().enumerate().all(|(i, f)| {
                *f == Frac::from_poly(MPoly::var(self.monoid.vars(), i), &self.monoid)
            })
    }

    pub fn is_zero(&self) -> bool {
        self.kind == CoeffMapKind::Derivation && self.images.iter().all(Frac::is_zero)
    }

    fn sigma_poly(&self, p: &MPoly) -> Frac {
        match &self.companion {
            Some(c) => c.apply_poly(p),
            None => Frac::from_poly(p.clone(), &self.monoid),
        }
    }

    fn sigma_frac(&self, x: &Frac) -> Result<Frac> {
        match &self.companion {
            Some(c) => c.apply(x),
            None => Ok(x.clone()),
        }
    }

    fn apply_poly(&self, p: &MPoly) -> Frac {
        match self.kind {
            CoeffMapKind::Endomorphism => {
                let mut acc = Frac::zero(&self.monoid);
                for (m, c) in p.terms() {
                    let mut t = Frac::scalar(c.clone(), &self.monoid);
                    for (i, &e) in m.0.iter().enumerate() {
                        if e > 0 {
                            t = t.mul(&self.images[i].pow(e));
                        }
                    }
                    acc = acc.add(&t);
                }
                acc
            }
            CoeffMapKind::Derivation => {
                // Twisted Leibniz rule along the factor word x_1^e_1 x_2^e_2 ...
                let vars = self.monoid.vars().clone();
                let mut acc = Frac::zero(&self.monoid);
                for (m, c) in p.terms() {
                    let mut prefix = MPoly::one(&vars);
                    let mut d_prefix = Frac::zero(&self.monoid);
                    for (i, &e) in m.0.iter().enumerate() {
                        let x = MPoly::var(&vars, i);
                        for _ in 0..e {
                            let sp = self.sigma_poly(&prefix);
                            d_prefix = sp.mul(&self.images[i]).add(&d_prefix.mul_poly(&x));
                            prefix = &prefix * &x;
                        }
                    }
                    acc = acc.add(&d_prefix.scale(c));
                }
                acc
            }
        }
    }

    /// Applies the map to a fraction; derivations use `d(r/s) = sigma(s)^-1 (d(r) - d(s) r/s)`.
    pub fn apply(&self, x: &Frac) -> Result<Frac> {
        let r = x.num();
        let s = x.den();
        match self.kind {
            CoeffMapKind::Endomorphism => {
                let num = self.apply_poly(r);
                if x.is_polynomial() {
                    return Ok(num);
                }
                let den = self.apply_poly(&s);
                let inv = den
                    .inv()
                    .map_err(|_| Error::DenominatorNotInMonoid(den.to_string()))?;
                Ok(num.mul(&inv))
            }
            CoeffMapKind::Derivation => {
                let dr = self.apply_poly(r);
                if x.is_polynomial() {
                    return Ok(dr);
                }
                let ds = self.apply_poly(&s);
                let ss = self.sigma_frac(&Frac::from_poly(s.clone(), &self.monoid))?;
                let inv = ss
                    .inv()
                    .map_err(|_| Error::DenominatorNotInMonoid(ss.to_string()))?;
                Ok(inv.mul(&dr.sub(&ds.mul(x))))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::mpoly::vars;

    fn setup() -> (Arc<DenMonoid>, MPoly, MPoly) {
        let v = vars(&["c", "u"]);
        let c = MPoly::var(&v, 0);
        let u = MPoly::var(&v, 1);
        let m = Arc::new(DenMonoid::new(&v, vec![c.clone(), u.clone()]).unwrap());
        (m, c, u)
    }

    // D = c^2 d/dc + c u d/du, i.e. f = c^2, g = c
    fn d_map(m: &Arc<DenMonoid>, c: &MPoly, u: &MPoly) -> CoeffMapSpec {
        let images = vec![Frac::from_poly(c.pow(2), m), Frac::from_poly(c * u, m)];
        CoeffMapSpec::derivation(images, None, m).unwrap()
    }

    #[test]
    fn derivation_on_generator_and_inverse() {
        let (m, c, u) = setup();
        let d = d_map(&m, &c, &u);
        let du = d.apply(&Frac::from_poly(u.clone(), &m)).unwrap();
        assert_eq!(du, Frac::from_poly(&c * &u, &m));
        let cinv = Frac::new(MPoly::one(m.vars()), &c, &m).unwrap();
        let dcinv = d.apply(&cinv).unwrap();
        assert_eq!(dcinv, Frac::scalar(crate::exactnum::rat(-1), &m));
    }

    #[test]
    fn identity_map_fixes_fractions() {
        let (m, c, u) = setup();
        let id = CoeffMapSpec::identity(&m);
        let x = Frac::new(&u + &c.pow(3), &(&c * &u), &m).unwrap();
        assert_eq!(id.apply(&x).unwrap(), x);
        assert!(id.is_identity());
    }

    #[test]
    fn endomorphism_outside_monoid_rejected() {
        let (m, c, u) = setup();
        let one = MPoly::one(m.vars());
        let images = vec![
            Frac::from_poly(&c + &one, &m),
            Frac::from_poly(u.clone(), &m),
        ];
        assert!(matches!(
            CoeffMapSpec::endomorphism(images, &m),
            Err(Error::DenominatorNotInMonoid(_))
        ));
    }

    #[test]
    fn twisted_derivation_leibniz() {
        // sigma(c) = 2c, delta(c) = 1 on Q[c] (quantum Weyl data)
        let v = vars(&["c"]);
        let m = Arc::new(DenMonoid::trivial(&v));
        let c = MPoly::var(&v, 0);
        let sigma = CoeffMapSpec::endomorphism(
            vec![Frac::from_poly(c.scale(&crate::exactnum::rat(2)), &m)],
            &m,
        )
        .unwrap();
        let d = CoeffMapSpec::derivation(vec![Frac::one(&m)], Some(sigma.clone()), &m).unwrap();
        let p = Frac::from_poly(&c.pow(2) + &c, &m);
        let q = Frac::from_poly(c.pow(3), &m);
        let lhs = d.apply(&p.mul(&q)).unwrap();
        let rhs = sigma
            .apply(&p)
            .unwrap()
            .mul(&d.apply(&q).unwrap())
            .add(&d.apply(&p).unwrap().mul(&q));
        assert_eq!(lhs, rhs);
    }
}
