//! Constructor strings such as `Gf(c^3 + c^2)` or `Mq2(q)`.

use num::Zero;

use super::*;
use crate::exactnum::mpoly::fmt_rational;
use crate::exactnum::Rational;

/// A scalar parameter: a nonzero rational, or a symbol adjoined as an
/// invertible central base variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Value(Rational),
    Symbol(String),
}

impl Param {
    pub fn int(n: i64) -> Param {
        Param::Value(crate::exactnum::rat(n))
    }

    pub fn parse(text: &str) -> Result<Param> {
        let text = text.trim();
        let first = text.chars().next().unwrap_or(' ');
        if first.is_alphabetic() && text.chars().all(|ch| ch.is_alphanumeric() || ch == '_') {
            if text == "c" {
                return Err(Error::invalid("the parameter cannot be named c"));
            }
            return Ok(Param::Symbol(text.to_string()));
        }
        let t = base_c();
        let v = crate::lang::eval_str(text, &t, &Default::default())?;
        match v.constant_value() {
            Some(q) => Ok(Param::Value(q)),
            None if v.is_zero() => Ok(Param::Value(Rational::zero())),
            None => Err(Error::invalid(format!("{text} is not a scalar"))),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Param::Value(q) if q.is_zero())
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            Param::Value(q) => Some(q),
            Param::Symbol(_) => None,
        }
    }

    /// Expression text for the parameter.
    pub fn text(&self) -> String {
        match self {
            Param::Value(q) => format!("({})", fmt_rational(q)),
            Param::Symbol(s) => s.clone(),
        }
    }

    /// Expression text for its inverse.
    pub fn inv_text(&self) -> String {
        match self {
            Param::Value(q) => format!("({})", fmt_rational(&q.recip())),
            Param::Symbol(s) => format!("inv({s})"),
        }
    }

    /// `k[c]`, or `k[c, q][q^-1]` for a symbolic parameter.
    pub(crate) fn base(&self) -> Result<OreTower> {
        match self {
            Param::Value(_) => Ok(base_c()),
            Param::Symbol(s) => {
                let v = crate::exactnum::vars(&["c", s]);
                OreTower::new(&["c", s], vec![MPoly::var(&v, 1)])
            }
        }
    }

    /// Extra generators and relations making a symbolic parameter central.
    pub(crate) fn central_relations(&self, gens: &[&str]) -> Vec<String> {
        match self {
            Param::Value(_) => Vec::new(),
            Param::Symbol(s) => gens.iter().map(|g| format!("{g}*{s} = {s}*{g}")).collect(),
        }
    }

    pub(crate) fn symbol(&self) -> Option<&str> {
        match self {
            Param::Value(_) => None,
            Param::Symbol(s) => Some(s),
        }
    }
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Param::Value(q) => write!(f, "{}", fmt_rational(q)),
            Param::Symbol(s) => write!(f, "{s}"),
        }
    }
}

pub const CTOR_NAMES: &[&str] = &[
    "Rf",
    "Oq",
    "AW",
    "P",
    "Mq2",
    "MJ2",
    "G",
    "Gf",
    "ISPEnegWeyl",
    "ISPEplane",
    "ISPEweyl",
];

/// Splits `Name(arg, arg, ...)` at top-level commas.
fn split_call(text: &str) -> Result<(String, Vec<String>)> {
    let text = text.trim();
    let Some(open) = text.find('(') else {
        return Ok((text.to_string(), Vec::new()));
    };
    if !text.ends_with(')') {
        return Err(Error::Syntax {
            line: 1,
            col: text.len(),
            msg: "expected ')' at end of constructor".into(),
        });
    }
    let name = text[..open].trim().to_string();
    let inner = &text[open + 1..text.len() - 1];
    let mut args = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in inner.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                args.push(cur.trim().to_string());
                cur.clear();
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    if !cur.trim().is_empty() || !args.is_empty() {
        args.push(cur.trim().to_string());
    }
    Ok((name, args))
}

/// Builds a bundle from a constructor string.
pub fn from_spec_str(text: &str) -> Result<AlgebraBundle> {
    let (name, args) = split_call(text)?;
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "{name} takes {n} argument(s), got {}",
                args.len()
            )))
        }
    };
    let poly = |k: usize| poly_in(&["c"], &args[k]);
    match name.as_str() {
        "Rf" => {
            arity(1)?;
            make_rf(&poly(0)?)
        }
        "Oq" => {
            arity(1)?;
            make_quantum_plane(&Param::parse(&args[0])?)
        }
        "AW" => {
            arity(1)?;
            make_quantum_weyl(&Param::parse(&args[0])?)
        }
        "P" => {
            arity(2)?;
            make_p(&poly(0)?, &poly(1)?)
        }
        "Mq2" => {
            arity(1)?;
            make_mq2(&Param::parse(&args[0])?)
        }
        "MJ2" => {
            arity(0)?;
            make_mj2()
        }
        "G" => {
            arity(3)?;
            make_g(&poly(0)?, &poly(1)?, &args[2])
        }
        "Gf" => {
            arity(1)?;
            make_gf(&poly(0)?)
        }
        "ISPEnegWeyl" => {
            arity(1)?;
            make_ispe_neg_weyl(&poly(0)?)
        }
        "ISPEplane" => {
            arity(3)?;
            let variant = PlaneVariant::parse(&args[1])?;
            make_ispe_plane(&Param::parse(&args[0])?, variant, &poly(2)?)
        }
        "ISPEweyl" => {
            arity(0)?;
            Ok(birational::ispe_weyl_example()?.0)
        }
        _ => Err(Error::UnboundName(format!(
            "no algebra constructor named {name} (known: {})",
            CTOR_NAMES.join(", ")
        ))),
    }
}
