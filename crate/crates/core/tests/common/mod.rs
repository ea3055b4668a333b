//! Test-only reference arithmetic: noncommutative polynomials over Q reduced
//! by explicit two-letter rewriting rules, plus a plain Gaussian elimination.
//! Shares no code with the library beyond the `BigRational` type, so its
//! answers can be compared against the Ore tower engine.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};
use oretower::tower::{Element, OreTower};

pub type Q = BigRational;
pub type Word = Vec<usize>;
pub type Poly = BTreeMap<Word, Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Algebra `k<letters>` modulo rules `xy -> rhs` applied left to right until
/// no rule matches. The rules are supplied by the caller and must terminate.
pub struct WordAlgebra {
    pub letters: Vec<String>,
    rules: BTreeMap<(usize, usize), Poly>,
}

impl WordAlgebra {
    /// `rules` are `("b*c", "c*b + c^2")`: a product of two letters and its replacement.
    pub fn new(letters: &[&str], rules: &[(&str, &str)]) -> WordAlgebra {
        let mut alg = WordAlgebra {
            letters: letters.iter().map(|s| s.to_string()).collect(),
            rules: BTreeMap::new(),
        };
        for (lhs, rhs) in rules {
            let l = alg.raw(lhs);
            assert_eq!(l.len(), 1, "rule lhs {lhs}");
            let (w, c) = l.into_iter().next().unwrap();
            assert!(
                w.len() == 2 && c.is_one(),
                "rule lhs {lhs} must be a product of two letters"
            );
            let r = alg.raw(rhs);
            alg.rules.insert((w[0], w[1]), r);
        }
        alg
    }

    fn letter(&self, name: &str) -> usize {
        self.letters
            .iter()
            .position(|l| l == name)
            .unwrap_or_else(|| panic!("unknown letter {name}"))
    }

    /// Parses without reducing.
    fn raw(&self, text: &str) -> Poly {
        let toks = tokenize(text);
        let mut p = Parser {
            toks: &toks,
            pos: 0,
            alg: self,
        };
        let out = p.expr();
        assert_eq!(p.pos, toks.len(), "trailing input in {text:?}");
        out
    }

    /// Parses and reduces to normal form.
    pub fn parse(&self, text: &str) -> Poly {
        self.reduce(self.raw(text))
    }

    pub fn reduce(&self, mut p: Poly) -> Poly {
        loop {
            let mut next = Poly::new();
            let mut changed = false;
            for (w, c) in p {
                let hit = (0..w.len().saturating_sub(1))
                    .find(|&i| self.rules.contains_key(&(w[i], w[i + 1])));
                match hit {
                    None => add_term(&mut next, w, c),
                    Some(i) => {
                        changed = true;
                        for (rw, rc) in &self.rules[&(w[i], w[i + 1])] {
                            let mut nw = w[..i].to_vec();
                            nw.extend(rw);
                            nw.extend(&w[i + 2..]);
                            add_term(&mut next, nw, &c * rc);
                        }
                    }
                }
            }
            p = next;
            if !changed {
                return p;
            }
        }
    }

    pub fn mul(&self, x: &Poly, y: &Poly) -> Poly {
        let mut out = Poly::new();
        for (wx, cx) in x {
            for (wy, cy) in y {
                let mut w = wx.clone();
                w.extend(wy);
                add_term(&mut out, w, cx * cy);
            }
        }
        self.reduce(out)
    }

    pub fn commutator(&self, x: &Poly, y: &Poly) -> Poly {
        sub(&self.mul(x, y), &self.mul(y, x))
    }

    pub fn fmt(&self, p: &Poly) -> String {
        if p.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = p
            .iter()
            .map(|(w, c)| {
                let word: Vec<&str> = w.iter().map(|&i| self.letters[i].as_str()).collect();
                if w.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    word.join("*")
                } else {
                    format!("{c}*{}", word.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Converts a library element by reading its PBW terms directly: each
    /// term `f * x^m` becomes the word (denominators)(numerator monomial)(x^m).
    /// `inverse_letters[k]` names the letter standing for the inverse of the
    /// `k`-th denominator generator of the tower.
    pub fn poly_of(&self, t: &OreTower, e: &Element, inverse_letters: &[&str]) -> Poly {
        let base: Vec<usize> = t.base_vars().iter().map(|v| self.letter(v)).collect();
        let skew: Vec<usize> = t.skew_names().iter().map(|v| self.letter(v)).collect();
        let inv: Vec<usize> = inverse_letters.iter().map(|v| self.letter(v)).collect();
        assert_eq!(
            inv.len(),
            t.monoid().len(),
            "one inverse letter per denominator generator"
        );
        let mut out = Poly::new();
        for (m, f) in e.terms() {
            for (mono, c) in f.num().terms() {
                let mut w = Word::new();
                for (k, &d) in f.den_exps().iter().enumerate() {
                    w.extend(std::iter::repeat_n(inv[k], d as usize));
                }
                for (k, &d) in mono.0.iter().enumerate() {
                    w.extend(std::iter::repeat_n(base[k], d as usize));
                }
                for (k, &d) in m.exps().iter().enumerate() {
                    w.extend(std::iter::repeat_n(skew[k], d as usize));
                }
                add_term(&mut out, w, c.clone());
            }
        }
        self.reduce(out)
    }
}

pub fn add_term(p: &mut Poly, w: Word, c: Q) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match p.entry(w) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

pub fn add(x: &Poly, y: &Poly) -> Poly {
    let mut out = x.clone();
    for (w, c) in y {
        add_term(&mut out, w.clone(), c.clone());
    }
    out
}

pub fn scale(x: &Poly, c: &Q) -> Poly {
    x.iter()
        .filter(|_| !c.is_zero())
        .map(|(w, v)| (w.clone(), v * c))
        .collect()
}

pub fn sub(x: &Poly, y: &Poly) -> Poly {
    add(x, &scale(y, &q(-1)))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Q),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Vec<Tok> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let ch = cs[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let n: i64 = cs[st..i].iter().collect::<String>().parse().unwrap();
            out.push(Tok::Num(q(n)));
        } else if ch.is_alphabetic() || ch == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else {
            assert!("+-*/^()".contains(ch), "bad character {ch:?} in {s:?}");
            out.push(Tok::Op(ch));
            i += 1;
        }
    }
    out
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    alg: &'a WordAlgebra,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Poly {
        let mut acc = if self.eat('-') {
            scale(&self.term(), &q(-1))
        } else {
            self.term()
        };
        loop {
            if self.eat('+') {
                acc = add(&acc, &self.term());
            } else if self.eat('-') {
                acc = sub(&acc, &self.term());
            } else {
                return acc;
            }
        }
    }

    fn term(&mut self) -> Poly {
        let mut acc = self.power();
        loop {
            if self.eat('*') {
                let r = self.power();
                acc = concat(&acc, &r);
            } else if self.eat('/') {
                let Some(Tok::Num(d)) = self.peek().cloned() else {
                    panic!("only numeric division")
                };
                self.pos += 1;
                acc = scale(&acc, &(Q::one() / d));
            } else {
                return acc;
            }
        }
    }

    fn power(&mut self) -> Poly {
        let base = self.atom();
        if self.eat('^') {
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                panic!("exponent must be a number")
            };
            self.pos += 1;
            let n: usize = n.to_integer().try_into().unwrap();
            let mut acc: Poly = [(Word::new(), q(1))].into();
            for _ in 0..n {
                acc = concat(&acc, &base);
            }
            acc
        } else {
            base
        }
    }

    fn atom(&mut self) -> Poly {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                [(Word::new(), n)].into()
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                [(vec![self.alg.letter(&name)], q(1))].into()
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr();
                assert!(self.eat(')'), "missing )");
                e
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                scale(&self.atom(), &q(-1))
            }
            other => panic!("unexpected token {other:?}"),
        }
    }
}

/// Product of raw words without any rewriting.
fn concat(x: &Poly, y: &Poly) -> Poly {
    let mut out = Poly::new();
    for (wx, cx) in x {
        for (wy, cy) in y {
            let mut w = wx.clone();
            w.extend(wy);
            add_term(&mut out, w, cx * cy);
        }
    }
    out
}

/// Nullspace of the linear map sending unknown `k` to `columns[k]`, one
/// vector of coefficients per basis element.
pub fn nullspace(columns: &[Poly]) -> Vec<Vec<Q>> {
    let rows: Vec<&Word> = {
        let mut all: Vec<&Word> = columns.iter().flat_map(|c| c.keys()).collect();
        all.sort();
        all.dedup();
        all
    };
    let n = columns.len();
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|w| {
            columns
                .iter()
                .map(|c| c.get(*w).cloned().unwrap_or_else(Q::zero))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][col].clone();
        for x in m[r].iter_mut() {
            *x /= &lead;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot_row = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); n];
            v[free] = q(1);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

/// Rank of a family of polynomials viewed as vectors over their words.
pub fn rank(polys: &[Poly]) -> usize {
    polys.len() - nullspace(polys).len()
}

pub fn combine(basis: &[Poly], coeffs: &[Q]) -> Poly {
    let mut out = Poly::new();
    for (b, c) in basis.iter().zip(coeffs) {
        out = add(&out, &scale(b, c));
    }
    out
}

/// True when both families span the same subspace.
pub fn same_span(x: &[Poly], y: &[Poly]) -> bool {
    let rx = rank(x);
    let ry = rank(y);
    let both: Vec<Poly> = x.iter().chain(y).cloned().collect();
    rx == ry && rank(&both) == rx
}

/// `[x, gen] = 0` for every letter.
pub fn is_central(alg: &WordAlgebra, x: &Poly) -> bool {
    (0..alg.letters.len()).all(|i| alg.commutator(x, &[(vec![i], q(1))].into()).is_empty())
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Rewriting systems written out by hand from the defining relations.
pub mod systems {
    use super::WordAlgebra;

    /// `a*c = c*a + c^2`.
    pub fn rf_c2() -> WordAlgebra {
        WordAlgebra::new(&["c", "a"], &[("a*c", "c*a + c^2")])
    }

    /// `M_q(2)` on `c < a < d < b`; `qi` is `1/q` written as a fraction.
    pub fn mq2(q: &str, qi: &str) -> WordAlgebra {
        let bc = format!("c*b + ({q} - {qi})*a*d");
        let (ac, dc, ba, bd) = (
            format!("{q}*c*a"),
            format!("{q}*c*d"),
            format!("{q}*a*b"),
            format!("{q}*d*b"),
        );
        WordAlgebra::new(
            &["c", "a", "d", "b"],
            &[
                ("a*c", &ac),
                ("d*c", &dc),
                ("d*a", "a*d"),
                ("b*a", &ba),
                ("b*d", &bd),
                ("b*c", &bc),
            ],
        )
    }

    /// `M_J(2)` on `c < a < d < b`.
    pub fn mj2() -> WordAlgebra {
        WordAlgebra::new(
            &["c", "a", "d", "b"],
            &[
                ("a*c", "c*a + c^2"),
                ("d*c", "c*d + c^2"),
                ("d*a", "a*d - c*d + c*a"),
                ("b*c", "c*b + c*a + c*d + c^2"),
                ("b*d", "d*b + c*b + c*d - a*d + d^2"),
                ("b*a", "a*b + c*b + c*d - a*d + a^2"),
            ],
        )
    }

    /// `G_{c^2}` on `c < u < a < b`, from `sigma(a) = a + c` and
    /// `delta = (c*gamma, u*gamma, (c - u)*a)` with `gamma = c + u + 2a`.
    pub fn g_c2() -> WordAlgebra {
        WordAlgebra::new(
            &["c", "u", "a", "b"],
            &[
                ("u*c", "c*u"),
                ("a*c", "c*a + c^2"),
                ("a*u", "u*a + c*u"),
                ("b*c", "c*b + c*(c + u + 2*a)"),
                ("b*u", "u*b + u*(c + u + 2*a)"),
                ("b*a", "(a + c)*b + (c - u)*a"),
            ],
        )
    }

    /// `P(c^2, c)` with `c` inverted: letters `C < c < u < a`, `C = c^-1`.
    /// `a*C = C*a - 1` follows from `a*c = c*a + c^2`.
    pub fn p_c2_c_loc() -> WordAlgebra {
        WordAlgebra::new(
            &["C", "c", "u", "a"],
            &[
                ("c*C", "1"),
                ("C*c", "1"),
                ("u*C", "C*u"),
                ("u*c", "c*u"),
                ("a*C", "C*a - 1"),
                ("a*c", "c*a + c^2"),
                ("a*u", "u*a + c*u"),
            ],
        )
    }
}
