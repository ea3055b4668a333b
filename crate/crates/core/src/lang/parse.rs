//! Tokenizer and recursive-descent parser for ring expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := name | rational | '(' expr ')' | 'inv' '(' expr ')'
//! ```
//! A whole relation may be written `lhs = rhs`, which parses as `lhs - rhs`.

use std::fmt;

use num::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::mpoly::fmt_rational;
use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Name(String),
    Num(Rational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
    Inv(Box<Expr>),
}

impl Expr {
    pub fn name(s: &str) -> Expr {
        Expr::Name(s.to_string())
    }

    /// Top-level summands (subtraction contributes a negated summand).
    pub fn summands(&self) -> Vec<Expr> {
        match self {
            Expr::Add(l, r) => {
                let mut v = l.summands();
                v.push((**r).clone());
                v
            }
            Expr::Sub(l, r) => {
                let mut v = l.summands();
                v.push(Expr::Neg(r.clone()));
                v
            }
            e => vec![e.clone()],
        }
    }

    /// Every name occurring in the expression, in first-occurrence order.
    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut Vec<String>) {
        match self {
            Expr::Name(n) => {
                if !out.contains(n) {
                    out.push(n.clone());
                }
            }
            Expr::Num(_) => {}
            Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
            Expr::Neg(x) | Expr::Pow(x, _) | Expr::Inv(x) => x.collect_names(out),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Name(n) => write!(f, "{n}"),
            Expr::Num(q) => write!(f, "{}", fmt_rational(q)),
            Expr::Add(l, r) => write!(f, "({l} + {r})"),
            Expr::Sub(l, r) => write!(f, "({l} - {r})"),
            Expr::Mul(l, r) => write!(f, "{l}*{r}"),
            Expr::Neg(x) => write!(f, "-({x})"),
            Expr::Pow(x, e) => write!(f, "({x})^{e}"),
            Expr::Inv(x) => write!(f, "inv({x})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Num(Rational),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let (tl, tc) = (line, col);
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let numer: String = chars[start..i].iter().collect();
            let mut value = Rational::from_integer(numer.parse::<BigInt>().expect("digits"));
            // `p/q` written without spaces is a single rational literal
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                let ds = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let denom: String = chars[ds..i].iter().collect();
                let denom: BigInt = denom.parse().expect("digits");
                if denom == BigInt::from(0) {
                    return Err(syntax(tl, tc, "zero denominator in rational literal"));
                }
                value = Rational::new(value.to_integer(), denom);
            }
            col += i - start;
            out.push(Token {
                tok: Tok::Num(value),
                line: tl,
                col: tc,
            });
            continue;
        }
        if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len()
                && (chars[i].is_alphanumeric()
                    || chars[i] == '_'
                    || chars[i] == '.'
                    || chars[i] == '\'')
            {
                i += 1;
            }
            let name: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token {
                tok: Tok::Name(name),
                line: tl,
                col: tc,
            });
            continue;
        }
        if "+-*^()=".contains(ch) {
            out.push(Token {
                tok: Tok::Sym(ch),
                line: tl,
                col: tc,
            });
            i += 1;
            col += 1;
            continue;
        }
        return Err(syntax(tl, tc, format!("unexpected character '{ch}'")));
    }
    out.push(Token {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            let t = self.peek();
            Err(syntax(t.line, t.col, format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.is_sym('-') {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.is_sym('+') {
                self.bump();
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.is_sym('-') {
                self.bump();
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.is_sym('*') {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.is_sym('^') {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Num(q) if q.is_integer() => {
                let e: u32 = q
                    .to_integer()
                    .try_into()
                    .map_err(|_| syntax(t.line, t.col, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => Err(syntax(
                t.line,
                t.col,
                "expected a nonnegative integer exponent",
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.bump();
        match t.tok {
            Tok::Num(q) => Ok(Expr::Num(q)),
            Tok::Name(n) if n == "inv" && self.is_sym('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(Expr::Inv(Box::new(inner)))
            }
            Tok::Name(n) => Ok(Expr::Name(n)),
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.expect_sym(')')?;
                Ok(inner)
            }
            Tok::End => Err(syntax(t.line, t.col, "unexpected end of input")),
            Tok::Sym(c) => Err(syntax(t.line, t.col, format!("unexpected '{c}'"))),
        }
    }
}

/// Parses an expression or a relation `lhs = rhs` (returned as `lhs - rhs`).
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let lhs = p.expr()?;
    let e = if p.is_sym('=') {
        p.bump();
        let rhs = p.expr()?;
        Expr::Sub(Box::new(lhs), Box::new(rhs))
    } else {
        lhs
    };
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(syntax(t.line, t.col, "unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_with_three_terms() {
        let e = parse("b*a - (a+h)*b - (h-u)*a").unwrap();
        assert_eq!(e.summands().len(), 3);
        assert_eq!(e.names(), vec!["b", "a", "h", "u"]);
        assert_eq!(parse("a*c - c*a - c^2").unwrap().summands().len(), 3);
    }

    #[test]
    fn dangling_operator_reports_column() {
        assert_eq!(
            parse("a*"),
            Err(Error::Syntax {
                line: 1,
                col: 3,
                msg: "unexpected end of input".into()
            })
        );
        assert!(matches!(
            parse("a +\n  * b"),
            Err(Error::Syntax {
                line: 2,
                col: 3,
                ..
            })
        ));
        assert!(matches!(parse("a ^ b"), Err(Error::Syntax { col: 5, .. })));
    }

    #[test]
    fn equation_becomes_difference() {
        assert_eq!(
            parse("a*c = c*a + c^2").unwrap(),
            parse("a*c - (c*a + c^2)").unwrap()
        );
    }

    #[test]
    fn literals_and_inverse() {
        assert_eq!(
            parse("3/4").unwrap(),
            Expr::Num(Rational::new(3.into(), 4.into()))
        );
        assert_eq!(
            parse("inv(c)*u").unwrap(),
            Expr::Mul(
                Box::new(Expr::Inv(Box::new(Expr::name("c")))),
                Box::new(Expr::name("u"))
            )
        );
        assert!(parse("1/0").is_err());
        assert_eq!(parse("-a").unwrap(), Expr::Neg(Box::new(Expr::name("a"))));
    }
}
