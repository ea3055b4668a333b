//! Line-level syntax of task files.

use std::collections::BTreeMap;

/// One statement with its 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stmt {
    pub line: usize,
    pub kind: StmtKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Param {
        name: String,
        invertible: bool,
    },
    Base(Vec<String>),
    Monoid(Vec<String>),
    Poly {
        name: String,
        expr: String,
    },
    Tower {
        name: String,
        body: String,
    },
    Zoo {
        name: String,
        ctor: String,
    },
    Elem {
        name: String,
        expr: String,
        tower: String,
    },
    Map {
        name: String,
        src: String,
        dst: String,
        images: Vec<(String, String)>,
    },
    Check(CheckStmt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckStmt {
    pub kind: String,
    /// Arguments with the option block removed.
    pub args: String,
    pub options: BTreeMap<String, String>,
}

pub const CHECK_KINDS: &[&str] = &[
    "relations",
    "central",
    "involution",
    "inverse-pair",
    "inner-auto",
    "inner-der",
    "normal",
    "local-reduction",
    "center-search",
    "growth",
    "quotient",
    "ispe",
    "tower-wellformed",
    "inner-power-scan",
];

/// Splits at occurrences of `sep` outside parentheses and brackets; pieces are trimmed
/// and empty pieces dropped.
pub fn split_top(text: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ if ch == sep && depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out.into_iter()
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Splits `text` at the first top-level occurrence of the word `kw` (surrounded by spaces).
pub fn split_keyword<'a>(text: &'a str, kw: &str) -> Option<(&'a str, &'a str)> {
    let pat = format!(" {kw} ");
    let mut depth = 0i32;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ' ' if depth == 0 && text[i..].starts_with(&pat) => {
                return Some((text[..i].trim(), text[i + pat.len()..].trim()));
            }
            _ => {}
        }
    }
    None
}

/// `name = rest`, with `name` a plain identifier.
fn assignment(rest: &str) -> Result<(String, String), String> {
    let (name, value) = rest.split_once('=').ok_or("expected `<name> = ...`")?;
    let name = name.trim();
    if !is_ident(name) {
        return Err(format!("`{name}` is not a valid name"));
    }
    let value = value.trim();
    if value.is_empty() {
        return Err(format!("nothing assigned to {name}"));
    }
    Ok((name.to_string(), value.to_string()))
}

pub fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// `<gen>=<expr>, ...`
pub fn image_list(text: &str) -> Result<Vec<(String, String)>, String> {
    split_top(text, ',')
        .into_iter()
        .map(|item| {
            let (g, e) = item
                .split_once('=')
                .ok_or_else(|| format!("expected `<generator>=<expression>`, found `{item}`"))?;
            let (g, e) = (g.trim(), e.trim());
            if g.is_empty() || e.is_empty() {
                return Err(format!("incomplete image `{item}`"));
            }
            Ok((g.to_string(), e.to_string()))
        })
        .collect()
}

/// Removes a trailing `[key=value, ...]` block.
fn options(text: &str) -> Result<(String, BTreeMap<String, String>), String> {
    let text = text.trim();
    let mut map = BTreeMap::new();
    if !text.ends_with(']') {
        return Ok((text.to_string(), map));
    }
    let mut depth = 0i32;
    let mut open = None;
    for (i, ch) in text.char_indices().rev() {
        match ch {
            ']' | ')' => depth += 1,
            '[' | '(' => {
                depth -= 1;
                if depth == 0 {
                    open = Some(i);
                    break;
                }
            }
            _ => {}
        }
    }
    let open = open.ok_or("unbalanced `]`")?;
    for item in split_top(&text[open + 1..text.len() - 1], ',') {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("option `{item}` should read key=value"))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok((text[..open].trim().to_string(), map))
}

fn parse_line(text: &str) -> Result<StmtKind, String> {
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let rest = rest.trim();
    let words = || {
        rest.split_whitespace()
            .map(str::to_string)
            .collect::<Vec<_>>()
    };
    Ok(match head {
        "param" => match words().as_slice() {
            [n] if is_ident(n) => StmtKind::Param {
                name: n.clone(),
                invertible: false,
            },
            [n, flag] if is_ident(n) && flag == "invertible" => StmtKind::Param {
                name: n.clone(),
                invertible: true,
            },
            _ => return Err("expected `param <name> [invertible]`".into()),
        },
        "base" => {
            let v = words();
            if v.is_empty() || !v.iter().all(|w| is_ident(w)) {
                return Err("expected `base <v1> <v2> ...`".into());
            }
            StmtKind::Base(v)
        }
        "monoid" => {
            let v = if rest.contains(',') {
                split_top(rest, ',')
            } else {
                words()
            };
            StmtKind::Monoid(v)
        }
        "poly" => {
            let (name, expr) = assignment(rest)?;
            StmtKind::Poly { name, expr }
        }
        "tower" => {
            let (name, body) = assignment(rest)?;
            StmtKind::Tower { name, body }
        }
        "zoo" => {
            let (name, ctor) = assignment(rest)?;
            StmtKind::Zoo { name, ctor }
        }
        "elem" => {
            let (name, value) = assignment(rest)?;
            let (expr, tower) =
                split_keyword(&value, "in").ok_or("expected `elem <name> = <expr> in <tower>`")?;
            StmtKind::Elem {
                name,
                expr: expr.to_string(),
                tower: tower.to_string(),
            }
        }
        "map" => {
            let (name, sig) = rest
                .split_once(':')
                .ok_or("expected `map <name> : <src> -> <dst> with ...`")?;
            let name = name.trim();
            if !is_ident(name) {
                return Err(format!("`{name}` is not a valid name"));
            }
            let (sig, images) = match split_keyword(sig, "with") {
                Some((s, i)) => (s, image_list(i)?),
                None => (sig.trim(), Vec::new()),
            };
            let (src, dst) = sig.split_once("->").ok_or("expected `<src> -> <dst>`")?;
            StmtKind::Map {
                name: name.to_string(),
                src: src.trim().to_string(),
                dst: dst.trim().to_string(),
                images,
            }
        }
        "check" => {
            let (kind, args) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            if !CHECK_KINDS.contains(&kind) {
                return Err(format!(
                    "unknown check kind `{kind}` (known: {})",
                    CHECK_KINDS.join(", ")
                ));
            }
            let (args, options) = options(args)?;
            StmtKind::Check(CheckStmt {
                kind: kind.to_string(),
                args,
                options,
            })
        }
        other => return Err(format!("unknown statement `{other}`")),
    })
}

/// Parses a whole task file; `#` starts a comment.
pub fn parse_task(text: &str) -> Result<Vec<Stmt>, (usize, String)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let kind = parse_line(line).map_err(|e| (i + 1, e))?;
        out.push(Stmt { line: i + 1, kind });
    }
    Ok(out)
}
