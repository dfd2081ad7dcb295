//! Closed-form expressions and parameter domains used by the formula catalog.
//!
//! Every cardinality formula in the catalog is linear in the monomials
//! `hk, k, h^2, h, x, y, z, 1`, so a formula is stored as a coefficient vector
//! ([`Lin`]). Formulas and domains are written as short strings close to the
//! usual notation (`"(h+1)k-h^2-x+1"`, `"x in [1, h-1]; z in {k-1, k}"`) and
//! parsed once when the catalog is built.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Values of the symbols a formula or constraint may mention.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Env {
    pub h: i64,
    pub k: i64,
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

const BASIS: [&str; 8] = ["hk", "k", "h^2", "h", "x", "y", "z", ""];

/// `a*hk + b*k + c*h^2 + d*h + e*x + f*y + g*z + c0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Lin([i64; 8]);

impl Lin {
    pub fn constant(c: i64) -> Self {
        let mut l = Lin::default();
        l.0[7] = c;
        l
    }

    pub fn eval(&self, env: &Env) -> i64 {
        let c = &self.0;
        c[0] * env.h * env.k
            + c[1] * env.k
            + c[2] * env.h * env.h
            + c[3] * env.h
            + c[4] * env.x
            + c[5] * env.y
            + c[6] * env.z
            + c[7]
    }

    pub fn parse(src: &str) -> Result<Self> {
        let poly = Parser::new(src)?.parse_all()?;
        poly_to_lin(&poly).map_err(|m| Error::Parse(format!("`{src}`: {m}")))
    }

    fn mentions_params(&self) -> bool {
        self.0[4] != 0 || self.0[5] != 0 || self.0[6] != 0
    }
}

/// Parses a target cardinality: an integer or a linear form in `h` and `k`
/// such as `hk-h2+2`, where `h2` abbreviates `h^2`.
pub fn parse_target(src: &str) -> Result<Lin> {
    let lin = Lin::parse(&src.replace("h2", "h^2"))?;
    if lin.mentions_params() {
        return Err(Error::Parse(format!("target `{src}` may only mention h and k")));
    }
    Ok(lin)
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (coef, name) in self.0.iter().zip(BASIS) {
            let c = *coef;
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if name.is_empty() {
                write!(f, "{sign}{mag}")?;
            } else if mag == 1 {
                write!(f, "{sign}{name}")?;
            } else {
                write!(f, "{sign}{mag}{name}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

// Monomial exponents of (h, k, x, y, z).
type Mono = [u8; 5];
type Poly = BTreeMap<Mono, i64>;

fn poly_const(c: i64) -> Poly {
    let mut p = Poly::new();
    if c != 0 {
        p.insert([0; 5], c);
    }
    p
}

fn poly_add(a: &Poly, b: &Poly, sign: i64) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        let e = out.entry(*m).or_insert(0);
        *e += sign * c;
        if *e == 0 {
            out.remove(m);
        }
    }
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = [0u8; 5];
            for i in 0..5 {
                m[i] = ma[i] + mb[i];
            }
            *out.entry(m).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_to_lin(p: &Poly) -> std::result::Result<Lin, String> {
    let mut lin = Lin::default();
    for (m, c) in p {
        let slot = match m {
            [1, 1, 0, 0, 0] => 0,
            [0, 1, 0, 0, 0] => 1,
            [2, 0, 0, 0, 0] => 2,
            [1, 0, 0, 0, 0] => 3,
            [0, 0, 1, 0, 0] => 4,
            [0, 0, 0, 1, 0] => 5,
            [0, 0, 0, 0, 1] => 6,
            [0, 0, 0, 0, 0] => 7,
            _ => return Err(format!("unsupported monomial with exponents {m:?}")),
        };
        lin.0[slot] = *c;
    }
    Ok(lin)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    src: String,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        let mut toks = Vec::new();
        let chars: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                ' ' | '\t' => {}
                '0'..='9' => {
                    let mut v: i64 = 0;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        v = v * 10 + chars[i].to_digit(10).unwrap() as i64;
                        i += 1;
                    }
                    toks.push(Tok::Num(v));
                    continue;
                }
                'h' => toks.push(Tok::Var(0)),
                'k' => toks.push(Tok::Var(1)),
                'x' => toks.push(Tok::Var(2)),
                'y' => toks.push(Tok::Var(3)),
                'z' => toks.push(Tok::Var(4)),
                '+' => toks.push(Tok::Plus),
                '-' => toks.push(Tok::Minus),
                '*' => toks.push(Tok::Star),
                '^' => toks.push(Tok::Caret),
                '(' => toks.push(Tok::LParen),
                ')' => toks.push(Tok::RParen),
                _ => return Err(Error::Parse(format!("unexpected `{c}` in `{src}`"))),
            }
            i += 1;
        }
        Ok(Self { toks, pos: 0, src: src.to_string() })
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("`{}`: {msg}", self.src))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn parse_all(mut self) -> Result<Poly> {
        let p = self.expr()?;
        if self.pos != self.toks.len() {
            return Err(self.err("trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut sign = 1;
        match self.peek() {
            Some(Tok::Minus) => {
                sign = -1;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = poly_add(&Poly::new(), &self.term()?, sign);
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => break,
            };
            self.pos += 1;
            let t = self.term()?;
            acc = poly_add(&acc, &t, sign);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {}
                _ => break,
            }
            let rhs = self.power()?;
            acc = poly_mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let n = match self.peek() {
                Some(Tok::Num(n)) => *n,
                _ => return Err(self.err("exponent must be a literal")),
            };
            self.pos += 1;
            let mut acc = poly_const(1);
            for _ in 0..n {
                acc = poly_mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(poly_const(n)),
            Tok::Var(v) => {
                let mut m = [0u8; 5];
                m[v] = 1;
                Ok(Poly::from([(m, 1)]))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(self.err(&format!("unexpected token {other:?}"))),
        }
    }
}

/// `lo <= expr <= hi`, either side optional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub expr: Lin,
    pub lo: Option<Lin>,
    pub hi: Option<Lin>,
}

impl Constraint {
    pub fn holds(&self, env: &Env) -> bool {
        self.violation(env) == 0
    }

    /// How far the expression lies outside its bounds (0 when satisfied).
    pub fn violation(&self, env: &Env) -> i64 {
        let v = self.expr.eval(env);
        let below = self.lo.map(|lo| (lo.eval(env) - v).max(0)).unwrap_or(0);
        let above = self.hi.map(|hi| (v - hi.eval(env)).max(0)).unwrap_or(0);
        below + above
    }

    /// True when the constraint only involves `h` and `k`.
    pub fn is_regime(&self) -> bool {
        !self.expr.mentions_params()
            && !self.lo.is_some_and(|l| l.mentions_params())
            && !self.hi.is_some_and(|l| l.mentions_params())
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.lo, &self.hi) {
            (Some(lo), Some(hi)) if lo == hi => write!(f, "{} = {}", self.expr, lo),
            (Some(lo), Some(hi)) => write!(f, "{} <= {} <= {}", lo, self.expr, hi),
            (Some(lo), None) => write!(f, "{} >= {}", self.expr, lo),
            (None, Some(hi)) => write!(f, "{} <= {}", self.expr, hi),
            (None, None) => write!(f, "{} free", self.expr),
        }
    }
}

/// Conjunction of constraints.
pub type Conj = Vec<Constraint>;

/// A disjunction of conjunctions, minus a list of excluded conjunctions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    pub any_of: Vec<Conj>,
    pub none_of: Vec<Conj>,
}

impl Domain {
    /// Parses `atom; atom | atom; ...`. Atoms are `E in [A, B]`, `E in {A, B, ..}`,
    /// `E = A`, `E >= A`, `E <= A`, `E > A` and `E < A`.
    pub fn parse(src: &str) -> Result<Self> {
        Ok(Self { any_of: parse_dnf(src)?, none_of: Vec::new() })
    }

    /// Like [`Domain::parse`] with the tuples matching `unless` removed.
    pub fn parse_except(src: &str, unless: &str) -> Result<Self> {
        Ok(Self { any_of: parse_dnf(src)?, none_of: parse_dnf(unless)? })
    }

    pub fn holds(&self, env: &Env) -> bool {
        self.any_of.iter().any(|c| c.iter().all(|a| a.holds(env)))
            && !self.none_of.iter().any(|c| c.iter().all(|a| a.holds(env)))
    }

    /// Smallest total violation over the alternatives (exclusions ignored).
    pub fn distance(&self, env: &Env) -> i64 {
        self.any_of.iter().map(|c| c.iter().map(|a| a.violation(env)).sum::<i64>()).min().unwrap_or(i64::MAX)
    }

    /// The first violated constraint of the closest alternative, if any.
    pub fn first_violation(&self, env: &Env) -> Option<String> {
        if self.holds(env) {
            return None;
        }
        let best = self.any_of.iter().min_by_key(|c| c.iter().map(|a| a.violation(env)).sum::<i64>())?;
        match best.iter().find(|a| !a.holds(env)) {
            Some(c) => Some(c.to_string()),
            None => Some(format!("excluded: {}", self.render_none_of())),
        }
    }

    /// Rendered alternatives, one list of interval constraints per alternative.
    pub fn render(&self) -> Vec<Vec<String>> {
        self.any_of.iter().map(|c| c.iter().map(|a| a.to_string()).collect()).collect()
    }

    pub fn render_none_of(&self) -> String {
        self.none_of
            .iter()
            .map(|c| c.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "))
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

fn parse_dnf(src: &str) -> Result<Vec<Conj>> {
    let mut out = Vec::new();
    for alt in split_top(src, '|') {
        let mut partial: Vec<Conj> = vec![Vec::new()];
        for atom in split_top(&alt, ';') {
            let atom = atom.trim();
            if atom.is_empty() {
                continue;
            }
            let options = parse_atom(atom)?;
            partial = partial
                .into_iter()
                .flat_map(|conj| {
                    options.iter().map(move |c| {
                        let mut next = conj.clone();
                        next.push(c.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    Ok(out)
}

/// Splits on `sep` outside brackets and braces.
fn split_top(src: &str, sep: char) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in src.chars() {
        match c {
            '[' | '{' | '(' => depth += 1,
            ']' | '}' | ')' => depth -= 1,
            _ => {}
        }
        if c == sep && depth == 0 {
            parts.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    parts.push(cur);
    parts
}

/// One atom; `in {..}` yields several alternatives.
fn parse_atom(atom: &str) -> Result<Vec<Constraint>> {
    if let Some((lhs, rhs)) = atom.split_once(" in ") {
        let expr = Lin::parse(lhs)?;
        let rhs = rhs.trim();
        if let Some(inner) = rhs.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let parts = split_top(inner, ',');
            if parts.len() != 2 {
                return Err(Error::Parse(format!("interval `{rhs}` needs two ends")));
            }
            return Ok(vec![Constraint { expr, lo: Some(Lin::parse(&parts[0])?), hi: Some(Lin::parse(&parts[1])?) }]);
        }
        if let Some(inner) = rhs.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
            return split_top(inner, ',')
                .iter()
                .map(|p| {
                    let v = Lin::parse(p)?;
                    Ok(Constraint { expr, lo: Some(v), hi: Some(v) })
                })
                .collect();
        }
        return Err(Error::Parse(format!("`{rhs}` is neither [a, b] nor {{a, ..}}")));
    }
    for (op, lo_side, shift) in [(">=", true, 0), ("<=", false, 0), (">", true, 1), ("<", false, -1)] {
        if let Some((lhs, rhs)) = atom.split_once(op) {
            let expr = Lin::parse(lhs)?;
            let mut bound = Lin::parse(rhs)?;
            bound.0[7] += shift;
            return Ok(vec![if lo_side {
                Constraint { expr, lo: Some(bound), hi: None }
            } else {
                Constraint { expr, lo: None, hi: Some(bound) }
            }]);
        }
    }
    if let Some((lhs, rhs)) = atom.split_once('=') {
        let expr = Lin::parse(lhs)?;
        let v = Lin::parse(rhs)?;
        return Ok(vec![Constraint { expr, lo: Some(v), hi: Some(v) }]);
    }
    Err(Error::Parse(format!("cannot parse constraint `{atom}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(h: i64, k: i64, x: i64, y: i64, z: i64) -> Env {
        Env { h, k, x, y, z }
    }

    #[test]
    fn parses_formula_shapes() {
        let e = env(3, 10, 1, 0, 0);
        assert_eq!(Lin::parse("hk-h^2+x+1").unwrap().eval(&e), 23);
        assert_eq!(Lin::parse("(h+1)k-h^2-x+1").unwrap().eval(&env(3, 10, 9, 0, 0)), 23);
        assert_eq!(Lin::parse("hk-h(h-1)+x+1").unwrap().eval(&e), 30 - 6 + 2);
        assert_eq!(Lin::parse("hk-h(h-3)-2").unwrap().eval(&env(4, 16, 0, 0, 0)), 64 - 4 - 2);
        assert_eq!(Lin::parse("(h+3)k-h^2-(2x+z)+3").unwrap().eval(&env(4, 16, 13, 0, 15)), 112 - 16 - 41 + 3);
        assert_eq!(Lin::parse("3k-4").unwrap().eval(&env(3, 13, 0, 0, 0)), 35);
        assert_eq!(Lin::parse("2(k+1-y)").unwrap().eval(&env(0, 10, 0, 4, 0)), 14);
        assert_eq!(Lin::parse("-h^2 + 2*h*k").unwrap(), Lin::parse("2hk-h^2").unwrap());
    }

    #[test]
    fn rejects_nonlinear_and_garbage() {
        assert!(Lin::parse("x*y").is_err());
        assert!(Lin::parse("h^3").is_err());
        assert!(Lin::parse("k^2").is_err());
        assert!(Lin::parse("h+").is_err());
        assert!(Lin::parse("q").is_err());
        assert!(Lin::parse("(h+1").is_err());
    }

    #[test]
    fn renders() {
        assert_eq!(Lin::parse("(h+1)k-h^2-x+1").unwrap().to_string(), "hk+k-h^2-x+1");
        assert_eq!(Lin::parse("0").unwrap().to_string(), "0");
        assert_eq!(Lin::parse("-2x").unwrap().to_string(), "-2x");
    }

    #[test]
    fn domains() {
        let d = Domain::parse("x in {h, k-h}").unwrap();
        assert_eq!(d.any_of.len(), 2);
        assert!(d.holds(&env(3, 10, 3, 0, 0)));
        assert!(d.holds(&env(3, 10, 7, 0, 0)));
        assert!(!d.holds(&env(3, 10, 4, 0, 0)));

        let d = Domain::parse("h >= 6; x in [3, h-3]; y in [6, h]").unwrap();
        assert!(d.holds(&env(6, 21, 3, 6, 0)));
        assert!(!d.holds(&env(5, 21, 3, 6, 0)));

        let d = Domain::parse("x = 2; z in {5, 6, 7, k-1, k} | x = 3; z in [6, k-2]").unwrap();
        assert_eq!(d.any_of.len(), 6);
        assert!(d.holds(&env(3, 13, 2, 0, 12)));
        assert!(d.holds(&env(3, 13, 3, 0, 11)));
        assert!(!d.holds(&env(3, 13, 3, 0, 12)));

        let d = Domain::parse("y - x >= 3; x < y; y <= k-2").unwrap();
        assert!(d.holds(&env(3, 12, 3, 6, 0)));
        assert!(!d.holds(&env(3, 12, 3, 5, 0)));
        assert_eq!(d.distance(&env(3, 12, 3, 5, 0)), 1);

        let d = Domain::parse_except("x in [1, 5]", "x = 3").unwrap();
        assert!(d.holds(&env(0, 0, 2, 0, 0)));
        assert!(!d.holds(&env(0, 0, 3, 0, 0)));
        assert!(d.first_violation(&env(0, 0, 3, 0, 0)).unwrap().starts_with("excluded"));
        assert_eq!(d.first_violation(&env(0, 0, 7, 0, 0)).unwrap(), "1 <= x <= 5");
    }

    #[test]
    fn constraint_rendering() {
        let d = Domain::parse("x in [1, h-1]; z = k+1; y >= 4").unwrap();
        assert_eq!(d.render(), vec![vec!["1 <= x <= h-1", "z = k+1", "y >= 4"]]);
        assert!(d.any_of[0].iter().all(|c| !c.is_regime()));
        assert!(Domain::parse("h >= 4").unwrap().any_of[0][0].is_regime());
    }

    #[test]
    fn target_expressions() {
        let e = Env { h: 3, k: 10, ..Env::default() };
        assert_eq!(parse_target("hk-h2+2").unwrap().eval(&e), 23);
        assert_eq!(parse_target("hk-h^2+1").unwrap().eval(&e), 22);
        assert_eq!(parse_target("3k-6").unwrap().eval(&e), 24);
        assert_eq!(parse_target("30").unwrap().eval(&e), 30);
        assert!(parse_target("hk-x").is_err());
        assert!(parse_target("hk-h2+").is_err());
        assert!(parse_target("k^2").is_err());
    }
}
