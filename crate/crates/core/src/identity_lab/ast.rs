//! Graded polynomial expressions in the signature `(+, ·, p₀, p₂)`.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := [rational '*'] factor ('*' factor)*
//! factor := 'p' grade '(' expr ')' | '(' expr ')' | var
//! var    := name grade
//! ```
//!
//! Products are left-associative. A variable is an identifier whose last
//! character is its grade digit.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::constructions::GradeSet;
use crate::error::{Error, Result};
use crate::exactlin::{format_rational_short, parse_rational};
use crate::Rational;

/// A variable: name and grade.
pub type Var = (String, u8);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaPoly {
    Var { name: String, grade: u8 },
    Sum(Vec<DeltaPoly>),
    Scale(Rational, Box<DeltaPoly>),
    Mul(Box<DeltaPoly>, Box<DeltaPoly>),
    Proj(u8, Box<DeltaPoly>),
}

impl DeltaPoly {
    pub fn var(name: &str, grade: u8) -> Self {
        DeltaPoly::Var {
            name: name.to_string(),
            grade,
        }
    }

    pub fn mul(a: DeltaPoly, b: DeltaPoly) -> Self {
        DeltaPoly::Mul(Box::new(a), Box::new(b))
    }

    pub fn proj(g: u8, a: DeltaPoly) -> Self {
        DeltaPoly::Proj(g, Box::new(a))
    }

    pub fn scale(c: Rational, a: DeltaPoly) -> Self {
        DeltaPoly::Scale(c, Box::new(a))
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            DeltaPoly::Var { name, grade } => {
                out.insert((name.clone(), *grade));
            }
            DeltaPoly::Sum(ts) => ts.iter().for_each(|t| t.collect_vars(out)),
            DeltaPoly::Scale(_, a) | DeltaPoly::Proj(_, a) => a.collect_vars(out),
            DeltaPoly::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Replaces each variable by `f(variable)`.
    pub fn rename(&self, f: &impl Fn(&Var) -> Var) -> DeltaPoly {
        match self {
            DeltaPoly::Var { name, grade } => {
                let (name, grade) = f(&(name.clone(), *grade));
                DeltaPoly::Var { name, grade }
            }
            DeltaPoly::Sum(ts) => DeltaPoly::Sum(ts.iter().map(|t| t.rename(f)).collect()),
            DeltaPoly::Scale(c, a) => DeltaPoly::Scale(c.clone(), Box::new(a.rename(f))),
            DeltaPoly::Proj(g, a) => DeltaPoly::Proj(*g, Box::new(a.rename(f))),
            DeltaPoly::Mul(a, b) => DeltaPoly::Mul(Box::new(a.rename(f)), Box::new(b.rename(f))),
        }
    }

    fn is_additive(&self) -> bool {
        matches!(self, DeltaPoly::Sum(_) | DeltaPoly::Scale(..))
    }
}

fn fmt_term(e: &DeltaPoly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if e.is_additive() {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for DeltaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaPoly::Var { name, grade } => write!(f, "{name}{grade}"),
            DeltaPoly::Sum(ts) if ts.is_empty() => write!(f, "0"),
            DeltaPoly::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    match t {
                        DeltaPoly::Scale(c, a) if i > 0 && c.is_negative() => {
                            write!(f, " - ")?;
                            DeltaPoly::Scale(-c.clone(), a.clone()).fmt_scaled(f)?;
                        }
                        _ if i > 0 => {
                            write!(f, " + ")?;
                            t.fmt_scaled(f)?;
                        }
                        _ => t.fmt_scaled(f)?,
                    }
                }
                Ok(())
            }
            DeltaPoly::Scale(..) => self.fmt_scaled(f),
            DeltaPoly::Mul(a, b) => {
                fmt_term(a, f)?;
                write!(f, "*")?;
                if matches!(**b, DeltaPoly::Mul(..)) || b.is_additive() {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            DeltaPoly::Proj(g, a) => write!(f, "p{g}({a})"),
        }
    }
}

impl DeltaPoly {
    /// A term inside a sum: `c*body`, `-body` or `body`.
    fn fmt_scaled(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaPoly::Scale(c, a) => {
                if c.is_one() {
                } else if (-c.clone()).is_one() {
                    write!(f, "-")?;
                } else {
                    write!(f, "{}*", format_rational_short(c))?;
                }
                fmt_term(a, f)
            }
            DeltaPoly::Sum(_) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    grades: GradeSet,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn expr(&mut self) -> Result<DeltaPoly> {
        let neg = self.eat(b'-');
        let first = self.term()?;
        let mut terms = vec![if neg { negate(first) } else { first }];
        loop {
            if self.eat(b'+') {
                terms.push(self.term()?);
            } else if self.eat(b'-') {
                let t = self.term()?;
                terms.push(negate(t));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            DeltaPoly::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<DeltaPoly> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                self.digits();
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    self.digits();
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let Some(q) = parse_rational(text) else {
                    self.pos = start;
                    return self.err(format!("bad coefficient '{text}'"));
                };
                if q.is_zero() && self.peek() != Some(b'*') {
                    return Ok(DeltaPoly::Sum(vec![]));
                }
                self.expect(b'*')?;
                Some(q)
            }
            _ => None,
        };
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let rhs = self.factor()?;
            acc = DeltaPoly::mul(acc, rhs);
        }
        Ok(match coeff {
            Some(c) => DeltaPoly::scale(c, acc),
            None => acc,
        })
    }

    fn digits(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
    }

    fn grade(&self, g: u8, at: usize) -> Result<u8> {
        if self.grades.contains(g) {
            Ok(g)
        } else {
            Err(Error::Parse {
                pos: at,
                msg: format!("grade {g} not in {}", self.grades),
            })
        }
    }

    fn factor(&mut self) -> Result<DeltaPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let ident = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let is_proj = ident.len() >= 2 && ident.starts_with('p') && ident[1..].bytes().all(|b| b.is_ascii_digit());
                if is_proj && self.peek() == Some(b'(') {
                    let g: u8 = ident[1..].parse().map_err(|_| Error::Parse {
                        pos: start,
                        msg: format!("bad projection '{ident}'"),
                    })?;
                    let g = self.grade(g, start)?;
                    self.pos += 1;
                    let e = self.expr()?;
                    self.expect(b')')?;
                    return Ok(DeltaPoly::proj(g, e));
                }
                let last = ident.as_bytes()[ident.len() - 1];
                if ident.len() < 2 || !last.is_ascii_digit() {
                    return Err(Error::Parse {
                        pos: start,
                        msg: format!("variable '{ident}' needs a name and a trailing grade digit"),
                    });
                }
                let g = self.grade(last - b'0', start + ident.len() - 1)?;
                Ok(DeltaPoly::var(&ident[..ident.len() - 1], g))
            }
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn negate(e: DeltaPoly) -> DeltaPoly {
    match e {
        DeltaPoly::Scale(c, a) => DeltaPoly::Scale(-c, a),
        other => DeltaPoly::scale(-Rational::one(), other),
    }
}

/// Parses one identity over the given grade set.
pub fn parse_delta(src: &str, grades: GradeSet) -> Result<DeltaPoly> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        grades,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// One identity per line; `#` starts a comment.
pub fn parse_identity_file(text: &str, grades: GradeSet) -> Result<Vec<DeltaPoly>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        out.push(parse_delta(body, grades).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse {
                pos,
                msg: format!("line {}: {msg}", n + 1),
            },
            other => other,
        })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_of_product() {
        let e = parse_delta("p2(x2*y2)", GradeSet::Delta).unwrap();
        assert_eq!(e, DeltaPoly::proj(2, DeltaPoly::mul(DeltaPoly::var("x", 2), DeltaPoly::var("y", 2))));
    }

    #[test]
    fn bad_grade_rejected() {
        match parse_delta("p3(x2)", GradeSet::Delta) {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 0);
                assert!(msg.contains("grade 3"));
            }
            other => panic!("{other:?}"),
        }
        assert!(parse_delta("x3", GradeSet::Delta).is_err());
        assert!(parse_delta("x", GradeSet::Delta).is_err());
        assert!(parse_delta("x2 +", GradeSet::Delta).is_err());
    }

    #[test]
    fn printer_round_trip() {
        for s in [
            "6*p0(x2*y2)*z2 - p2(p2(x2*y2)*z2) - p2(p2(z2*y2)*x2) - p2(p2(x2*z2)*y2)",
            "x0*(y0*z0) - 3/2*x2",
            "-(x2 + y2)*z0",
        ] {
            let e = parse_delta(s, GradeSet::Delta).unwrap();
            let again = parse_delta(&e.to_string(), GradeSet::Delta).unwrap();
            assert_eq!(e, again, "{s} -> {e}");
        }
    }
}
