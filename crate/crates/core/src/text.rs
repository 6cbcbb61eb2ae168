//! Text grammar for polynomials and differential forms.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'^') factor)*
//! factor := ('+'|'-') factor | atom ['^' INT]
//! atom   := INT ['/' INT] | 'x'INT | 'dx'INT | '(' expr ')'
//!         | 'iR(' expr ')' | 'd(' expr ')'
//! ```
//!
//! `*` and `^` both denote the exterior product (ordinary multiplication on
//! functions); a `^` directly followed by an integer is an exponent.
//! `iR(…)` contracts with the radial field and `d(…)` is the exterior
//! derivative. Example: `x0*dx1 - x1*dx0 + (x2^2 + x3^2)*dx0^dx2`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::forms::DiffForm;
use crate::poly::Poly;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable x{index} at position {position} out of range for {n_vars} variables")]
    VariableOutOfRange {
        index: usize,
        n_vars: usize,
        position: usize,
    },
    #[error("expression mixes form degrees {0:?}")]
    MixedFormDegrees(Vec<usize>),
    #[error("coefficients are not homogeneous of a common degree")]
    Inhomogeneous,
    #[error("expected a polynomial, found a form of degree {0}")]
    NotAPolynomial(usize),
}

/// Parses a differential form over `n_vars` variables. The result must have a
/// single form degree and homogeneous coefficients of a common degree.
pub fn parse_form(text: &str, n_vars: usize) -> Result<DiffForm, ParseError> {
    let value = Parser::new(text, n_vars).parse_all()?;
    let nonzero: Vec<usize> = value
        .parts
        .iter()
        .filter(|(_, f)| !f.is_zero())
        .map(|(q, _)| *q)
        .collect();
    let form = match nonzero.as_slice() {
        [] => DiffForm::zero(n_vars, value.parts.keys().copied().max().unwrap_or(0)),
        [q] => value.parts[q].clone(),
        qs => return Err(ParseError::MixedFormDegrees(qs.to_vec())),
    };
    if !form.is_homogeneous() {
        return Err(ParseError::Inhomogeneous);
    }
    Ok(form)
}

/// Parses a polynomial (not necessarily homogeneous).
pub fn parse_poly(text: &str, n_vars: usize) -> Result<Poly, ParseError> {
    let value = Parser::new(text, n_vars).parse_all()?;
    let mut out = Poly::zero(n_vars);
    for (q, f) in &value.parts {
        if f.is_zero() {
            continue;
        }
        if *q != 0 {
            return Err(ParseError::NotAPolynomial(*q));
        }
        out = out + f.coefficient(&[]);
    }
    Ok(out)
}

/// Parses a polynomial and demands that it is homogeneous.
pub fn parse_homogeneous_poly(text: &str, n_vars: usize) -> Result<Poly, ParseError> {
    let p = parse_poly(text, n_vars)?;
    if !p.is_homogeneous() {
        return Err(ParseError::Inhomogeneous);
    }
    Ok(p)
}

/// Largest `k` such that `x<k>` or `dx<k>` appears in `text`, if any.
pub fn max_variable_index(text: &str) -> Option<usize> {
    let bytes = text.as_bytes();
    let mut best = None;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let start = i + 1;
            let mut j = start;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if j > start {
                if let Ok(k) = text[start..j].parse::<usize>() {
                    best = Some(best.map_or(k, |b: usize| b.max(k)));
                }
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

/// A sum of forms of possibly different degrees, keyed by degree.
#[derive(Debug, Clone)]
struct Mixed {
    parts: BTreeMap<usize, DiffForm>,
}

impl Mixed {
    fn single(f: DiffForm) -> Self {
        let mut parts = BTreeMap::new();
        parts.insert(f.degree(), f);
        Mixed { parts }
    }

    fn add(mut self, other: Mixed) -> Mixed {
        for (q, f) in other.parts {
            match self.parts.remove(&q) {
                Some(g) => {
                    self.parts.insert(q, &g + &f);
                }
                None => {
                    self.parts.insert(q, f);
                }
            }
        }
        self
    }

    fn neg(self) -> Mixed {
        Mixed {
            parts: self.parts.into_iter().map(|(q, f)| (q, -&f)).collect(),
        }
    }

    fn wedge(&self, other: &Mixed) -> Mixed {
        let mut out = Mixed {
            parts: BTreeMap::new(),
        };
        for a in self.parts.values() {
            for b in other.parts.values() {
                let w = a.wedge(b).expect("parser uses one variable count");
                out = out.add(Mixed::single(w));
            }
        }
        out
    }

    fn map(self, f: impl Fn(&DiffForm) -> DiffForm) -> Mixed {
        let mut out = Mixed {
            parts: BTreeMap::new(),
        };
        for g in self.parts.values() {
            out = out.add(Mixed::single(f(g)));
        }
        out
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n_vars: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, n_vars: usize) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            n_vars,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.pos,
            message: message.into(),
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

    fn starts_with(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(s.as_bytes())
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let pos = self.pos;
        let v = self.integer()?;
        let idx: usize = match v.try_into() {
            Ok(i) => i,
            Err(_) => return self.err("index too large"),
        };
        if idx >= self.n_vars {
            return Err(ParseError::VariableOutOfRange {
                index: idx,
                n_vars: self.n_vars,
                position: pos,
            });
        }
        Ok(idx)
    }

    fn parse_all(mut self) -> Result<Mixed, ParseError> {
        let v = self.expr()?;
        if self.peek().is_some() {
            return self.err("unexpected trailing input");
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Mixed, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Mixed, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') | Some(b'^') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.wedge(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Mixed, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                return Ok(self.factor()?.neg());
            }
            Some(b'+') => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.atom()?;
        // exponent: '^' immediately followed (modulo spaces) by a digit
        if self.peek() == Some(b'^') {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                let e = self.integer()?;
                let e: u32 = match e.try_into() {
                    Ok(e) => e,
                    Err(_) => return self.err("exponent too large"),
                };
                let mut acc = Mixed::single(DiffForm::function(Poly::one(self.n_vars)));
                for _ in 0..e {
                    acc = acc.wedge(&base);
                }
                return Ok(acc);
            }
            self.pos = save;
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Mixed, ParseError> {
        let n = self.n_vars;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from_integer(num)
                };
                Ok(Mixed::single(DiffForm::function(Poly::constant(n, value))))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'x') => {
                self.pos += 1;
                let i = self.index()?;
                Ok(Mixed::single(DiffForm::function(Poly::var(n, i))))
            }
            Some(b'd') if self.starts_with("dx") => {
                self.pos += 2;
                let i = self.index()?;
                Ok(Mixed::single(DiffForm::dx(n, i)))
            }
            Some(b'd') if self.starts_with("d(") => {
                self.pos += 2;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v.map(DiffForm::exterior_derivative))
            }
            Some(b'i') if self.starts_with("iR(") => {
                self.pos += 3;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v.map(DiffForm::radial_contraction))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Convenience: a rational from `p/q` or `p` text.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let mut parser = Parser::new(body, 0);
    let num = parser.integer()?;
    let value = if parser.peek() == Some(b'/') {
        parser.pos += 1;
        let den = parser.integer()?;
        if den.is_zero() {
            return parser.err("zero denominator");
        }
        Rational::new(num, den)
    } else {
        Rational::from_integer(num)
    };
    if parser.peek().is_some() {
        return parser.err("unexpected trailing input");
    }
    Ok(if neg { -value } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pencil_form() {
        let f = parse_form("x0*dx1 - x1*dx0", 3).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.coefficient(&[1]), Poly::var(3, 0));
        assert_eq!(f.coefficient(&[0]), -Poly::var(3, 1));
    }

    #[test]
    fn repeated_differential_collapses() {
        let f = parse_form("dx0^dx0", 2).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn mixed_coefficient_degrees_rejected() {
        assert_eq!(
            parse_form("x0*dx1 + dx0", 2),
            Err(ParseError::Inhomogeneous)
        );
    }

    #[test]
    fn mixed_form_degrees_rejected() {
        assert!(matches!(
            parse_form("x0 + dx0", 2),
            Err(ParseError::MixedFormDegrees(_))
        ));
    }

    #[test]
    fn syntax_error_reports_position() {
        match parse_form("x0 * * dx1", 2) {
            Err(ParseError::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_poly("x7", 3),
            Err(ParseError::VariableOutOfRange { index: 7, .. })
        ));
    }

    #[test]
    fn exponents_and_wedges_share_the_caret() {
        let f = parse_form("x0^2*dx1^dx2", 3).unwrap();
        assert_eq!(f.coefficient(&[1, 2]), Poly::var(3, 0).pow(2));
        let g = parse_form("(x0 + x1)^2 ^ dx0", 2).unwrap();
        assert_eq!(g.coefficient(&[0]), parse_poly("x0^2 + 2*x0*x1 + x1^2", 2).unwrap());
    }

    #[test]
    fn radial_contraction_and_derivative_operators() {
        let f = parse_form("iR(dx0^dx1 + dx2^dx3)", 4).unwrap();
        assert_eq!(f, parse_form("x0*dx1 - x1*dx0 + x2*dx3 - x3*dx2", 4).unwrap());
        let g = parse_form("d(x0*dx1)", 2).unwrap();
        assert_eq!(g, parse_form("dx0^dx1", 2).unwrap());
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("-3/6").unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert!(parse_rational("1/0").is_err());
        assert_eq!(parse_poly("3/2*x0", 1).unwrap().to_string(), "3/2*x0");
    }

    #[test]
    fn homogeneous_poly_demanded() {
        assert!(parse_homogeneous_poly("x0^2 + x1", 2).is_err());
        assert!(parse_homogeneous_poly("x0^2 + x1^2", 2).is_ok());
    }

    #[test]
    fn max_index() {
        assert_eq!(max_variable_index("x0*dx3 - x2"), Some(3));
        assert_eq!(max_variable_index("1 + 2"), None);
    }
}
