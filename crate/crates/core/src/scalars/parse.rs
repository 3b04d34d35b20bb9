//! Scalar literal parser.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' exponent)?
//! exponent := '-'? integer | '(' '-'? integer ')'
//! atom  := integer | parameter | 'z' | '(' expr ')'
//! ```
//!
//! `-q^2` parses as `-(q^2)`; `z` denotes ζ_N.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::scalar::{Field, Scalar};
use super::ScalarError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ScalarError::Parse { pos: i, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a Field,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ScalarError> {
        Err(ScalarError::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.offset();
                self.pos += 1;
                let d = self.unary()?;
                acc = acc
                    .checked_div(&d)
                    .map_err(|_| ScalarError::Parse { pos: at, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar, ScalarError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn exponent(&mut self) -> Result<i64, ScalarError> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                match i64::try_from(&n) {
                    Ok(v) if v <= i32::MAX as i64 => v,
                    _ => return self.err("exponent too large"),
                }
            }
            _ => return self.err("expected integer exponent"),
        };
        if paren && !self.eat(')') {
            return self.err("expected ')'");
        }
        Ok(if neg { -e } else { e })
    }

    fn power(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.offset();
            let e = self.exponent()?;
            if e < 0 && base.is_zero() {
                return Err(ScalarError::Parse { pos: at, msg: "negative power of zero".into() });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.field.rational(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                let at = self.offset();
                self.pos += 1;
                if name == "z" {
                    return Ok(self.field.zeta(1));
                }
                self.field.param(&name).map_err(|_| ScalarError::Parse {
                    pos: at,
                    msg: format!("unknown parameter {name:?}"),
                })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(crate) fn parse(field: &Field, s: &str) -> Result<Scalar, ScalarError> {
    let toks = lex(s)?;
    let mut p = Parser { field, toks, pos: 0, len: s.len() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::super::FieldSpec;
    use super::*;

    fn field() -> Field {
        Field::new(FieldSpec::new(4, &["q", "t"])).unwrap()
    }

    #[test]
    fn literals() {
        let f = field();
        let q = f.param("q").unwrap();
        assert_eq!(f.parse("q^2").unwrap(), q.pow(2));
        assert_eq!(f.parse("-q^2").unwrap(), -q.pow(2));
        assert_eq!(f.parse("(q-1)/(q+1)").unwrap(), (&q - &f.one()) / (&q + &f.one()));
        assert_eq!(f.parse("z^2*q^-1").unwrap(), &f.int(-1) * &q.inv().unwrap());
        assert_eq!(f.parse("q^(-2)").unwrap(), q.pow(-2));
        assert_eq!(f.parse("3/2").unwrap().to_string(), "3/2");
    }

    #[test]
    fn errors() {
        let f = field();
        assert!(f.parse("x").is_err());
        assert!(f.parse("1/0").is_err());
        assert!(f.parse("q^").is_err());
        assert!(f.parse("(q").is_err());
        assert!(f.parse("q q").is_err());
        assert!(f.parse("q$").is_err());
    }

    #[test]
    fn printed_forms_reparse() {
        let f = field();
        for s in ["q/(q^2 - 1)", "(z + 1)*q^-1 - t", "(q - t)/(q*t + z)", "-3/2*q*t^-2", "z"] {
            let v = f.parse(s).unwrap();
            assert_eq!(f.parse(&v.to_string()).unwrap(), v, "{s} -> {v}");
        }
    }
}
