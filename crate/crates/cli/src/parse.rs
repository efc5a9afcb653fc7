//! Text grammar for rings and polynomials.
//!
//! ```text
//! ring  := ('Q' | 'F' digits) '[' ident (',' ident)* ']' ('order=' ('lex' | 'degrevlex'))?
//! expr  := ('+' | '-')? term (('+' | '-') term)*
//! term  := power (('*' | '/') power)*
//! power := atom ('^' digits)?
//! atom  := digits | ident | '(' expr ')'
//! ```
//!
//! Division is only allowed by a nonzero integer, so rendered rational coefficients
//! such as `1/2*x` read back unchanged.

use std::sync::Arc;

use idealpow_core::{FieldSpec, MonomialOrder, Poly, Ring};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at column {}: {message}", position + 1)]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable name `{0}` is reserved")]
    ReservedVariableName(String),
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("exponent or degree overflow at column {}", .0 + 1)]
    Overflow(usize),
    #[error("{0}")]
    Ring(idealpow_core::Error),
}

pub type ParseResult<T> = Result<T, ParseError>;

/// `s` and `t` followed by digits are used for auxiliary variables.
pub fn is_reserved(name: &str) -> bool {
    name == "s" || (name.len() > 1 && name.starts_with('t') && name[1..].bytes().all(|b| b.is_ascii_digit()))
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> ParseResult<T> {
        Err(ParseError::Syntax { position: self.pos, message: message.into() })
    }

    fn expect(&mut self, c: char) -> ParseResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected `{c}`"))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn ident(&mut self) -> ParseResult<&'a str> {
        self.skip_ws();
        match self.text[self.pos..].chars().next() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                Ok(self.take_while(|c| c.is_ascii_alphanumeric() || c == '_'))
            }
            _ => self.error("expected an identifier"),
        }
    }

    fn digits(&mut self) -> ParseResult<&'a str> {
        self.skip_ws();
        let d = self.take_while(|c| c.is_ascii_digit());
        if d.is_empty() {
            return self.error("expected digits");
        }
        Ok(d)
    }

    fn finish(&mut self) -> ParseResult<()> {
        if self.peek().is_some() {
            return self.error("unexpected trailing input");
        }
        Ok(())
    }
}

pub fn parse_ring(text: &str) -> ParseResult<Arc<Ring>> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let field = match cur.peek() {
        Some('Q') => {
            cur.pos += 1;
            FieldSpec::Rationals
        }
        Some('F') => {
            cur.pos += 1;
            let start = cur.pos;
            let digits = cur.digits()?;
            let p: u64 = digits.parse().map_err(|_| ParseError::Overflow(start))?;
            FieldSpec::prime(p).map_err(|_| ParseError::NonPrimeCharacteristic(p))?
        }
        _ => return cur.error("expected `Q` or `F<prime>`"),
    };
    cur.expect('[')?;
    let mut names: Vec<String> = Vec::new();
    loop {
        let start = cur.pos;
        let name = cur.ident()?;
        if is_reserved(name) {
            return Err(ParseError::ReservedVariableName(name.to_string()));
        }
        if names.iter().any(|n| n == name) {
            cur.pos = start;
            return cur.error(format!("duplicate variable `{name}`"));
        }
        names.push(name.to_string());
        if cur.eat(']') {
            break;
        }
        cur.expect(',')?;
    }
    let mut order = MonomialOrder::DegRevLex;
    if cur.peek().is_some() {
        let key = cur.ident()?;
        if key != "order" {
            return cur.error("expected `order=`");
        }
        cur.expect('=')?;
        order = match cur.ident()? {
            "lex" => MonomialOrder::Lex,
            "degrevlex" => MonomialOrder::DegRevLex,
            _ => return cur.error("unknown monomial order"),
        };
    }
    cur.finish()?;
    Ring::new(field, names, order).map_err(ParseError::Ring)
}

pub fn parse_polynomial(text: &str, ring: &Arc<Ring>) -> ParseResult<Poly> {
    let mut parser = PolyParser { cur: Cursor::new(text), ring };
    let p = parser.expr()?;
    parser.cur.finish()?;
    Ok(p)
}

struct PolyParser<'a, 'r> {
    cur: Cursor<'a>,
    ring: &'r Arc<Ring>,
}

fn degree(p: &Poly) -> u64 {
    u64::from(p.total_degree().unwrap_or(0))
}

impl PolyParser<'_, '_> {
    fn expr(&mut self) -> ParseResult<Poly> {
        let negate = if self.cur.eat('-') {
            true
        } else {
            self.cur.eat('+');
            false
        };
        let first = self.term()?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            if self.cur.eat('+') {
                acc = acc.add(&self.term()?).expect("same ring");
            } else if self.cur.eat('-') {
                acc = acc.sub(&self.term()?).expect("same ring");
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> ParseResult<Poly> {
        let mut acc = self.power()?;
        loop {
            let at = self.cur.pos;
            if self.cur.eat('*') {
                let rhs = self.power()?;
                if degree(&acc) + degree(&rhs) > u64::from(u32::MAX) {
                    return Err(ParseError::Overflow(at));
                }
                acc = acc.mul(&rhs).expect("same ring");
            } else if self.cur.eat('/') {
                self.cur.skip_ws();
                let start = self.cur.pos;
                let n: BigInt = self.cur.digits()?.parse().expect("digits");
                let c = self.ring.field().from_bigint(&n);
                let inv = c.inv().map_err(|_| ParseError::Syntax { position: start, message: "division by zero".into() })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> ParseResult<Poly> {
        let base = self.atom()?;
        if !self.cur.eat('^') {
            return Ok(base);
        }
        self.cur.skip_ws();
        let start = self.cur.pos;
        let e: u32 = self.cur.digits()?.parse().map_err(|_| ParseError::Overflow(start))?;
        if e == 0 {
            return Err(ParseError::Syntax { position: start, message: "exponents must be positive".into() });
        }
        if degree(&base) * u64::from(e) > u64::from(u32::MAX) {
            return Err(ParseError::Overflow(start));
        }
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> ParseResult<Poly> {
        match self.cur.peek() {
            Some('(') => {
                self.cur.pos += 1;
                let inner = self.expr()?;
                self.cur.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.cur.digits()?.parse().expect("digits");
                Ok(Poly::constant(self.ring, self.ring.field().from_bigint(&n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.cur.ident()?;
                let i = self.ring.var_index(name).ok_or_else(|| ParseError::UnknownVariable(name.to_string()))?;
                Ok(Poly::variable(self.ring, i))
            }
            Some(_) => self.cur.error("expected a number, variable or `(`"),
            None => self.cur.error("unexpected end of input"),
        }
    }
}
