//! Line-oriented problem files:
//!
//! ```text
//! # comment
//! ring Q[x,y,z,w]
//! I = (x*w - y*z, x^2, z^2)
//! m = maximal
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use idealpow_core::{Ideal, Poly, Ring};

use crate::parse::{parse_polynomial, parse_ring, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {error}")]
pub struct ProblemError {
    pub line: usize,
    pub error: ParseError,
}

#[derive(Debug, Clone)]
pub struct Problem {
    pub ring: Arc<Ring>,
    pub ideals: BTreeMap<String, Ideal>,
}

impl Problem {
    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.get(name)
    }
}

fn syntax(line: usize, position: usize, message: &str) -> ProblemError {
    ProblemError { line, error: ParseError::Syntax { position, message: message.into() } }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits on commas outside parentheses.
fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &s[start..]));
    parts
}

fn parse_ideal(line: usize, offset: usize, text: &str, ring: &Arc<Ring>) -> Result<Ideal, ProblemError> {
    let trimmed = text.trim();
    let lead = offset + (text.len() - text.trim_start().len());
    if trimmed == "maximal" {
        return Ok(Ideal::maximal(ring));
    }
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| syntax(line, lead, "expected `(generators)` or `maximal`"))?;
    let mut gens: Vec<Poly> = Vec::new();
    if inner.trim().is_empty() {
        return Ok(Ideal::zero(ring));
    }
    for (start, part) in split_top_level(inner) {
        let p = parse_polynomial(part, ring).map_err(|e| {
            let e = match e {
                ParseError::Syntax { position, message } => ParseError::Syntax { position: lead + 1 + start + position, message },
                other => other,
            };
            ProblemError { line, error: e }
        })?;
        gens.push(p);
    }
    Ok(Ideal::new(ring, gens).expect("parsed in the same ring"))
}

pub fn parse_problem(text: &str) -> Result<Problem, ProblemError> {
    let mut ring: Option<Arc<Ring>> = None;
    let mut ideals = BTreeMap::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let body = content.trim_start();
        if let Some(rest) = body.strip_prefix("ring").filter(|r| r.starts_with(char::is_whitespace)) {
            if ring.is_some() {
                return Err(syntax(line, lead, "ring declared twice"));
            }
            ring = Some(parse_ring(rest).map_err(|error| ProblemError { line, error })?);
            continue;
        }
        let Some(r) = &ring else {
            return Err(syntax(line, lead, "the ring must be declared first"));
        };
        let Some(eq) = body.find('=') else {
            return Err(syntax(line, lead, "expected `name = ideal`"));
        };
        let name = body[..eq].trim();
        if !is_identifier(name) {
            return Err(syntax(line, lead, "invalid ideal name"));
        }
        if ideals.contains_key(name) {
            return Err(syntax(line, lead, "ideal defined twice"));
        }
        let ideal = parse_ideal(line, lead + eq + 1, &body[eq + 1..], r)?;
        ideals.insert(name.to_string(), ideal);
    }
    let ring = ring.ok_or_else(|| syntax(1, 0, "missing ring declaration"))?;
    Ok(Problem { ring, ideals })
}
