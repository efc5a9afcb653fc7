#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::Arc;

use idealpow_core::{FieldElement, FieldSpec, Ideal, Monomial, MonomialOrder, Poly, Ring};
use num_bigint::BigInt;

pub fn ring(field: FieldSpec, names: &[&str]) -> Arc<Ring> {
    Ring::new(field, names.iter().map(|s| s.to_string()).collect(), MonomialOrder::DegRevLex).unwrap()
}

pub fn ring_with(field: FieldSpec, names: &[&str], order: MonomialOrder) -> Arc<Ring> {
    Ring::new(field, names.iter().map(|s| s.to_string()).collect(), order).unwrap()
}

pub fn q(names: &[&str]) -> Arc<Ring> {
    ring(FieldSpec::Rationals, names)
}

/// Reads sums of terms like `3*x^2*y - y^3 + 1`; no parentheses.
pub fn p(r: &Arc<Ring>, text: &str) -> Poly {
    let mut terms = Vec::new();
    let text = text.replace(' ', "");
    let mut rest = text.as_str();
    while !rest.is_empty() {
        let negative = rest.starts_with('-');
        if rest.starts_with('-') || rest.starts_with('+') {
            rest = &rest[1..];
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let mut coeff = BigInt::from(1);
        let mut exps = vec![0u32; r.nvars()];
        for factor in term.split('*') {
            if let Ok(n) = factor.parse::<BigInt>() {
                coeff *= n;
                continue;
            }
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().unwrap()),
                None => (factor, 1),
            };
            let i = r.var_index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
            exps[i] += e;
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((r.field().from_bigint(&coeff), Monomial::new(exps)));
    }
    let mut acc = Poly::zero(r);
    for (c, m) in terms {
        acc = acc.add(&Poly::term(r, c, m)).unwrap();
    }
    acc
}

pub fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| p(r, g)).collect()).unwrap()
}

pub fn all_monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in all_monomials(nvars - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Membership by linear algebra: the span of `m * g` over generators `g` and monomials
/// `m` with `deg(m * g) <= bound`, reduced by Gaussian elimination over the field.
pub struct SpanOracle {
    field: FieldSpec,
    // pivot column -> row, each row a sparse map with pivot coefficient 1
    pivots: HashMap<Vec<u32>, HashMap<Vec<u32>, FieldElement>>,
}

impl SpanOracle {
    pub fn new(ideal: &Ideal, bound: u32) -> Self {
        let r = ideal.ring();
        let mut oracle = SpanOracle { field: r.field(), pivots: HashMap::new() };
        for g in ideal.generators() {
            let dg = g.total_degree().unwrap();
            for d in 0..=bound.saturating_sub(dg) {
                for m in all_monomials(r.nvars(), d) {
                    let mut row: HashMap<Vec<u32>, FieldElement> = HashMap::new();
                    for t in g.terms() {
                        let e: Vec<u32> = t.monomial.exponents().iter().zip(&m).map(|(a, b)| a + b).collect();
                        row.insert(e, t.coeff.clone());
                    }
                    oracle.insert(row);
                }
            }
        }
        oracle
    }

    fn reduce(&self, mut row: HashMap<Vec<u32>, FieldElement>) -> HashMap<Vec<u32>, FieldElement> {
        loop {
            let hit = row.keys().find(|k| self.pivots.contains_key(*k)).cloned();
            let Some(col) = hit else { return row };
            let c = row[&col].clone();
            for (k, v) in &self.pivots[&col] {
                let entry = row.entry(k.clone()).or_insert_with(|| self.field.zero());
                *entry = entry.sub(&c.mul(v));
                if entry.is_zero() {
                    row.remove(k);
                }
            }
        }
    }

    fn insert(&mut self, row: HashMap<Vec<u32>, FieldElement>) {
        let row = self.reduce(row);
        let Some(col) = row.keys().max().cloned() else { return };
        let inv = row[&col].inv().unwrap();
        let row: HashMap<_, _> = row.into_iter().map(|(k, v)| (k, v.mul(&inv))).collect();
        // keep existing rows free of the new pivot so that reduction terminates
        for other in self.pivots.values_mut() {
            if let Some(c) = other.get(&col).cloned() {
                for (k, v) in &row {
                    let entry = other.entry(k.clone()).or_insert_with(|| self.field.zero());
                    *entry = entry.sub(&c.mul(v));
                    if entry.is_zero() {
                        other.remove(k);
                    }
                }
            }
        }
        self.pivots.insert(col, row);
    }

    pub fn contains_monomial(&self, exps: &[u32]) -> bool {
        let mut row = HashMap::new();
        row.insert(exps.to_vec(), self.field.one());
        self.reduce(row).is_empty()
    }

    pub fn contains(&self, f: &Poly) -> bool {
        let row = f.terms().iter().map(|t| (t.monomial.exponents().to_vec(), t.coeff.clone())).collect();
        self.reduce(row).is_empty()
    }
}

/// Number of monomials of degree `d` outside the monomial ideal spanned by `gens`.
pub fn brute_force_standard(gens: &[Monomial], nvars: usize, d: u32) -> u64 {
    all_monomials(nvars, d)
        .into_iter()
        .filter(|e| !gens.iter().any(|g| g.exponents().iter().zip(e).all(|(a, b)| a <= b)))
        .count() as u64
}

impl SpanOracle {
    /// Pivots of total degree `d`; for homogeneous ideals this is `dim_K I_d`.
    pub fn rank_in_degree(&self, d: u32) -> usize {
        self.pivots.keys().filter(|k| k.iter().sum::<u32>() == d).count()
    }
}

pub struct Golden {
    pub name: &'static str,
    pub ideal: Ideal,
}

/// The worked examples used throughout the tests.
pub fn golden() -> Vec<Golden> {
    let infinite = q(&["x", "y"]);
    let marc = q(&["x", "y", "z", "w"]);
    let cover = q(&["x", "y", "z"]);
    let new = q(&["x", "y", "s"]);
    let mut out = vec![
        Golden { name: "infinite", ideal: ideal(&infinite, &["x^2", "y^3 - x*y"]) },
        Golden { name: "marc", ideal: ideal(&marc, &["x*w - y*z", "x^2", "z^2"]) },
        Golden { name: "cover", ideal: ideal(&cover, &["x*y", "x*z", "y*z"]) },
        Golden { name: "new", ideal: ideal(&new, &["x^2", "x*y - s*y^3", "y^5"]) },
    ];
    for (name, field) in [("depending/Q", FieldSpec::Rationals), ("depending/F5", FieldSpec::Prime(5)), ("depending/F2", FieldSpec::Prime(2))] {
        let r = ring(field, &["x", "y"]);
        out.push(Golden { name, ideal: ideal(&r, &["x^2 + y^2", "x*y + y^2 + y^3"]) });
    }
    out
}
