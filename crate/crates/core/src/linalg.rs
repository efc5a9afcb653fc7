//! Exact linear algebra on finite-dimensional spaces of polynomials.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::poly::{sub_mul_terms, Monomial, Poly, Ring, Term};

/// A subspace of polynomials in row-echelon form: every row is monic and no two
/// rows share a leading monomial.
#[derive(Debug, Clone)]
pub struct LinearSpan {
    ring: Arc<Ring>,
    rows: BTreeMap<Monomial, Poly>,
}

impl LinearSpan {
    pub fn new(ring: &Arc<Ring>) -> Self {
        LinearSpan { ring: ring.clone(), rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The part of `p` that cannot be cancelled by pivots of the span.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let order = self.ring.order();
        let mut work: Vec<Term> = p.terms().to_vec();
        let mut rest: Vec<Term> = Vec::new();
        let mut start = 0;
        while start < work.len() {
            match self.rows.get(&work[start].monomial) {
                Some(row) => {
                    let c = work[start].coeff.clone();
                    let one = Monomial::one(self.ring.nvars());
                    work = sub_mul_terms(order, &work[start + 1..], &c, &one, &row.terms()[1..]);
                    start = 0;
                }
                None => {
                    rest.push(work[start].clone());
                    start += 1;
                }
            }
        }
        Poly::from_sorted(&self.ring, rest)
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p`; returns false when it was already in the span.
    pub fn insert(&mut self, p: &Poly) -> bool {
        let r = self.reduce(p);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        self.rows.insert(r.terms()[0].monomial.clone(), r);
        true
    }
}
