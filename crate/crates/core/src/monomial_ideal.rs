//! Monomial ideals given by their minimal generators.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::poly::{write_monomial, Monomial, Ring};

/// A monomial ideal stored by its unique minimal generating set.
///
/// Generators are kept sorted by ascending degree and, within a degree, descending
/// in the ring's order. The empty generator list is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<Ring>,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: &Arc<Ring>, monomials: Vec<Monomial>) -> Result<Self> {
        if let Some(m) = monomials.iter().find(|m| m.nvars() != ring.nvars()) {
            return Err(Error::LengthMismatch(m.nvars(), ring.nvars()));
        }
        Ok(MonomialIdeal { ring: ring.clone(), generators: minimalize(ring, monomials) })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        MonomialIdeal { ring: ring.clone(), generators: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// For each variable, the exponent of the pure power in the ideal, if any.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        let n = self.nvars();
        let mut out = alloc::vec![None; n];
        for g in &self.generators {
            let support: Vec<usize> = (0..n).filter(|&i| g.exponents()[i] > 0).collect();
            if support.len() == 1 {
                let i = support[0];
                let e = g.exponents()[i];
                out[i] = Some(out[i].map_or(e, |old: u32| old.min(e)));
            }
        }
        out
    }

    /// Largest degree of a minimal generator (0 for the zero ideal).
    pub fn max_generator_degree(&self) -> u32 {
        self.generators.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn colon(&self, m: &Monomial) -> Self {
        let gens = self.generators.iter().map(|g| g.colon(m)).collect();
        MonomialIdeal { ring: self.ring.clone(), generators: minimalize(&self.ring, gens) }
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        MonomialIdeal { ring: self.ring.clone(), generators: minimalize(&self.ring, gens) }
    }
}

/// Sorts and removes every monomial divisible by another one.
pub(crate) fn minimalize(ring: &Ring, mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    let order = ring.order();
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(b, a)));
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monomials.len());
    for m in monomials {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept
}

pub(crate) fn render_order(ring: &Ring, a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| ring.order().cmp(b, a))
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write_monomial(f, g, self.ring.variables())?;
        }
        if self.generators.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}
