//! Monomials, monomial orders, rings and exact multivariate polynomials.

mod monomial;
mod order;
mod ring;

pub use monomial::{monomials_of_degree, Monomial};
pub use order::MonomialOrder;
pub use ring::Ring;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A nonzero coefficient together with its monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElement,
    pub monomial: Monomial,
}

/// A polynomial in canonical form: terms strictly descending in the ring's order,
/// no zero coefficients. The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

/// Ring operations on polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<Ring>, c: FieldElement) -> Self {
        Self::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_i64(ring: &Arc<Ring>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(n))
    }

    pub fn variable(ring: &Arc<Ring>, index: usize) -> Self {
        Self::term(ring, ring.field().one(), Monomial::variable(ring.nvars(), index))
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial) -> Self {
        Self::term(ring, ring.field().one(), m)
    }

    pub fn term(ring: &Arc<Ring>, coeff: FieldElement, monomial: Monomial) -> Self {
        let terms = if coeff.is_zero() { Vec::new() } else { alloc::vec![Term { coeff, monomial }] };
        Poly { ring: ring.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary (coefficient, monomial) pairs.
    pub fn from_terms(ring: &Arc<Ring>, pairs: Vec<(FieldElement, Monomial)>) -> Result<Self> {
        for (c, m) in &pairs {
            if c.spec() != ring.field() {
                return Err(Error::MixedFields);
            }
            if m.nvars() != ring.nvars() {
                return Err(Error::LengthMismatch(m.nvars(), ring.nvars()));
            }
        }
        let terms = pairs.into_iter().map(|(coeff, monomial)| Term { coeff, monomial }).collect();
        Ok(Self::from_unsorted(ring, terms))
    }

    pub(crate) fn from_unsorted(ring: &Arc<Ring>, mut terms: Vec<Term>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => last.coeff = last.coeff.add(&t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Poly { ring: ring.clone(), terms: out }
    }

    /// Assumes `terms` is already canonical for `ring`.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// The order-maximal term.
    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms[0].monomial
    }

    pub(crate) fn lc(&self) -> &FieldElement {
        &self.terms[0].coeff
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn arith(&self, other: &Poly, op: PolyOp) -> Result<Poly> {
        match op {
            PolyOp::Add => self.add(other),
            PolyOp::Sub => self.sub(other),
            PolyOp::Mul => self.mul(other),
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(Poly::from_sorted(&self.ring, add_terms(self.ring.order(), &self.terms, &other.terms)))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let one = self.ring.field().one();
        let terms = sub_mul_terms(self.ring.order(), &self.terms, &one, &Monomial::one(self.ring.nvars()), &other.terms);
        Ok(Poly::from_sorted(&self.ring, terms))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        // accumulate one shifted copy of the longer factor per term of the shorter one
        let (short, long) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let order = self.ring.order();
        let mut acc: Vec<Term> = Vec::new();
        for t in &short.terms {
            acc = sub_mul_terms(order, &acc, &t.coeff.neg(), &t.monomial, &long.terms);
        }
        Ok(Poly::from_sorted(&self.ring, acc))
    }

    pub fn neg(&self) -> Poly {
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.neg(), monomial: t.monomial.clone() }).collect();
        Poly::from_sorted(&self.ring, terms)
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), monomial: t.monomial.clone() }).collect();
        Poly::from_sorted(&self.ring, terms)
    }

    /// Multiplication by `c * m`; monomial multiplication preserves the term order.
    pub fn mul_term(&self, c: &FieldElement, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), monomial: t.monomial.mul(m) }).collect();
        Poly::from_sorted(&self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        result
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => self.scale(&t.coeff.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// Smallest total degree of a term (the order of vanishing at the origin).
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.monomial.degree();
                self.terms.iter().all(|s| s.monomial.degree() == d)
            }
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        let terms = self.terms.iter().filter(|t| t.monomial.degree() == d).cloned().collect();
        Poly::from_sorted(&self.ring, terms)
    }

    /// Image under the ring map sending variable `i` to `images[i]`.
    pub fn evaluate(&self, images: &[Poly], target: &Arc<Ring>) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::LengthMismatch(images.len(), self.ring.nvars()));
        }
        if images.iter().any(|p| p.ring != *target) {
            return Err(Error::MixedRings);
        }
        if target.field() != self.ring.field() {
            return Err(Error::MixedFields);
        }
        // cache powers of each image
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| alloc::vec![Poly::one(target), p.clone()]).collect();
        let mut acc: Vec<Term> = Vec::new();
        let order = target.order();
        for t in &self.terms {
            let mut prod = Poly::constant(target, t.coeff.clone());
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&cache[1])?;
                    cache.push(next);
                }
                prod = prod.mul(&cache[e as usize])?;
            }
            acc = add_terms(order, &acc, &prod.terms);
        }
        Ok(Poly::from_sorted(target, acc))
    }

    /// Image under the ring map given by a variable-name assignment.
    pub fn substitute(&self, assignment: &BTreeMap<String, Poly>, target: &Arc<Ring>) -> Result<Poly> {
        let images = self
            .ring
            .variables()
            .iter()
            .map(|v| assignment.get(v).cloned().ok_or_else(|| Error::MissingImage(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        self.evaluate(&images, target)
    }

    /// Moves the polynomial into `target`, sending variable `i` to variable `positions[i]`.
    pub fn remap(&self, target: &Arc<Ring>, positions: &[usize]) -> Poly {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = alloc::vec![0u32; n];
                for (i, &x) in t.monomial.exponents().iter().enumerate() {
                    e[positions[i]] += x;
                }
                Term { coeff: t.coeff.clone(), monomial: Monomial::new(e) }
            })
            .collect();
        Poly::from_unsorted(target, terms)
    }

    /// The quotient `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Option<Poly>> {
        self.check_ring(divisor)?;
        let lead = divisor.leading_term()?;
        let inv = lead.coeff.inv()?;
        let order = self.ring.order();
        let mut quotient: Vec<Term> = Vec::new();
        let mut rest = self.terms.clone();
        while let Some(top) = rest.first() {
            let Some(shift) = lead.monomial.quotient_of(&top.monomial) else {
                return Ok(None);
            };
            let c = top.coeff.mul(&inv);
            rest = sub_mul_terms(order, &rest[1..], &c, &shift, &divisor.terms[1..]);
            quotient.push(Term { coeff: c, monomial: shift });
        }
        Ok(Some(Poly::from_sorted(&self.ring, quotient)))
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }
}

/// Merge of two canonical term lists.
pub(crate) fn add_terms(order: MonomialOrder, a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].monomial, &b[j].monomial) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].coeff.add(&b[j].coeff);
                if !c.is_zero() {
                    out.push(Term { coeff: c, monomial: a[i].monomial.clone() });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `f - c * m * g` on canonical term lists.
pub(crate) fn sub_mul_terms(order: MonomialOrder, f: &[Term], c: &FieldElement, m: &Monomial, g: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let neg_c = c.neg();
    let mut i = 0;
    for t in g {
        let gm = t.monomial.mul(m);
        loop {
            if i < f.len() && order.cmp(&f[i].monomial, &gm) == Ordering::Greater {
                out.push(f[i].clone());
                i += 1;
            } else {
                break;
            }
        }
        let prod = t.coeff.mul(&neg_c);
        if i < f.len() && f[i].monomial == gm {
            let s = f[i].coeff.add(&prod);
            if !s.is_zero() {
                out.push(Term { coeff: s, monomial: gm });
            }
            i += 1;
        } else {
            out.push(Term { coeff: prod, monomial: gm });
        }
    }
    out.extend_from_slice(&f[i..]);
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = if negative { t.coeff.neg() } else { t.coeff.clone() };
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write_monomial(f, &t.monomial, self.ring.variables())?;
        }
        Ok(())
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, names: &[String]) -> fmt::Result {
    let mut first = true;
    for (e, name) in m.exponents().iter().zip(names) {
        if *e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if *e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}
