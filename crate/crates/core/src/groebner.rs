//! Buchberger's algorithm, normal forms and ideal comparison.
//!
//! Pairs are processed by the normal strategy (smallest lcm first) and pruned with
//! the Gebauer-Moeller installation of Buchberger's product and chain criteria.
//! Over Q the working basis is kept with primitive integer coefficients; see
//! [`normalize`].

use alloc::borrow::Cow;
use core::borrow::Borrow;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::monomial_ideal::{render_order, MonomialIdeal};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{sub_mul_terms, Monomial, Poly, Ring, Term};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A finitely generated ideal, optionally carrying its reduced Groebner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Poly>,
    basis: Option<Arc<Vec<Poly>>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Poly>) -> Result<Self> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::MixedRings);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, basis: None })
    }

    pub(crate) fn from_basis(ring: &Arc<Ring>, basis: Vec<Poly>) -> Self {
        Ideal { ring: ring.clone(), generators: basis.clone(), basis: Some(Arc::new(basis)) }
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal::from_basis(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Ideal::from_basis(ring, alloc::vec![Poly::one(ring)])
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Arc<Ring>) -> Self {
        let mut gens: Vec<Poly> = (0..ring.nvars()).map(|i| Poly::variable(ring, i)).collect();
        sort_for_display(ring, &mut gens);
        Ideal::from_basis(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn has_cached_basis(&self) -> bool {
        self.basis.is_some()
    }

    /// The reduced Groebner basis, from the cache when present.
    pub fn groebner_basis(&self) -> Cow<'_, [Poly]> {
        match &self.basis {
            Some(b) => Cow::Borrowed(b.as_slice()),
            None => Cow::Owned(reduced_groebner_basis(&self.ring, &self.generators)),
        }
    }

    /// Returns the same ideal with its reduced Groebner basis cached.
    pub fn with_basis(&self) -> Ideal {
        match &self.basis {
            Some(_) => self.clone(),
            None => {
                let b = reduced_groebner_basis(&self.ring, &self.generators);
                Ideal { ring: self.ring.clone(), generators: self.generators.clone(), basis: Some(Arc::new(b)) }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(Poly::is_constant)
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::MixedRings);
        }
        let gb = self.groebner_basis();
        Ok(other.generators.iter().all(|g| reduce(g.terms(), &gb, &self.ring).is_empty()))
    }

    /// All generators are homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Poly::is_homogeneous)
    }

    /// All generators are monomials.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.len() == 1)
    }

    /// Canonical generators: the reduced Groebner basis in display order.
    pub fn canonical_generators(&self) -> Vec<Poly> {
        let mut gens = self.groebner_basis().into_owned();
        sort_for_display(&self.ring, &mut gens);
        gens
    }
}

/// Ascending degree of the leading monomial, then descending in the ring's order.
pub(crate) fn sort_for_display(ring: &Ring, polys: &mut [Poly]) {
    polys.sort_by(|a, b| match (a.is_zero(), b.is_zero()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => render_order(ring, a.lm(), b.lm()),
    });
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.canonical_generators();
        if gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Computes the reduced Groebner basis and caches it on the returned ideal.
pub fn buchberger(ideal: &Ideal) -> Ideal {
    ideal.with_basis()
}

/// Remainder of `f` modulo the reduced Groebner basis of `ideal`.
pub fn normal_form(f: &Poly, ideal: &Ideal) -> Result<Poly> {
    if f.ring() != ideal.ring() {
        return Err(Error::MixedRings);
    }
    let gb = ideal.groebner_basis();
    Ok(Poly::from_sorted(ideal.ring(), reduce(f.terms(), &gb, ideal.ring())))
}

/// Minimal generators of the ideal of leading monomials.
pub fn initial_ideal(ideal: &Ideal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let gb = ideal.groebner_basis();
    MonomialIdeal::new(ideal.ring(), gb.iter().map(|g| g.lm().clone()).collect())
}

/// Ideal equality, by comparing reduced Groebner bases.
pub fn equal_ideals(a: &Ideal, b: &Ideal) -> Result<bool> {
    if a.ring() != b.ring() {
        return Err(Error::MixedRings);
    }
    Ok(a.groebner_basis() == b.groebner_basis())
}

/// Full reduction of a term list by a monic basis.
pub(crate) fn reduce<B: Borrow<Poly>>(f: &[Term], basis: &[B], ring: &Ring) -> Vec<Term> {
    let order = ring.order();
    let mut p: Vec<Term> = f.to_vec();
    let mut start = 0;
    let mut rem: Vec<Term> = Vec::new();
    while start < p.len() {
        let lead = &p[start];
        match basis.iter().map(Borrow::borrow).find(|g: &&Poly| g.lm().divides(&lead.monomial)) {
            Some(g) => {
                let shift = g.lm().quotient_of(&lead.monomial).expect("divisible");
                let c = lead.coeff.mul(&g.lc().inv().expect("nonzero"));
                p = sub_mul_terms(order, &p[start + 1..], &c, &shift, &g.terms()[1..]);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

/// Working representation during Buchberger: monic over F_p, primitive with integer
/// coefficients and positive leading coefficient over Q. Integer reduction steps skip
/// the denominator bookkeeping that monic rational arithmetic pays on every term.
fn normalize(terms: Vec<Term>, field: FieldSpec) -> Vec<Term> {
    let Some(lead) = terms.first() else { return terms };
    if field != FieldSpec::Rationals {
        let inv = lead.coeff.inv().expect("nonzero");
        return terms.into_iter().map(|t| Term { coeff: t.coeff.mul(&inv), monomial: t.monomial }).collect();
    }
    let mut denominators = BigInt::one();
    let mut content = BigInt::zero();
    for t in &terms {
        let FieldElement::Rational(q) = &t.coeff else { unreachable!("rational ring") };
        denominators = denominators.lcm(q.denom());
        content = content.gcd(q.numer());
    }
    if lead.coeff.is_negative() {
        content = -content;
    }
    let factor = FieldElement::Rational(BigRational::new(denominators, content));
    if factor.is_one() {
        return terms;
    }
    terms.into_iter().map(|t| Term { coeff: t.coeff.mul(&factor), monomial: t.monomial }).collect()
}

/// Coefficients `(u, v)` with `u * a - v * b = 0` and `u` as small as possible: over Q
/// they are integers, otherwise `u = 1`.
fn cancel_pair(a: &FieldElement, b: &FieldElement) -> (FieldElement, FieldElement) {
    match (a, b) {
        (FieldElement::Rational(x), FieldElement::Rational(y)) if x.is_integer() && y.is_integer() => {
            let g = x.numer().gcd(y.numer());
            let u = FieldElement::Rational(BigRational::from_integer(y.numer() / &g));
            let v = FieldElement::Rational(BigRational::from_integer(x.numer() / &g));
            (u, v)
        }
        _ => (a.spec().one(), a.mul(&b.inv().expect("nonzero"))),
    }
}

fn scale_terms(terms: &mut [Term], c: &FieldElement) {
    if !c.is_one() {
        for t in terms {
            t.coeff = t.coeff.mul(c);
        }
    }
}

/// Full reduction by a normalized basis. The result is normalized and equals `f` up
/// to a nonzero constant factor modulo the basis.
fn reduce_scaled(f: &[Term], basis: &[&Poly], ring: &Ring) -> Vec<Term> {
    let order = ring.order();
    let rational = ring.field() == FieldSpec::Rationals;
    let mut p: Vec<Term> = f.to_vec();
    let mut rem: Vec<Term> = Vec::new();
    let mut start = 0;
    let mut steps = 0u32;
    while start < p.len() {
        let lead = &p[start];
        match basis.iter().find(|g| g.lm().divides(&lead.monomial)) {
            Some(g) => {
                let shift = g.lm().quotient_of(&lead.monomial).expect("divisible");
                let (u, v) = cancel_pair(&lead.coeff, g.lc());
                scale_terms(&mut p[start + 1..], &u);
                scale_terms(&mut rem, &u);
                p = sub_mul_terms(order, &p[start + 1..], &v, &shift, &g.terms()[1..]);
                start = 0;
                steps += 1;
                if rational && steps.is_multiple_of(32) {
                    // keep the integer coefficients from growing without bound
                    let n = rem.len();
                    rem.append(&mut p);
                    let mut all = normalize(rem, ring.field());
                    p = all.split_off(n);
                    rem = all;
                }
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    normalize(rem, ring.field())
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Basis under construction; inactive elements have a leading monomial divisible by
/// a later one and no longer reduce.
struct Work {
    basis: Vec<Poly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Work {
    /// Active elements by ascending leading monomial: reducing by the smallest divisor
    /// first keeps intermediate coefficients much smaller over Q.
    fn reducers(&self, order: crate::poly::MonomialOrder) -> Vec<&Poly> {
        let mut out: Vec<&Poly> = self.basis.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p).collect();
        out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        out
    }
}

/// The reduced Groebner basis of the ideal generated by `gens`, monic and sorted
/// descending by leading monomial.
pub fn reduced_groebner_basis(ring: &Arc<Ring>, gens: &[Poly]) -> Vec<Poly> {
    let field = ring.field();
    let mut input: Vec<Poly> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| Poly::from_sorted(ring, normalize(g.terms().to_vec(), field))).collect();
    if input.is_empty() {
        return Vec::new();
    }
    if input.iter().any(Poly::is_constant) {
        return alloc::vec![Poly::one(ring)];
    }
    let order = ring.order();
    // small leading monomials first tends to keep the basis small
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    let mut w = Work { basis: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    // inputs wait in the same queue as S-pairs, keyed by their leading monomial,
    // so a large generator is never reduced by a basis missing its small S-pairs
    let mut next_input = 0;
    loop {
        let pos = select_pair(&w.pairs, order);
        let take_input = match (input.get(next_input), pos) {
            (None, None) => break,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (Some(g), Some(pos)) => order.cmp(g.lm(), &w.pairs[pos].lcm) != core::cmp::Ordering::Greater,
        };
        let candidate = if take_input {
            next_input += 1;
            input[next_input - 1].terms().to_vec()
        } else {
            let pair = w.pairs.swap_remove(pos.expect("pair"));
            let (f, g) = (&w.basis[pair.i], &w.basis[pair.j]);
            let sf = f.lm().quotient_of(&pair.lcm).expect("lcm");
            let sg = g.lm().quotient_of(&pair.lcm).expect("lcm");
            let (u, v) = cancel_pair(f.lc(), g.lc());
            let f_tail: Vec<Term> = f.terms()[1..]
                .iter()
                .map(|t| Term { coeff: t.coeff.mul(&u), monomial: t.monomial.mul(&sf) })
                .collect();
            sub_mul_terms(order, &f_tail, &v, &sg, &g.terms()[1..])
        };
        let reducers = w.reducers(order);
        let r = reduce_scaled(&candidate, &reducers, ring);
        if r.is_empty() {
            continue;
        }
        let h = Poly::from_sorted(ring, r);
        if h.is_constant() {
            return alloc::vec![Poly::one(ring)];
        }
        update(&mut w, h);
    }

    let minimal: Vec<Poly> = w.basis.into_iter().zip(w.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    interreduce(ring, minimal)
}

fn select_pair(pairs: &[Pair], order: crate::poly::MonomialOrder) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (idx, p) in pairs.iter().enumerate() {
        best = match best {
            None => Some(idx),
            Some(b) => {
                let q = &pairs[b];
                let key = order.cmp(&p.lcm, &q.lcm);
                if key == Ordering::Less {
                    Some(idx)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}

/// Gebauer-Moeller update after adding `h` to the basis.
fn update(w: &mut Work, h: Poly) {
    let Work { basis, active, pairs } = w;
    let hm = h.lm().clone();
    let new_index = basis.len();

    struct Candidate {
        j: usize,
        lcm: Monomial,
        coprime: bool,
        keep: bool,
    }
    let mut cands: Vec<Candidate> = basis
        .iter()
        .enumerate()
        .filter(|(j, _)| active[*j])
        .map(|(j, g)| Candidate { j, lcm: hm.lcm(g.lm()), coprime: hm.is_coprime(g.lm()), keep: true })
        .collect();

    // chain criterion among the new pairs: drop a pair whose lcm is properly divisible by another's
    for a in 0..cands.len() {
        for b in 0..cands.len() {
            if a != b && cands[b].lcm.divides(&cands[a].lcm) && cands[b].lcm != cands[a].lcm {
                cands[a].keep = false;
                break;
            }
        }
    }
    // among pairs with equal lcm keep one, and none if any of them is coprime
    let mut chosen: Vec<Candidate> = Vec::new();
    let mut seen: Vec<(Monomial, bool)> = Vec::new();
    for c in cands.iter().filter(|c| c.keep) {
        if let Some(entry) = seen.iter_mut().find(|(l, _)| *l == c.lcm) {
            entry.1 |= c.coprime;
            continue;
        }
        seen.push((c.lcm.clone(), c.coprime));
        chosen.push(Candidate { j: c.j, lcm: c.lcm.clone(), coprime: c.coprime, keep: true });
    }
    for c in &mut chosen {
        let any_coprime = seen.iter().find(|(l, _)| *l == c.lcm).map(|(_, cp)| *cp).unwrap_or(false);
        if any_coprime {
            c.keep = false;
        }
    }

    // prune old pairs
    pairs.retain(|p| {
        if !hm.divides(&p.lcm) {
            return true;
        }
        let li = hm.lcm(basis[p.i].lm());
        let lj = hm.lcm(basis[p.j].lm());
        li == p.lcm || lj == p.lcm
    });

    for c in chosen.into_iter().filter(|c| c.keep) {
        pairs.push(Pair { i: c.j, j: new_index, lcm: c.lcm });
    }

    for (j, g) in basis.iter().enumerate() {
        if active[j] && hm.divides(g.lm()) {
            active[j] = false;
        }
    }
    basis.push(h);
    active.push(true);
}

fn interreduce(ring: &Arc<Ring>, mut minimal: Vec<Poly>) -> Vec<Poly> {
    let order = ring.order();
    minimal.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
    let mut out: Vec<Poly> = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<&Poly> = minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, p)| p).collect();
        // the leading monomial is irreducible in a minimal basis, so only tails change
        let terms = reduce_scaled(minimal[idx].terms(), &others, ring);
        out.push(Poly::from_sorted(ring, terms).monic());
    }
    out
}

/// The S-polynomial of two nonzero polynomials (monic normalization of neither).
pub fn s_polynomial(f: &Poly, g: &Poly) -> Result<Poly> {
    if f.ring() != g.ring() {
        return Err(Error::MixedRings);
    }
    let lf = f.leading_term()?;
    let lg = g.leading_term()?;
    let l = lf.monomial.lcm(&lg.monomial);
    let a = f.mul_term(&lf.coeff.inv()?, &lf.monomial.quotient_of(&l).expect("lcm"));
    let b = g.mul_term(&lg.coeff.inv()?, &lg.monomial.quotient_of(&l).expect("lcm"));
    a.sub(&b)
}
