//! Sums, products, powers, intersections, colon ideals, saturations and elimination.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{equal_ideals, reduced_groebner_basis, Ideal};
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Monomial, MonomialOrder, Poly, Ring};

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring() == b.ring() {
        Ok(())
    } else {
        Err(Error::MixedRings)
    }
}

pub fn sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    Ideal::new(a.ring(), gens)
}

pub fn product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let mut gens = Vec::with_capacity(a.generators().len() * b.generators().len());
    for f in a.generators() {
        for g in b.generators() {
            push_unique(&mut gens, f.mul(g)?);
        }
    }
    Ideal::new(a.ring(), tidy(a.ring(), gens))
}

fn push_unique(gens: &mut Vec<Poly>, p: Poly) {
    if !gens.contains(&p) {
        gens.push(p);
    }
}

/// Minimalizes monomial generator lists; other lists pass through.
fn tidy(ring: &Arc<Ring>, gens: Vec<Poly>) -> Vec<Poly> {
    if !gens.is_empty() && gens.iter().all(|g| g.len() == 1) {
        let monos = gens.iter().map(|g| g.terms()[0].monomial.clone()).collect();
        let m = MonomialIdeal::new(ring, monos).expect("same ring");
        return monomial_generators(&m);
    }
    gens
}

fn monomial_generators(m: &MonomialIdeal) -> Vec<Poly> {
    m.generators().iter().map(|g| Poly::monomial(m.ring(), g.clone())).collect()
}

fn as_monomial_ideal(i: &Ideal) -> Option<MonomialIdeal> {
    if !i.is_monomial() {
        return None;
    }
    let monos = i.generators().iter().map(|g| g.terms()[0].monomial.clone()).collect();
    MonomialIdeal::new(i.ring(), monos).ok()
}

fn from_monomial_ideal(m: &MonomialIdeal) -> Ideal {
    Ideal::new(m.ring(), monomial_generators(m)).expect("same ring")
}

/// `I^k`, generated by all k-fold products of generators; `I^0 = (1)`.
pub fn power(ideal: &Ideal, k: u32) -> Ideal {
    let ring = ideal.ring();
    if k == 0 {
        return Ideal::unit(ring);
    }
    if ideal.is_zero() {
        return Ideal::zero(ring);
    }
    let gens = ideal.generators();
    // (index of the last factor, product) for multisets of generator indices
    let mut layer: Vec<(usize, Poly)> = gens.iter().cloned().enumerate().collect();
    for _ in 1..k {
        let mut next: Vec<(usize, Poly)> = Vec::new();
        for (last, p) in &layer {
            for (i, g) in gens.iter().enumerate().skip(*last) {
                next.push((i, p.mul(g).expect("same ring")));
            }
        }
        layer = next;
    }
    let mut out: Vec<Poly> = Vec::with_capacity(layer.len());
    for (_, p) in layer {
        push_unique(&mut out, p);
    }
    Ideal::new(ring, tidy(ring, out)).expect("same ring")
}

/// A ring with fresh variables `names` placed first, eliminated by a block order.
pub(crate) fn elimination_ring(ring: &Ring, names: &[String]) -> Result<Arc<Ring>> {
    let mut vars: Vec<String> = names.to_vec();
    vars.extend(ring.variables().iter().cloned());
    Ring::new(ring.field(), vars, MonomialOrder::Elimination { block: names.len() })
}

/// Keeps Groebner basis elements free of the first `block` variables and moves them to `target`.
pub(crate) fn drop_block(basis: &[Poly], block: usize, target: &Arc<Ring>) -> Vec<Poly> {
    let n = target.nvars();
    let positions: Vec<usize> = (0..block).map(|_| 0).chain(0..n).collect();
    basis
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.monomial.exponents()[..block].iter().all(|&e| e == 0)))
        .map(|p| p.remap(target, &positions))
        .collect()
}

pub(crate) fn shift_into(p: &Poly, ext: &Arc<Ring>, block: usize) -> Poly {
    let positions: Vec<usize> = (0..p.ring().nvars()).map(|i| i + block).collect();
    p.remap(ext, &positions)
}

/// `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J`.
pub fn intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    same_ring(a, b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if let (Some(ma), Some(mb)) = (as_monomial_ideal(a), as_monomial_ideal(b)) {
        return Ok(from_monomial_ideal(&monomial_intersection(&ma, &mb)));
    }
    Ok(Ideal::from_basis(ring, intersection_basis(a, b)?))
}

fn intersection_basis(a: &Ideal, b: &Ideal) -> Result<Vec<Poly>> {
    let ring = a.ring();
    let t_name = ring.fresh_name("t0");
    let ext = elimination_ring(ring, &[t_name])?;
    let t = Poly::variable(&ext, 0);
    let one_minus_t = Poly::one(&ext).sub(&t)?;
    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(t.mul(&shift_into(f, &ext, 1))?);
    }
    for g in b.generators() {
        gens.push(one_minus_t.mul(&shift_into(g, &ext, 1))?);
    }
    let gb = reduced_groebner_basis(&ext, &gens);
    Ok(reduced_groebner_basis(ring, &drop_block(&gb, 1, ring)))
}

pub(crate) fn monomial_intersection(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    let mut gens = Vec::new();
    for u in a.generators() {
        for v in b.generators() {
            gens.push(u.lcm(v));
        }
    }
    MonomialIdeal::new(a.ring(), gens).expect("same ring")
}

/// `I : f = {g : g f ∈ I}`, as `(I ∩ (f)) / f`.
pub fn colon_poly(ideal: &Ideal, f: &Poly) -> Result<Ideal> {
    if f.ring() != ideal.ring() {
        return Err(Error::MixedRings);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = ideal.ring();
    if f.is_constant() {
        return Ok(ideal.clone());
    }
    if ideal.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if let (Some(m), 1) = (as_monomial_ideal(ideal), f.len()) {
        return Ok(from_monomial_ideal(&m.colon(&f.terms()[0].monomial)));
    }
    let principal = Ideal::new(ring, alloc::vec![f.clone()])?;
    let meet = intersection_basis(ideal, &principal)?;
    let quotients = meet
        .iter()
        .map(|g| g.div_exact(f)?.ok_or(Error::InvalidArgument("intersection element not divisible".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::from_basis(ring, reduced_groebner_basis(ring, &quotients)))
}

/// `I : J = ⋂ I : g` over the generators `g` of `J`.
pub fn colon_ideal(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    same_ring(ideal, by)?;
    if by.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut acc: Option<Ideal> = None;
    for g in by.generators() {
        let c = colon_poly(ideal, g)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => intersection(&prev, &c)?,
        });
    }
    Ok(acc.expect("nonzero ideal"))
}

/// `I : f^inf` via the Rabinowitsch trick: eliminate `t` from `I + (1 - t f)`.
pub fn saturate_poly(ideal: &Ideal, f: &Poly) -> Result<Ideal> {
    if f.ring() != ideal.ring() {
        return Err(Error::MixedRings);
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() || ideal.is_zero() {
        return Ok(ideal.clone());
    }
    if let (Some(m), 1) = (as_monomial_ideal(ideal), f.len()) {
        return Ok(from_monomial_ideal(&monomial_saturation(&m, &f.terms()[0].monomial)));
    }
    rabinowitsch(ideal, f)
}

/// The general elimination route of [`saturate_poly`], without the monomial shortcut.
pub fn rabinowitsch(ideal: &Ideal, f: &Poly) -> Result<Ideal> {
    let ring = ideal.ring();
    let t_name = ring.fresh_name("t1");
    let ext = elimination_ring(ring, &[t_name])?;
    let t = Poly::variable(&ext, 0);
    let mut gens: Vec<Poly> = ideal.generators().iter().map(|g| shift_into(g, &ext, 1)).collect();
    gens.push(Poly::one(&ext).sub(&t.mul(&shift_into(f, &ext, 1))?)?);
    let gb = reduced_groebner_basis(&ext, &gens);
    Ok(Ideal::from_basis(ring, reduced_groebner_basis(ring, &drop_block(&gb, 1, ring))))
}

pub(crate) fn monomial_saturation(m: &MonomialIdeal, by: &Monomial) -> MonomialIdeal {
    let support: Vec<usize> = (0..by.nvars()).filter(|&i| by.exponents()[i] > 0).collect();
    let gens = m
        .generators()
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            for &i in &support {
                e[i] = 0;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(m.ring(), gens).expect("same ring")
}

/// `I : J^inf = ⋂ I : g^inf` over the generators `g` of `J`.
pub fn saturate_ideal(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    same_ring(ideal, by)?;
    if by.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if by.generators().iter().any(Poly::is_constant) {
        return Ok(ideal.clone());
    }
    let mut acc: Option<Ideal> = None;
    for g in by.generators() {
        let s = saturate_poly(ideal, g)?;
        if s.is_unit() {
            continue;
        }
        acc = Some(match acc {
            None => s,
            Some(prev) => intersection(&prev, &s)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ideal.ring())))
}

/// `I : J^inf` as the stable value of the chain `I ⊆ I : J ⊆ (I : J) : J ⊆ ...`.
pub fn saturate_by_colon_chain(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    let mut current = ideal.with_basis();
    loop {
        let next = colon_ideal(&current, by)?.with_basis();
        if equal_ideals(&current, &next)? {
            return Ok(current);
        }
        current = next;
    }
}

/// `I ∩ K[remaining variables]`, returned in the ring of the remaining variables.
pub fn eliminate(ideal: &Ideal, vars: &[&str]) -> Result<Ideal> {
    let ring = ideal.ring();
    let mut elim: Vec<usize> = Vec::new();
    for v in vars {
        let i = ring.var_index(v).ok_or(Error::BadVariableSet)?;
        if !elim.contains(&i) {
            elim.push(i);
        }
    }
    if elim.is_empty() || elim.len() >= ring.nvars() {
        return Err(Error::BadVariableSet);
    }
    elim.sort_unstable();
    let keep: Vec<usize> = (0..ring.nvars()).filter(|i| !elim.contains(i)).collect();
    let order = match ring.order() {
        MonomialOrder::Lex => MonomialOrder::Lex,
        _ => MonomialOrder::DegRevLex,
    };
    let target = Ring::new(ring.field(), keep.iter().map(|&i| ring.variables()[i].clone()).collect(), order)?;

    let mut names: Vec<String> = elim.iter().map(|&i| ring.variables()[i].clone()).collect();
    names.extend(keep.iter().map(|&i| ring.variables()[i].clone()));
    let block_ring = Ring::new(ring.field(), names, MonomialOrder::Elimination { block: elim.len() })?;
    let mut positions = alloc::vec![0usize; ring.nvars()];
    for (new, &old) in elim.iter().chain(keep.iter()).enumerate() {
        positions[old] = new;
    }
    let gens: Vec<Poly> = ideal.generators().iter().map(|g| g.remap(&block_ring, &positions)).collect();
    let gb = reduced_groebner_basis(&block_ring, &gens);
    let kept = drop_block(&gb, elim.len(), &target);
    Ok(Ideal::from_basis(&target, reduced_groebner_basis(&target, &kept)))
}
