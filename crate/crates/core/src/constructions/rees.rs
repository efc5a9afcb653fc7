use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{reduced_groebner_basis, Ideal};
use crate::ideal_ops::{drop_block, elimination_ring};
use crate::invariants::krull_dimension;
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, Term};

/// The ring `K[x, y_1..y_m]` with one `y` per generator, avoiding existing names.
fn presentation_ring(ring: &Ring, m: usize) -> Result<Arc<Ring>> {
    let mut vars = ring.variables().to_vec();
    for i in 1..=m {
        let mut name = format!("y{i}");
        while vars.contains(&name) {
            name.insert(0, '_');
        }
        vars.push(name);
    }
    Ring::new(ring.field(), vars, MonomialOrder::DegRevLex)
}

/// The kernel of `K[x, y] -> R(I)`, `y_i -> f_i t`, for the generators `f_i` of `I` in
/// their given order.
pub fn rees_presentation(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    let gens = ideal.generators();
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let n = ring.nvars();
    let target = presentation_ring(ring, gens.len())?;
    let t = ring.fresh_name("t");
    let ext = elimination_ring(&target, &[t])?;
    let positions: Vec<usize> = (0..n).map(|i| i + 1).collect();
    let mut equations = Vec::with_capacity(gens.len());
    for (i, f) in gens.iter().enumerate() {
        let y = Poly::variable(&ext, 1 + n + i);
        let tf = Poly::variable(&ext, 0).mul(&f.remap(&ext, &positions))?;
        equations.push(y.sub(&tf)?);
    }
    let gb = reduced_groebner_basis(&ext, &equations);
    let kept = drop_block(&gb, 1, &target);
    Ok(Ideal::from_basis(&target, reduced_groebner_basis(&target, &kept)))
}

/// The defining ideal of the fiber cone `R(I)/mR(I)` in `K[y_1..y_m]`.
pub fn fiber_ideal(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let presentation = rees_presentation(ideal)?;
    let m = presentation.ring().nvars() - n;
    let names: Vec<String> = presentation.ring().variables()[n..].to_vec();
    let fiber_ring = Ring::new(ring.field(), names, MonomialOrder::DegRevLex)?;
    let gens = presentation
        .groebner_basis()
        .iter()
        .map(|p| {
            let terms = p
                .terms()
                .iter()
                .filter(|t| t.monomial.exponents()[..n].iter().all(|&e| e == 0))
                .map(|t| Term { coeff: t.coeff.clone(), monomial: Monomial::new(t.monomial.exponents()[n..].to_vec()) })
                .collect();
            Poly::from_unsorted(&fiber_ring, terms)
        })
        .collect();
    debug_assert_eq!(fiber_ring.nvars(), m);
    Ideal::new(&fiber_ring, gens)
}

/// `ℓ(I)`, the Krull dimension of the fiber cone.
pub fn analytic_spread(ideal: &Ideal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    krull_dimension(&fiber_ideal(ideal)?)
}
