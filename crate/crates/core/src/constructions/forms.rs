use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::saturate_poly;
use crate::poly::{Monomial, MonomialOrder, Poly, Ring, Term};

/// The homogeneous component of lowest total degree.
pub fn leading_form(f: &Poly) -> Result<Poly> {
    let d = f.min_degree().ok_or(Error::ZeroPolynomial)?;
    Ok(f.homogeneous_component(d))
}

/// The ring extended by one trailing deformation variable `s`.
pub fn sharp_ring(ring: &Ring) -> Result<Arc<Ring>> {
    let mut vars = ring.variables().to_vec();
    vars.push(ring.fresh_name("s"));
    let order = match ring.order() {
        MonomialOrder::Lex => MonomialOrder::Lex,
        _ => MonomialOrder::DegRevLex,
    };
    Ring::new(ring.field(), vars, order)
}

fn check_extension(f: &Poly, target: &Ring) -> Result<()> {
    let src = f.ring();
    if target.nvars() != src.nvars() + 1 || target.variables()[..src.nvars()] != *src.variables() || target.field() != src.field() {
        return Err(Error::MixedRings);
    }
    Ok(())
}

/// Appends an `s`-exponent to every term of `f` computed from its total degree.
fn lift_with_s(f: &Poly, target: &Arc<Ring>, s_exponent: impl Fn(u32) -> u32) -> Poly {
    let terms = f
        .terms()
        .iter()
        .map(|t| {
            let mut e = t.monomial.exponents().to_vec();
            e.push(s_exponent(t.monomial.degree()));
            Term { coeff: t.coeff.clone(), monomial: Monomial::new(e) }
        })
        .collect();
    Poly::from_unsorted(target, terms)
}

/// `α(f) = f(x_1 s, ..., x_n s)`.
pub fn alpha_map(f: &Poly, target: &Arc<Ring>) -> Result<Poly> {
    check_extension(f, target)?;
    Ok(lift_with_s(f, target, |deg| deg))
}

/// `f# = Σ s^(i-d) f_i` over the homogeneous components `f_i` of `f`, where `d` is the
/// lowest degree present; equivalently `s^(-d) α(f)`.
pub fn sharp_map(f: &Poly, target: &Arc<Ring>) -> Result<Poly> {
    check_extension(f, target)?;
    let d = f.min_degree().ok_or(Error::ZeroPolynomial)?;
    Ok(lift_with_s(f, target, |deg| deg - d))
}

/// Substitutes `s = 0` in a polynomial of the extended ring and returns it in `base`.
pub fn set_s_to_zero(p: &Poly, base: &Arc<Ring>) -> Result<Poly> {
    let n = base.nvars();
    if p.ring().nvars() != n + 1 || p.ring().variables()[..n] != *base.variables() {
        return Err(Error::MixedRings);
    }
    let terms = p
        .terms()
        .iter()
        .filter(|t| t.monomial.exponents()[n] == 0)
        .map(|t| Term { coeff: t.coeff.clone(), monomial: Monomial::new(t.monomial.exponents()[..n].to_vec()) })
        .collect::<Vec<_>>();
    Ok(Poly::from_unsorted(base, terms))
}

fn check_origin(ideal: &Ideal) -> Result<()> {
    if ideal.generators().iter().any(|g| g.min_degree() == Some(0)) {
        return Err(Error::NotAtOrigin);
    }
    Ok(())
}

/// `I# = α(I) : s^inf`, in the ring extended by `s`.
///
/// The generators `g#` differ from `α(g)` by powers of `s`, so they have the same
/// saturation and are used instead.
pub fn sharp_ideal(ideal: &Ideal) -> Result<Ideal> {
    check_origin(ideal)?;
    let ext = sharp_ring(ideal.ring())?;
    let gens = ideal.generators().iter().map(|g| sharp_map(g, &ext)).collect::<Result<Vec<_>>>()?;
    let s = Poly::variable(&ext, ext.nvars() - 1);
    saturate_poly(&Ideal::new(&ext, gens)?, &s)
}

/// The ideal `I*` of leading forms, as `I#` modulo `s`.
pub fn form_ideal(ideal: &Ideal) -> Result<Ideal> {
    check_origin(ideal)?;
    let ring = ideal.ring();
    if ideal.is_homogeneous() {
        return Ok(ideal.with_basis());
    }
    let sharp = sharp_ideal(ideal)?;
    let gens = sharp.groebner_basis().iter().map(|g| set_s_to_zero(g, ring)).collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(ring, gens)?.with_basis())
}
