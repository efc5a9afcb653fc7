//! Standard monomials, Hilbert series, dimension and lengths of finite quotients.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, Ideal};
use crate::ideal_ops::saturate_poly;
use crate::linalg::LinearSpan;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{monomials_of_degree, Monomial, Poly};

/// A length or K-dimension that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "infinite"),
        }
    }
}

/// Number of monomials outside `m`.
pub fn std_monomial_count(m: &MonomialIdeal) -> Length {
    if m.pure_powers().iter().any(Option::is_none) {
        return Length::Infinite;
    }
    let gens: Vec<Vec<u32>> = m.generators().iter().map(|g| g.exponents().to_vec()).collect();
    Length::Finite(count_standard(&gens))
}

/// Counts monomials outside the ideal generated by `gens`, slicing by the first variable.
fn count_standard(gens: &[Vec<u32>]) -> u64 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return 0;
    }
    let n = gens.first().map_or(0, Vec::len);
    if n == 0 {
        return 1;
    }
    let bound = gens
        .iter()
        .filter(|g| g[1..].iter().all(|&e| e == 0))
        .map(|g| g[0])
        .min()
        .expect("pure power of the first variable");
    let mut total = 0;
    for e in 0..bound {
        let slice: Vec<Vec<u32>> = gens.iter().filter(|g| g[0] <= e).map(|g| g[1..].to_vec()).collect();
        total += count_standard(&slice);
    }
    total
}

/// Number of monomials of degree `d` outside `m`.
pub fn hilbert_function(m: &MonomialIdeal, d: u32) -> u64 {
    monomials_of_degree(m.nvars(), d).iter().filter(|u| !m.contains(u)).count() as u64
}

/// Hilbert series `numerator / (1 - t)^n` of `K[x_1..x_n] / M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients by ascending power of `t`.
    pub numerator: Vec<i64>,
    pub ambient_dim: usize,
    pub dimension: usize,
    pub multiplicity: i64,
}

impl fmt::Display for HilbertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}; {}", render_univariate(&self.numerator), self.dimension, self.multiplicity)
    }
}

fn render_univariate(coeffs: &[i64]) -> alloc::string::String {
    use alloc::string::String;
    use core::fmt::Write;
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let a = c.unsigned_abs();
        match (i, a) {
            (0, _) => {
                let _ = write!(out, "{a}");
            }
            (_, 1) => {}
            _ => {
                let _ = write!(out, "{a}*");
            }
        }
        match i {
            0 => {}
            1 => out.push('t'),
            _ => {
                let _ = write!(out, "t^{i}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn hilbert_series(m: &MonomialIdeal) -> HilbertData {
    let n = m.nvars();
    let gens: Vec<Vec<u32>> = m.generators().iter().map(|g| g.exponents().to_vec()).collect();
    let numerator = trim(hs_numerator(gens));
    let (dimension, multiplicity) = dimension_and_degree(&numerator, n);
    HilbertData { numerator, ambient_dim: n, dimension, multiplicity }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

fn dimension_and_degree(numerator: &[i64], n: usize) -> (usize, i64) {
    if numerator.iter().all(|&c| c == 0) {
        return (0, 0);
    }
    let mut q = numerator.to_vec();
    let mut cancelled = 0;
    while cancelled < n && q.iter().sum::<i64>() == 0 {
        q = divide_one_minus_t(&q);
        cancelled += 1;
    }
    (n - cancelled, q.iter().sum())
}

/// Exact quotient by `1 - t`; the caller guarantees divisibility.
fn divide_one_minus_t(p: &[i64]) -> Vec<i64> {
    let mut q = Vec::with_capacity(p.len());
    let mut acc = 0i64;
    for &c in p.iter().take(p.len().saturating_sub(1)) {
        acc += c;
        q.push(acc);
    }
    if q.is_empty() {
        q.push(0);
    }
    trim(q)
}

fn minimal(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| k.iter().zip(&g).all(|(a, b)| a <= b)) {
            kept.push(g);
        }
    }
    kept
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = alloc::vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

/// Numerator of the Hilbert series by pivot recursion:
/// `N(M) = N(M + (p)) + t^deg(p) N(M : p)` for a pure-power pivot `p`.
fn hs_numerator(gens: Vec<Vec<u32>>) -> Vec<i64> {
    let gens = minimal(gens);
    if gens.is_empty() {
        return alloc::vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return alloc::vec![0];
    }
    let n = gens[0].len();
    let coprime = (0..n).all(|i| gens.iter().filter(|g| g[i] > 0).count() <= 1);
    if coprime {
        let mut acc = alloc::vec![1i64];
        for g in &gens {
            let d: u32 = g.iter().sum();
            let mut factor = alloc::vec![0i64; d as usize + 1];
            factor[0] = 1;
            factor[d as usize] = -1;
            acc = poly_mul(&acc, &factor);
        }
        return acc;
    }
    let var = (0..n).max_by_key(|&i| (gens.iter().filter(|g| g[i] > 0).count(), core::cmp::Reverse(i))).unwrap();
    let mut exps: Vec<u32> = gens.iter().map(|g| g[var]).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let mut e = exps[(exps.len() - 1) / 2];
    let pure = gens.iter().filter(|g| g.iter().enumerate().all(|(i, &x)| i == var || x == 0)).map(|g| g[var]).min();
    if let Some(a) = pure {
        e = e.min(a - 1);
    }
    let mut pivot = alloc::vec![0u32; n];
    pivot[var] = e;

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[var] = h[var].saturating_sub(e);
            h
        })
        .collect();
    let mut result = hs_numerator(with_pivot);
    poly_add_shifted(&mut result, &hs_numerator(colon), e as usize);
    result
}

/// Krull dimension of a quotient by a monomial ideal: the number of variables minus
/// the smallest set of variables meeting the support of every generator.
pub fn monomial_krull_dimension(m: &MonomialIdeal) -> usize {
    let n = m.nvars();
    let supports: Vec<u64> = m
        .generators()
        .iter()
        .map(|g| g.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | (1 << i)))
        .collect();
    let mut best = n;
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size < best && supports.iter().all(|s| s & mask != 0) {
            best = size;
        }
    }
    n - best
}

/// `dim R/I`, read off the initial ideal.
pub fn krull_dimension(ideal: &Ideal) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(ideal.ring().nvars());
    }
    let m = initial_ideal(ideal)?;
    if m.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(monomial_krull_dimension(&m))
}

/// `dim_K K[x]/I` for an ideal primary to the origin.
pub fn local_colength(ideal: &Ideal) -> Result<u64> {
    let ring = ideal.ring();
    if ideal.is_zero() {
        return Err(Error::NotMPrimary);
    }
    let ideal = ideal.with_basis();
    if ideal.is_unit() {
        return Ok(0);
    }
    let count = std_monomial_count(&initial_ideal(&ideal)?).finite().ok_or(Error::NotMPrimary)?;
    // every variable must be nilpotent modulo I, so that V(I) is the origin alone
    for i in 0..ring.nvars() {
        if !saturate_poly(&ideal, &Poly::variable(ring, i))?.is_unit() {
            return Err(Error::NotMPrimary);
        }
    }
    Ok(count)
}

/// `λ(outer / inner)` for `inner ⊆ outer`, as the number of monomials in
/// `in(outer) \ in(inner)`.
///
/// The difference of Hilbert series of the two initial ideals is the Hilbert series of
/// the quotient; it is finite exactly when that difference is divisible by `(1 - t)^n`.
pub fn quotient_length(inner: &Ideal, outer: &Ideal) -> Result<Length> {
    if inner.ring() != outer.ring() {
        return Err(Error::MixedRings);
    }
    let ring = inner.ring();
    let outer = outer.with_basis();
    if !outer.contains_ideal(inner)? {
        return Err(Error::NotContained);
    }
    let initial = |i: &Ideal| if i.is_zero() { Ok(MonomialIdeal::zero(ring)) } else { initial_ideal(i) };
    let m_in = initial(inner)?;
    let m_out = initial(&outer)?;
    let h_in = hilbert_series(&m_in).numerator;
    let h_out = hilbert_series(&m_out).numerator;
    let mut diff = h_in;
    poly_add_shifted(&mut diff, &h_out.iter().map(|c| -c).collect::<Vec<_>>(), 0);
    let mut diff = trim(diff);
    for _ in 0..ring.nvars() {
        if diff.iter().all(|&c| c == 0) {
            return Ok(Length::Finite(0));
        }
        if diff.iter().sum::<i64>() != 0 {
            return Ok(Length::Infinite);
        }
        diff = divide_one_minus_t(&diff);
    }
    let total: i64 = diff.iter().sum();
    Ok(Length::Finite(u64::try_from(total).expect("lengths are nonnegative")))
}

pub fn minimal_monomial_generators(m: &MonomialIdeal) -> Vec<Monomial> {
    m.generators().to_vec()
}

/// A minimal homogeneous generating set, chosen greedily from the given generators
/// in order of degree.
pub fn minimal_homogeneous_generators(ideal: &Ideal) -> Result<Vec<Poly>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let ring = ideal.ring();
    let mut gens: Vec<Poly> = ideal.generators().to_vec();
    gens.sort_by_key(|g| g.total_degree().unwrap_or(0));
    let mut chosen: Vec<Poly> = Vec::new();
    let mut idx = 0;
    while idx < gens.len() {
        let d = gens[idx].total_degree().unwrap_or(0);
        let mut span = LinearSpan::new(ring);
        for c in &chosen {
            let dc = c.total_degree().unwrap_or(0);
            for u in monomials_of_degree(ring.nvars(), d - dc) {
                span.insert(&c.mul_term(&ring.field().one(), &u));
            }
        }
        while idx < gens.len() && gens[idx].total_degree().unwrap_or(0) == d {
            if span.insert(&gens[idx]) {
                chosen.push(gens[idx].clone());
            }
            idx += 1;
        }
    }
    Ok(chosen)
}

/// Degrees of a minimal homogeneous generating set.
pub fn generator_degrees(ideal: &Ideal) -> Result<Vec<u32>> {
    let mut degrees: Vec<u32> =
        minimal_homogeneous_generators(ideal)?.iter().map(|g| g.total_degree().unwrap_or(0)).collect();
    degrees.sort_unstable();
    Ok(degrees)
}
