use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{form_ideal, symbolic_power};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::{power, product, sum};
use crate::invariants::{quotient_length, Length};
use crate::poly::Poly;

/// The verdict for one degree `k`; a failed verdict carries a generator of the larger
/// ideal that the smaller one misses.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeRow {
    pub k: u32,
    pub verdict: bool,
    pub witness: Option<Poly>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbeSummary {
    AllPass,
    FailAt(u32),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub rows: Vec<ProbeRow>,
    pub summary: ProbeSummary,
}

impl ProbeReport {
    /// Sorts the rows by `k` and summarizes them by the first failure.
    pub fn from_rows(mut rows: Vec<ProbeRow>) -> Self {
        rows.sort_by_key(|r| r.k);
        let summary = rows.iter().find(|r| !r.verdict).map_or(ProbeSummary::AllPass, |r| ProbeSummary::FailAt(r.k));
        ProbeReport { rows, summary }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthRow {
    pub k: u32,
    pub length: u64,
    pub ratio: BigRational,
}

impl GrowthRow {
    pub fn new(k: u32, length: u64, exponent: u32) -> Self {
        let denom = num_traits::pow(BigInt::from(k), exponent as usize);
        GrowthRow { k, length, ratio: BigRational::new(BigInt::from(length), denom) }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthTable {
    pub subject: String,
    pub exponent: u32,
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    pub fn from_rows(subject: String, exponent: u32, mut rows: Vec<GrowthRow>) -> Self {
        rows.sort_by_key(|r| r.k);
        GrowthTable { subject, exponent, rows }
    }

    /// A table of rows produced by [`growth_row`].
    pub fn of_saturations(exponent: u32, rows: Vec<GrowthRow>) -> Self {
        Self::from_rows(String::from("length((I^k : J^inf) / I^k)"), exponent, rows)
    }
}

/// Compares `small ⊆ large`; on failure returns the first displayed generator of
/// `large` outside `small`.
fn compare(k: u32, small: &Ideal, large: &Ideal) -> Result<ProbeRow> {
    let small = small.with_basis();
    for g in large.with_basis().canonical_generators() {
        if !small.contains(&g)? {
            return Ok(ProbeRow { k, verdict: false, witness: Some(g) });
        }
    }
    Ok(ProbeRow { k, verdict: true, witness: None })
}

fn check_range(k_max: u32) -> Result<()> {
    if k_max < 2 {
        return Err(Error::InvalidArgument(String::from("kmax must be at least 2")));
    }
    Ok(())
}

fn veronese_row_with_base(ideal: &Ideal, by: &Ideal, base: &Ideal, d: u32, k: u32) -> Result<ProbeRow> {
    let lhs = power(base, k);
    let rhs = symbolic_power(ideal, by, d.checked_mul(k).ok_or(Error::ExponentOverflow)?)?;
    compare(k, &lhs, &rhs)
}

/// Whether `(I^d : J^inf)^k = I^(dk) : J^inf`.
pub fn veronese_row(ideal: &Ideal, by: &Ideal, d: u32, k: u32) -> Result<ProbeRow> {
    if d == 0 {
        return Err(Error::InvalidArgument(String::from("d must be at least 1")));
    }
    let base = symbolic_power(ideal, by, d)?;
    veronese_row_with_base(ideal, by, &base, d, k)
}

/// Checks that the `d`-th Veronese subalgebra of `⊕ I^k : J^inf` is generated in degree
/// one, for `k = 2..=k_max`.
pub fn veronese_probe(ideal: &Ideal, by: &Ideal, d: u32, k_max: u32) -> Result<ProbeReport> {
    check_range(k_max)?;
    if d == 0 {
        return Err(Error::InvalidArgument(String::from("d must be at least 1")));
    }
    let base = symbolic_power(ideal, by, d)?;
    let rows = (2..=k_max).map(|k| veronese_row_with_base(ideal, by, &base, d, k)).collect::<Result<Vec<_>>>()?;
    Ok(ProbeReport::from_rows(rows))
}

fn form_algebra_row_with_forms(k: u32, forms: &[Ideal]) -> Result<ProbeRow> {
    let k = k as usize;
    // forms[a - 1] = (I^a)*
    let mut lower: Option<Ideal> = None;
    for a in 1..=k / 2 {
        let piece = product(&forms[a - 1], &forms[k - a - 1])?;
        lower = Some(match lower {
            None => piece,
            Some(acc) => sum(&acc, &piece)?,
        });
    }
    let lower = lower.expect("k is at least 2");
    compare(k as u32, &lower, &forms[k - 1])
}

fn forms_of_powers(ideal: &Ideal, k: u32) -> Result<Vec<Ideal>> {
    (1..=k).map(|a| form_ideal(&power(ideal, a))).collect()
}

/// Whether `(I^k)* = Σ_{0<a<k} (I^a)* (I^(k-a))*`, i.e. the form algebra has no new
/// generator in degree `k`.
pub fn form_algebra_row(ideal: &Ideal, k: u32) -> Result<ProbeRow> {
    if k < 2 {
        return Err(Error::InvalidArgument(String::from("k must be at least 2")));
    }
    form_algebra_row_with_forms(k, &forms_of_powers(ideal, k)?)
}

/// Looks for new generators of `⊕ (I^k)*` in degrees `2..=k_max`.
///
/// A failure proves the algebra is not standard graded; passing rows are evidence only.
pub fn form_algebra_probe(ideal: &Ideal, k_max: u32) -> Result<ProbeReport> {
    check_range(k_max)?;
    let forms = forms_of_powers(ideal, k_max)?;
    let rows = (2..=k_max).map(|k| form_algebra_row_with_forms(k, &forms)).collect::<Result<Vec<_>>>()?;
    Ok(ProbeReport::from_rows(rows))
}

/// `λ((I^k : J^inf) / I^k)` and its ratio to `k^e`.
pub fn growth_row(ideal: &Ideal, by: &Ideal, exponent: u32, k: u32) -> Result<GrowthRow> {
    if k == 0 {
        return Err(Error::InvalidArgument(String::from("k must be at least 1")));
    }
    let inner = power(ideal, k);
    let outer = symbolic_power(ideal, by, k)?;
    match quotient_length(&inner, &outer)? {
        Length::Finite(n) => Ok(GrowthRow::new(k, n, exponent)),
        Length::Infinite => Err(Error::InfiniteLength(k)),
    }
}

pub fn growth_table(ideal: &Ideal, by: &Ideal, exponent: u32, k_max: u32) -> Result<GrowthTable> {
    let rows = (1..=k_max).map(|k| growth_row(ideal, by, exponent, k)).collect::<Result<Vec<_>>>()?;
    Ok(GrowthTable::of_saturations(exponent, rows))
}
