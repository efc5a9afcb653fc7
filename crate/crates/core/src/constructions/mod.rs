//! Generalized symbolic powers, form ideals, Rees algebras and the probes built on them.

mod forms;
mod probes;
mod rees;

pub use forms::{alpha_map, form_ideal, leading_form, set_s_to_zero, sharp_ideal, sharp_map, sharp_ring};
pub use probes::{
    form_algebra_probe, form_algebra_row, growth_row, growth_table, veronese_probe, veronese_row, GrowthRow,
    GrowthTable, ProbeReport, ProbeRow, ProbeSummary,
};
pub use rees::{analytic_spread, fiber_ideal, rees_presentation};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::ideal_ops::{power, saturate_ideal};

/// `I^k : J^inf`.
pub fn symbolic_power(ideal: &Ideal, by: &Ideal, k: u32) -> Result<Ideal> {
    if ideal.ring() != by.ring() {
        return Err(Error::MixedRings);
    }
    if k == 0 {
        return Ok(Ideal::unit(ideal.ring()));
    }
    saturate_ideal(&power(ideal, k), by)
}

/// The saturated power `I^k : m^inf`, where `m` is generated by all variables.
pub fn saturated_power(ideal: &Ideal, k: u32) -> Result<Ideal> {
    symbolic_power(ideal, &Ideal::maximal(ideal.ring()), k)
}
