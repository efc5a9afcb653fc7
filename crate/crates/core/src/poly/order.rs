use core::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

/// A global monomial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Block order: the first `block` variables are compared first, each block by DegRevLex.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison for monomials already known to have equal length.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => x.cmp(y),
            MonomialOrder::DegRevLex => degrevlex(x, y),
            MonomialOrder::Elimination { block } => {
                let block = block.min(x.len());
                degrevlex(&x[..block], &y[..block]).then_with(|| degrevlex(&x[block..], &y[block..]))
            }
        }
    }
}

fn degrevlex(x: &[u32], y: &[u32]) -> Ordering {
    let dx: u64 = x.iter().map(|&e| u64::from(e)).sum();
    let dy: u64 = y.iter().map(|&e| u64::from(e)).sum();
    dx.cmp(&dy).then_with(|| {
        for (a, b) in x.iter().zip(y).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    })
}
