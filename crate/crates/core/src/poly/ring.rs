use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::MonomialOrder;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// A polynomial ring `K[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: FieldSpec,
    variables: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(field: FieldSpec, variables: Vec<String>, order: MonomialOrder) -> Result<Arc<Ring>> {
        if variables.is_empty() {
            return Err(Error::NoVariables);
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::Elimination { block } = order {
            if block == 0 || block >= variables.len() {
                return Err(Error::BadEliminationBlock { block, vars: variables.len() });
            }
        }
        Ok(Arc::new(Ring { field, variables, order }))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::new(self.field, self.variables.clone(), order)
    }

    /// A name based on `base` that is not a variable of this ring.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = String::from(base);
        while self.var_index(&name).is_some() {
            name = format!("_{name}");
        }
        name
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for (i, v) in self.variables.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")?;
        match self.order {
            MonomialOrder::DegRevLex => Ok(()),
            MonomialOrder::Lex => write!(f, " order=lex"),
            MonomialOrder::Elimination { block } => write!(f, " order=elim{block}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn validation() {
        let q = FieldSpec::Rationals;
        assert!(Ring::new(q, vec!["x".into(), "y".into()], MonomialOrder::Lex).is_ok());
        assert_eq!(
            Ring::new(q, vec!["x".into(), "x".into()], MonomialOrder::Lex),
            Err(Error::DuplicateVariable("x".into()))
        );
        assert_eq!(
            Ring::new(q, vec!["x".into()], MonomialOrder::Elimination { block: 1 }),
            Err(Error::BadEliminationBlock { block: 1, vars: 1 })
        );
        assert_eq!(Ring::new(q, vec![], MonomialOrder::Lex), Err(Error::NoVariables));
    }

    #[test]
    fn display_and_fresh_names() {
        let r = Ring::new(FieldSpec::Prime(5), vec!["x".into(), "y".into()], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(r.to_string(), "F5[x,y]");
        assert_eq!(r.fresh_name("y"), "_y");
        assert_eq!(r.fresh_name("z"), "z");
    }
}
