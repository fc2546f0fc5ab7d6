use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{PrimeField, DEFAULT_CHARACTERISTIC};
use crate::monomial::{MonomialOrder, MAX_VARS};

/// The ambient graded ring k[x_1, ..., x_n] with k = GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    variables: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new<S: AsRef<str>>(characteristic: u64, variables: &[S], order: MonomialOrder) -> Result<Arc<Ring>> {
        let field = PrimeField::new(characteristic)?;
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        if variables.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceeds the limit of {MAX_VARS}",
                variables.len()
            )));
        }
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k == 0 || k >= variables.len() {
                return Err(Error::InvalidRing(format!(
                    "elimination block size {k} must satisfy 1 <= k < {}",
                    variables.len()
                )));
            }
        }
        Ok(Arc::new(Ring {
            field,
            variables,
            order,
        }))
    }

    /// Grevlex ring over GF(32003).
    pub fn grevlex<S: AsRef<str>>(variables: &[S]) -> Result<Arc<Ring>> {
        Ring::new(DEFAULT_CHARACTERISTIC as u64, variables, MonomialOrder::Grevlex)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Ring>> {
        Ring::new(self.characteristic() as u64, &self.variables, order)
    }

    /// Subring on a subset of the variables (kept in their original
    /// relative order), with grevlex order.
    pub fn subring(&self, keep: &[usize]) -> Result<Arc<Ring>> {
        let names: Vec<&str> = keep.iter().map(|&i| self.variables[i].as_str()).collect();
        Ring::new(self.characteristic() as u64, &names, MonomialOrder::Grevlex)
    }

    /// A variable name not already used, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.var_index(n).is_none())
            .unwrap()
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({})[{}] {}",
            self.characteristic(),
            self.variables.join(","),
            self.order
        )
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Ring::grevlex(&["x", "y"]).is_ok());
        assert!(Ring::grevlex(&["x", "x"]).is_err());
        assert!(Ring::grevlex(&["1x"]).is_err());
        assert!(Ring::new(32003, &["t", "x"], MonomialOrder::Elimination(1)).is_ok());
        assert!(Ring::new(32003, &["t", "x"], MonomialOrder::Elimination(2)).is_err());
        assert!(Ring::new(32002, &["x"], MonomialOrder::Lex).is_err());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = Ring::grevlex(&["x", "t", "t_1"]).unwrap();
        assert_eq!(r.fresh_name("t"), "t_2");
        assert_eq!(r.fresh_name("u"), "u");
    }
}
