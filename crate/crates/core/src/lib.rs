//! Exact computer algebra for complete-intersection liaison of homogeneous
//! ideals over a prime field.

pub mod betti;
pub mod bound;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod linkage;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod report;
pub mod ring;
pub mod suites;

pub use error::{Error, Result};
pub use field::{FieldScalar, PrimeField, DEFAULT_CHARACTERISTIC};
pub use groebner::{groebner_basis, normal_form, GroebnerBasis};
pub use ideal::Ideal;
pub use monomial::{compare_monomials, graded_monomial_basis, Monomial, MonomialOrder};
pub use parse::{parse_ideal, parse_polynomial, parse_session, Session};
pub use poly::Polynomial;
pub use ring::Ring;
