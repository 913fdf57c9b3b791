//! Vectorial Boolean functions over GF(2^n): annihilators, algebraic
//! immunity, the cyclic codes generated by `G_F`, complements, filter
//! generator keystreams and related bounds.

pub mod annihil;
pub mod bounds;
pub mod codes;
pub mod complement;
pub mod corpus;
pub mod error;
pub mod field;
pub mod funcrep;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod seq;

pub use error::{Error, Result};
pub use field::{make_field, Field, FieldElement};
pub use funcrep::{BooleanFunction, VectorialFunction};
