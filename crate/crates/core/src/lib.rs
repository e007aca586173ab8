//! Exact computer algebra for generic initial ideals.
//!
//! The crate works over the rationals with arbitrary-precision integers and
//! covers the chain of constructions needed to study Hilbert points:
//!
//! * [`poly`]: monomials, monomial orders, sparse polynomials, linear changes
//!   of coordinates and the polynomial text grammar.
//! * [`linalg`]: fraction-free elimination, determinants and kernels.
//! * [`groebner`]: division, Buchberger's algorithm, initial ideals, graded
//!   pieces and monomial-ideal colon/saturation.
//! * [`hilbert`]: Hilbert functions and polynomials, Gotzmann expansions,
//!   lex segment ideals and the reverse-lexicographic segment checks.
//! * [`grassmann`]: Hilbert points as canonical matrices, Schubert indices and
//!   Plücker coordinates.
//! * [`gin`]: generic initial ideals, Borel-fixedness, secondary gins, weight
//!   vectors and one-parameter-subgroup limit checks.

pub mod error;
pub mod gin;
pub mod grassmann;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod poly;

pub use error::{Error, ParseError, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
