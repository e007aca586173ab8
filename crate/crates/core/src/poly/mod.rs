//! Exact-rational sparse polynomials in the variables `x0, ..., xn`.

mod change;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub use change::{ChangeKind, LinearChange};
pub use monomial::{monomials_of_degree, Monomial};
pub use order::{cmp_monomials, MonomialOrder, RingContext, TieBreak};
pub use parse::{parse_expr, parse_ideal, parse_polynomial, Expr};
pub use polynomial::{leading_term, Polynomial};

pub use change::apply_change;
