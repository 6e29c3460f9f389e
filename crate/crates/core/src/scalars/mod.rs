//! Exact scalars: Z[q^{+-1}], Z[q^{+-1}, t^{+-1}], Q(q) and linear algebra over them.

mod bigraded;
mod laurent;
pub mod linalg;
mod parse;
mod qnum;
mod rational;

pub use bigraded::{BiLaurent, BiRational};
pub use laurent::LaurentPoly;
pub use linalg::rank_over_qq;
pub use parse::parse_rational;
pub use qnum::{q_binom, q_fact, q_int, q_int_poly, q_multinom};
pub use rational::RationalQ;

/// Shorthand used throughout tests and tables: parse a Q(q) expression.
///
/// Panics on malformed input.
pub fn rq(s: &str) -> RationalQ {
    parse_rational(s).unwrap_or_else(|e| panic!("bad literal {s:?}: {e}"))
}
