//! Exact scalar, polynomial, series and matrix arithmetic.

mod matrix;
mod poly;
mod ring;
mod series;

pub use matrix::RingMatrix;
pub use poly::{Bindings, Monomial, SparsePoly, Var, MAX_EXPONENT};
pub use ring::{choose2, sign_pow, Integer, Ring};
pub use series::TruncatedSeries;

#[cfg(test)]
pub(crate) use poly::p;
