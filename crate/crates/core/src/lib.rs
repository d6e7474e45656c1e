//! Exact computation of generalized Pascal triangles: Hoggatt coefficients
//! of order `d` and their q-, Fibonacci- and Fibonacci-polynomial analogs,
//! with determinant and generating-function identity checks.

pub mod detkit;
pub mod error;
pub mod exactring;
pub mod genfunc;
pub mod hoggatt;
pub mod par;
pub mod seqcore;
pub mod ssytoracle;

pub use error::{Error, Result};
