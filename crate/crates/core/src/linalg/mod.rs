//! Exact integer linear algebra.

mod matrix;
mod poly;
mod roots;
mod snf;

pub use matrix::{IntMatrix, Primitivity};
pub use poly::IntPoly;
pub(crate) use roots::refine;
pub use roots::{cauchy_bound, largest_real_root, RootBracket, SturmSequence, DEFAULT_TOL};
pub use snf::{smith_normal_form, SmithForm};
