//! Exact computations around the spherical wicket and Hilden groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`braid`]: braid words on `m` strands, their permutations and
//!   pairing/closure invariants, and constructors for every named braid
//!   (wicket generators, Hilden generators, the `w_{4n+8}` / `w_{4n+6}`
//!   families).
//! * [`artin`]: the Artin action on a free group, used as an exact
//!   equality oracle for disk braids.
//! * [`linalg`]: arbitrary-precision integer matrices and polynomials:
//!   characteristic polynomials, primitivity, Smith normal form and
//!   certified real-root isolation.
//! * [`train_track`]: incidence matrices of the invariant train tracks
//!   and prong bookkeeping.
//! * [`dilatation`]: the closed-form polynomial family, certified
//!   dilatations and normalized entropies.
//! * [`presentation`]: the finite presentation of the hyperelliptic
//!   handlebody group, its abelianization and relation checks.

pub mod artin;
pub mod braid;
pub mod dilatation;
mod error;
pub mod linalg;
pub mod presentation;
pub mod train_track;

pub use error::{Error, Result};
