//! Exact computations for solvable Lie algebras: nilradicals, splittable and
//! unipotent hulls, Chevalley–Eilenberg cohomology, invariant cochain
//! models, formality, hard Lefschetz and the type (I) Kähler obstruction.
//!
//! All arithmetic is over the rationals.

pub mod classify;
pub mod cochain;
pub mod error;
pub mod fixtures;
pub mod formality;
pub mod forms;
pub mod hull;
pub mod invariants;
pub mod io;
pub mod lefschetz;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod rational;

pub use error::{Error, ErrorKind, Result};
