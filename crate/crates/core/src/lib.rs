//! Exact computations with 3-Hom-Lie algebras, their representations,
//! bialgebras, 3-Hom-pre-Lie algebras and symplectic structures.
//!
//! All arithmetic is over the rationals. Structure constants are stored
//! densely and every identity check is exhaustive over basis tuples, so a
//! failing check always comes with the first offending tuple.

#![allow(clippy::needless_range_loop)]

pub mod bialgebra;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod homlie;
pub mod io;
pub mod prelie;
pub mod report;
pub mod reps;
pub mod symplectic;
pub mod yangbaxter;

/// Largest dimension accepted by constructions that grow their input.
pub const MAX_DIM: usize = 24;

pub use error::{Error, Result};
pub use exactlin::{Mat, Rat, Tensor4, Vector};
pub use homlie::{check_algebra, Algebra3, AlgebraChecks};
pub use report::{CheckReport, Report, Witness};
pub use prelie::{PreLie3, PreLieRep};
pub use reps::Rep3;
pub use symplectic::{BilForm, FormKind};
