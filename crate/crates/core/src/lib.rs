//! Exact computer algebra for anticyclic operads.
//!
//! The crate covers the symmetric-function calculus on power sums
//! (plethysm, suspension, Legendre transform, Schur expansion), the
//! non-symmetric anticyclic operads Dias and Dend with their cyclic
//! actions, the induced symmetric operads together with their sub-operads
//! and quotients (Leib, PreLie, Perm, Zinb), and closed-form
//! characteristic functions to check them against.

pub mod characters;
pub mod error;
pub mod linalg;
pub mod nsoperad;
pub mod numbercomb;
pub mod rat;
pub mod symfunc;
pub mod symoperad;
pub mod verify;

pub use error::{Error, Result};
pub use numbercomb::Partition;
pub use rat::Rat;
pub use symfunc::SymFunc;
