//! Exact polars and quasi-convex hulls in the circle group `T`, finite
//! cyclic groups `Z(n)`, truncations of the 3-adic integers, and the real
//! line, with checkers for the characterizations of quasi-convex null
//! sequences `{0} ∪ {±p^{-(a_n+1)}}` and `{0} ∪ {±3^{a_n}}`.
//!
//! All arithmetic is exact: points of `T` are reduced fractions, residues
//! are machine integers with 128-bit products, and real intervals have
//! rational endpoints.

pub mod circle;
pub mod cli;
pub mod error;
pub mod families;
pub mod padic;
pub mod polar;
pub mod real_line;
pub mod suite;
pub mod witnesses;

pub use circle::{RationalIntervalUnion, UnitRational};
pub use error::{Error, Result};
pub use families::{DivisibleChain, FamilyKind, GapSequence, Verdict};
pub use polar::{CyclicSet, GridSet, HullReport, ResidueSet};
