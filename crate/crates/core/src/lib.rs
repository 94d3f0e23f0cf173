//! Tableau combinatorics with exact cyclic sieving checks.
//!
//! The crate is organised bottom-up: `tabcore` holds shapes and fillings,
//! `jdt` the sliding operators, `permrsk` permutations and insertion,
//! `qpoly` and `cyclo` exact polynomial and root-of-unity arithmetic,
//! `klcells` Kazhdan-Lusztig data, `ribbon` ribbon tableaux, and `sieve`
//! the fixed-point versus evaluation comparisons built on all of them.

pub mod cyclo;
pub mod error;
pub mod jdt;
pub mod klcells;
pub mod permrsk;
pub mod qpoly;
pub mod ribbon;
pub mod sieve;
pub mod tabcore;

pub use error::{Error, Result};
