//! Partitions, compositions and tableaux.
//!
//! Coordinates follow English notation: row 1 is the top row and columns
//! grow to the right. Enumerations return tableaux sorted by row word.

mod enumerate;
mod partition;
mod tableau;

pub use enumerate::{
    enumerate_cst, enumerate_rst, enumerate_syt, kostka_number, syt_count, DEFAULT_ENUMERATION_CAP,
};
pub use partition::{Cell, Composition, Partition};
pub use tableau::{css, superstandard, Tableau};
