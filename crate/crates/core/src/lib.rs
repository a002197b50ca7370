//! Exact stability decisions for logarithmic and meromorphic co-Higgs pairs,
//! coherent systems and holomorphic triples on the projective line.

pub mod coherent;
pub mod cohiggs;
pub mod error;
pub mod exactpoly;
pub mod rat;
pub mod splitbundles;
pub mod triples;
pub mod verdict;

pub use error::{Error, Result};
pub use rat::Rat;
pub use verdict::{Certificate, Status, Verdict};
