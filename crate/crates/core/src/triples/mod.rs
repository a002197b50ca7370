//! Holomorphic triples of co-Higgs pairs: compatibility, `ν_α` slopes and
//! windows, duality, subtriple enumeration, stability, Harder–Narasimhan
//! filtrations and the constant intertwiner equation.

mod hn;
mod intertwiner;
mod subtriples;
mod triple;

pub use hn::{hn_filtration, maximal_destabilizer, quotient_triple, restrict_triple, verify_hn, HNChain, HNStep};
pub use intertwiner::{commutant, intertwiner_solve, IntertwinerSolution};
pub use subtriples::{
    decide_nu_alpha, enumerate_subtriples, saturated_image, OpenFamily, Piece, Subtriple, SubtripleEnumeration,
    MAX_FACTOR_RANK,
};
pub use triple::{
    alpha_window, alpha_window_of, dual_pair, dual_triple, nu_alpha, nu_alpha_of, shift_family, validate_triple,
    AlphaWindow, Triple,
};
