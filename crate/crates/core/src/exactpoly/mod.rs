//! Exact arithmetic on binary forms, form-valued matrices and
//! characteristic polynomials.

pub mod bipoly;
pub mod field;
pub mod form;
pub mod linalg;
pub mod matrix;
pub mod upoly;

pub use bipoly::{char_poly, eisenstein_irreducible, eisenstein_scan, scan_places, BiPoly};
pub use field::{Field, QuadraticField, Rationals};
pub use form::{form_gcd, gcd_all, square_over_c_test, BinForm, Place, SquareTest};
pub use matrix::{solve_affine, AffineSolution, FormMatrix};
