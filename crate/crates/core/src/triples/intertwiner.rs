use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{solve_affine, FormMatrix};

/// Solutions `A₂ = particular + span(basis)` of `A₂ M = M A₁`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwinerSolution {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub particular: Option<FormMatrix>,
    pub basis: Vec<FormMatrix>,
}

fn is_balanced(d: &[i64]) -> bool {
    d.windows(2).all(|w| w[0] == w[1])
}

fn check_constant(a1: &FormMatrix) -> Result<()> {
    if !a1.is_square() || a1.row_degrees() != a1.col_degrees() || !is_balanced(a1.col_degrees()) {
        return Err(Error::Precondition("A₁ must be a square constant matrix".into()));
    }
    Ok(())
}

/// Constant matrices `A₂` with `A₂ M = M A₁`, for a constant `A₁` on a
/// balanced `E₁` and `M : E₁ -> E₂` with `E₂` balanced.
pub fn intertwiner_solve(a1: &FormMatrix, m: &FormMatrix) -> Result<IntertwinerSolution> {
    check_constant(a1)?;
    if m.col_degrees() != a1.row_degrees() {
        return Err(Error::DegreeMismatch("M must have source E₁".into()));
    }
    if !is_balanced(m.row_degrees()) {
        return Err(Error::Precondition("target of M must be balanced".into()));
    }
    let rhs = m.mul(a1)?;
    let rows = m.row_degrees();
    let sol = solve_affine(rows, rows, |x| x.mul(m).expect("shapes agree").sub(&rhs).expect("shapes agree"));
    Ok(match sol {
        Some(s) => IntertwinerSolution { particular: Some(s.particular), basis: s.basis },
        None => IntertwinerSolution { particular: None, basis: Vec::new() },
    })
}

/// Basis of the constant matrices commuting with `A₁`.
pub fn commutant(a1: &FormMatrix) -> Result<Vec<FormMatrix>> {
    check_constant(a1)?;
    let d = a1.row_degrees();
    let sol = solve_affine(d, d, |x| x.mul(a1).expect("square").sub(&a1.mul(x).expect("square")).expect("square"))
        .expect("zero solves the commutator equation");
    Ok(sol.basis)
}
