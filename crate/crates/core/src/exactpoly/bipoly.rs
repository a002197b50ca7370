//! Polynomials in `t` whose coefficients are binary forms, graded so that the
//! coefficient of `t^(r-i)` has form-degree `i·k`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::form::{BinForm, Place};
use super::matrix::{subsets, FormMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiPoly {
    tdegree: usize,
    grading: i64,
    /// `coeffs[i]` multiplies `t^(tdegree - i)`.
    coeffs: Vec<BinForm>,
}

fn graded_degree(i: usize, k: i64) -> usize {
    (i as i64 * k).max(0) as usize
}

impl BiPoly {
    pub fn new(grading: i64, coeffs: Vec<BinForm>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::MalformedForm("t-polynomial needs a leading coefficient".into()));
        }
        let tdegree = coeffs.len() - 1;
        let mut fixed = Vec::with_capacity(coeffs.len());
        for (i, c) in coeffs.into_iter().enumerate() {
            let want = i as i64 * grading;
            if !c.is_zero() && c.degree() as i64 != want {
                return Err(Error::DegreeMismatch(format!(
                    "coefficient of t^{} has degree {}, expected {want}",
                    tdegree - i,
                    c.degree()
                )));
            }
            fixed.push(c.with_degree(graded_degree(i, grading)).unwrap());
        }
        Ok(BiPoly { tdegree, grading, coeffs: fixed })
    }

    pub fn tdegree(&self) -> usize {
        self.tdegree
    }

    pub fn grading(&self) -> i64 {
        self.grading
    }

    pub fn coeffs(&self) -> &[BinForm] {
        &self.coeffs
    }

    /// Coefficient of `t^(tdegree - i)`.
    pub fn coeff(&self, i: usize) -> &BinForm {
        &self.coeffs[i]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0] == BinForm::one()
    }

    /// `p(λ)` for a form `λ` of degree `k`; the result has degree `r·k`.
    pub fn eval_form(&self, lambda: &BinForm) -> BinForm {
        let mut acc = BinForm::zero(0);
        for c in &self.coeffs {
            acc = acc.mul(lambda).add(c);
        }
        acc.with_degree(graded_degree(self.tdegree, self.grading)).unwrap_or_else(|f| panic!("{f}"))
    }

    /// Dehomogenized at `place`: the coefficient list of `t^(r-i)` as
    /// polynomials in the affine coordinate centred away from the place.
    pub fn dehomogenize(&self, place: &Place) -> Vec<Vec<crate::rat::Rat>> {
        self.coeffs
            .iter()
            .map(|c| match place {
                Place::Infinity => c.dehomogenize_at_infinity(),
                Place::Finite(_) => c.dehomogenize(),
            })
            .collect()
    }

    /// Exact division by `t - λ`; `None` unless `λ` is a root.
    pub fn divide_linear(&self, lambda: &BinForm) -> Option<BiPoly> {
        if self.tdegree == 0 {
            return None;
        }
        let mut out = Vec::with_capacity(self.tdegree);
        let mut acc = BinForm::zero(0);
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.mul(lambda).add(c).with_degree(graded_degree(i, self.grading)).ok()?;
            if i < self.tdegree {
                out.push(acc.clone());
            }
        }
        if !acc.is_zero() {
            return None;
        }
        BiPoly::new(self.grading, out).ok()
    }
}

/// `det(t·I − M)` for a field `M : E -> E(k)`.
pub fn char_poly(m: &FormMatrix, k: i64) -> Result<BiPoly> {
    if !m.is_square() {
        return Err(Error::NotTwistedEndomorphism("matrix is not square".into()));
    }
    let shifted: Vec<i64> = m.col_degrees().iter().map(|a| a + k).collect();
    if m.row_degrees() != shifted.as_slice() {
        return Err(Error::NotTwistedEndomorphism(format!(
            "row degrees {:?} are not column degrees {:?} twisted by {k}",
            m.row_degrees(),
            m.col_degrees()
        )));
    }
    if let Some(msg) = m.ledger_violation() {
        return Err(Error::NotTwistedEndomorphism(msg));
    }
    let r = m.rows();
    let mut coeffs = vec![BinForm::one()];
    for i in 1..=r {
        let mut sum = BinForm::zero(graded_degree(i, k));
        for s in subsets(r, i) {
            sum = sum.add(&m.minor(&s, &s));
        }
        if i % 2 == 1 {
            sum = sum.neg();
        }
        coeffs.push(sum.with_degree(graded_degree(i, k))?);
    }
    BiPoly::new(k, coeffs)
}

/// Eisenstein's criterion at the linear place: every lower coefficient is
/// divisible by the place and the constant term is not divisible by its
/// square. `false` is inconclusive.
pub fn eisenstein_irreducible(p: &BiPoly, place: &Place) -> Result<bool> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if p.tdegree == 0 {
        return Ok(false);
    }
    let lower_ok = p.coeffs[1..].iter().all(|c| c.is_zero() || c.multiplicity_at(place) >= 1);
    let last = &p.coeffs[p.tdegree];
    Ok(lower_ok && !last.is_zero() && last.multiplicity_at(place) == 1)
}

/// The fixed place scan: `0, 1, -1, 2, -2, ∞`.
pub fn scan_places() -> Vec<Place> {
    let mut v: Vec<Place> = [0i64, 1, -1, 2, -2].iter().map(|&z| Place::Finite(crate::rat::rat(z))).collect();
    v.push(Place::Infinity);
    v
}

/// First place in the scan where Eisenstein certifies irreducibility.
pub fn eisenstein_scan(p: &BiPoly) -> Result<Option<Place>> {
    for place in scan_places() {
        if eisenstein_irreducible(p, &place)? {
            return Ok(Some(place));
        }
    }
    Ok(None)
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.tdegree - i;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let tpart = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            if c == &BinForm::one() && e > 0 {
                write!(f, "{tpart}")?;
            } else if tpart.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{tpart}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl BiPoly {
    /// `t − λ` for a form `λ` of degree `k`.
    pub fn linear(lambda: &BinForm, k: i64) -> Self {
        BiPoly::new(k, vec![BinForm::one(), lambda.neg()]).expect("graded by construction")
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.grading, other.grading, "multiplying t-polynomials of different gradings");
        let n = self.tdegree + other.tdegree;
        let mut coeffs: Vec<BinForm> = (0..=n).map(|i| BinForm::zero(graded_degree(i, self.grading))).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        BiPoly { tdegree: n, grading: self.grading, coeffs }
    }

    /// `p(Φ)` as a map `E -> E(r·k)`, for `Φ : E -> E(k)` with `k = grading`.
    pub fn at_field(&self, phi: &FormMatrix) -> FormMatrix {
        let src = phi.col_degrees().to_vec();
        let mut acc = FormMatrix::scalar(&src, &self.coeffs[0]);
        for i in 1..=self.tdegree {
            let step = phi.twisted((i as i64 - 1) * self.grading);
            acc = step
                .mul(&acc)
                .and_then(|m| m.add(&FormMatrix::scalar(&src, &self.coeffs[i])))
                .expect("graded Horner step keeps the ledger");
        }
        acc
    }

    /// `t^r` with grading `k`.
    pub fn monomial_power(r: usize, k: i64) -> Self {
        let mut coeffs = vec![BinForm::one()];
        for i in 1..=r {
            coeffs.push(BinForm::zero(graded_degree(i, k)));
        }
        BiPoly { tdegree: r, grading: k, coeffs }
    }

    /// Whether all non-leading coefficients vanish.
    pub fn is_pure_power(&self) -> bool {
        self.coeffs[1..].iter().all(BinForm::is_zero) && self.coeffs[0].coeffs()[0].is_one()
    }

    pub fn leading_is_nonzero(&self) -> bool {
        !self.coeffs[0].coeffs().iter().all(Zero::is_zero)
    }
}
