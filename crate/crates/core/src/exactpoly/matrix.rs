//! Matrices of binary forms with a degree ledger: entry `(j, i)` is a form of
//! degree `row_degrees[j] - col_degrees[i]`, forced to zero when negative.
//! Such a matrix is a map `⊕ O(col_degrees[i]) -> ⊕ O(row_degrees[j])`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::form::{gcd_all, BinForm};
use super::linalg::{self, QMatrix};
use crate::error::{Error, Result};
use crate::rat::{rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct FormMatrix {
    rows: usize,
    cols: usize,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    entries: Vec<BinForm>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    entries: Vec<BinForm>,
}

impl TryFrom<MatrixRepr> for FormMatrix {
    type Error = Error;
    fn try_from(r: MatrixRepr) -> Result<Self> {
        if r.row_degrees.len() != r.rows || r.col_degrees.len() != r.cols {
            return Err(Error::Ledger("degree lists do not match the shape".into()));
        }
        FormMatrix::new(r.row_degrees, r.col_degrees, r.entries)
    }
}

impl From<FormMatrix> for MatrixRepr {
    fn from(m: FormMatrix) -> Self {
        MatrixRepr {
            rows: m.rows,
            cols: m.cols,
            row_degrees: m.row_degrees,
            col_degrees: m.col_degrees,
            entries: m.entries,
        }
    }
}

fn slot_degree(row: i64, col: i64) -> Option<usize> {
    usize::try_from(row - col).ok()
}

impl FormMatrix {
    /// Validates the ledger and normalizes the degree tags of zero entries.
    pub fn new(row_degrees: Vec<i64>, col_degrees: Vec<i64>, entries: Vec<BinForm>) -> Result<Self> {
        let m = Self::from_raw(row_degrees, col_degrees, entries)?;
        if let Some(msg) = m.ledger_violation() {
            return Err(Error::Ledger(msg));
        }
        Ok(m.normalized())
    }

    /// Stores entries without ledger checks; see [`FormMatrix::ledger_violation`].
    pub fn from_raw(row_degrees: Vec<i64>, col_degrees: Vec<i64>, entries: Vec<BinForm>) -> Result<Self> {
        let (rows, cols) = (row_degrees.len(), col_degrees.len());
        if entries.len() != rows * cols {
            return Err(Error::Ledger(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(FormMatrix { rows, cols, row_degrees, col_degrees, entries })
    }

    pub fn from_fn(
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
        mut entry: impl FnMut(usize, usize) -> BinForm,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(row_degrees.len() * col_degrees.len());
        for j in 0..row_degrees.len() {
            for i in 0..col_degrees.len() {
                entries.push(entry(j, i));
            }
        }
        Self::new(row_degrees, col_degrees, entries)
    }

    pub fn zero(row_degrees: Vec<i64>, col_degrees: Vec<i64>) -> Self {
        Self::from_fn(row_degrees, col_degrees, |_, _| BinForm::zero(0)).expect("zero is valid")
    }

    /// `λ · id` as a map `⊕O(a_i) -> ⊕O(a_i + deg λ)`.
    pub fn scalar(degrees: &[i64], lambda: &BinForm) -> Self {
        let k = lambda.degree() as i64;
        let rows = degrees.iter().map(|a| a + k).collect();
        Self::from_fn(rows, degrees.to_vec(), |j, i| if i == j { lambda.clone() } else { BinForm::zero(0) })
            .expect("scalar matrix respects the ledger")
    }

    pub fn identity(degrees: &[i64]) -> Self {
        Self::scalar(degrees, &BinForm::one())
    }

    /// First ledger violation, if any.
    pub fn ledger_violation(&self) -> Option<String> {
        for j in 0..self.rows {
            for i in 0..self.cols {
                let e = self.get(j, i);
                if e.is_zero() {
                    continue;
                }
                let want = self.row_degrees[j] - self.col_degrees[i];
                if want < 0 || e.degree() as i64 != want {
                    return Some(format!("entry ({j},{i}) has degree {} but the ledger requires {want}", e.degree()));
                }
            }
        }
        None
    }

    fn normalized(mut self) -> Self {
        for j in 0..self.rows {
            for i in 0..self.cols {
                let d = slot_degree(self.row_degrees[j], self.col_degrees[i]).unwrap_or(0);
                let idx = j * self.cols + i;
                if self.entries[idx].is_zero() && self.entries[idx].degree() != d {
                    self.entries[idx] = BinForm::zero(d);
                }
            }
        }
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn entries(&self) -> &[BinForm] {
        &self.entries
    }

    pub fn get(&self, j: usize, i: usize) -> &BinForm {
        &self.entries[j * self.cols + i]
    }

    /// Expected degree of entry `(j, i)`, possibly negative.
    pub fn expected_degree(&self, j: usize, i: usize) -> i64 {
        self.row_degrees[j] - self.col_degrees[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BinForm::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, i: usize) -> Vec<BinForm> {
        (0..self.rows).map(|j| self.get(j, i).clone()).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let cols = idx.iter().map(|&i| self.col_degrees[i]).collect();
        Self::from_fn(self.row_degrees.clone(), cols, |j, c| self.get(j, idx[c]).clone()).unwrap()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows = idx.iter().map(|&j| self.row_degrees[j]).collect();
        Self::from_fn(rows, self.col_degrees.clone(), |r, i| self.get(idx[r], i).clone()).unwrap()
    }

    /// Places `other`'s columns to the right of `self`'s.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.row_degrees != other.row_degrees {
            return Err(Error::DegreeMismatch("hstack needs equal row degrees".into()));
        }
        let mut cols = self.col_degrees.clone();
        cols.extend_from_slice(&other.col_degrees);
        Self::from_fn(self.row_degrees.clone(), cols, |j, i| {
            if i < self.cols {
                self.get(j, i).clone()
            } else {
                other.get(j, i - self.cols).clone()
            }
        })
    }

    /// Same entries, both degree lists shifted by `t` (tensoring with `O(t)`).
    pub fn twisted(&self, t: i64) -> Self {
        FormMatrix {
            rows: self.rows,
            cols: self.cols,
            row_degrees: self.row_degrees.iter().map(|d| d + t).collect(),
            col_degrees: self.col_degrees.iter().map(|d| d + t).collect(),
            entries: self.entries.clone(),
        }
    }

    /// Re-labels the row degrees by `t` while keeping the columns.
    pub fn shift_rows(&self, t: i64, f: &BinForm) -> Self {
        assert_eq!(f.degree() as i64, t);
        let rows = self.row_degrees.iter().map(|d| d + t).collect();
        Self::from_fn(rows, self.col_degrees.clone(), |j, i| self.get(j, i).mul(f)).unwrap()
    }

    /// The dual map, `⊕O(-row) -> ⊕O(-col)`.
    pub fn transpose(&self) -> Self {
        let rows = self.col_degrees.iter().map(|d| -d).collect();
        let cols = self.row_degrees.iter().map(|d| -d).collect();
        Self::from_fn(rows, cols, |j, i| self.get(i, j).clone()).unwrap()
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.row_degrees != other.row_degrees || self.col_degrees != other.col_degrees {
            return Err(Error::DegreeMismatch(format!(
                "ledgers {:?}<-{:?} and {:?}<-{:?} differ",
                self.row_degrees, self.col_degrees, other.row_degrees, other.col_degrees
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Self::from_fn(self.row_degrees.clone(), self.col_degrees.clone(), |j, i| self.get(j, i).add(other.get(j, i)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let entries = self.entries.iter().map(BinForm::neg).collect();
        FormMatrix { entries, ..self.clone() }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let entries = self.entries.iter().map(|e| e.scale(c)).collect();
        FormMatrix { entries, ..self.clone() }.normalized()
    }

    /// Composition `self ∘ other`; requires `self.col_degrees == other.row_degrees`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.col_degrees != other.row_degrees {
            return Err(Error::DegreeMismatch(format!(
                "cannot compose: source {:?} vs target {:?}",
                self.col_degrees, other.row_degrees
            )));
        }
        Self::from_fn(self.row_degrees.clone(), other.col_degrees.clone(), |j, i| {
            let mut acc = BinForm::zero(0);
            for m in 0..self.cols {
                let (a, b) = (self.get(j, m), other.get(m, i));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        })
    }

    /// Value at the point `[z : 1]`.
    pub fn eval_z(&self, z: &Rat) -> QMatrix {
        (0..self.rows).map(|j| (0..self.cols).map(|i| self.get(j, i).eval_z(z)).collect()).collect()
    }

    pub fn eval(&self, x0: &Rat, x1: &Rat) -> QMatrix {
        (0..self.rows).map(|j| (0..self.cols).map(|i| self.get(j, i).eval(x0, x1)).collect()).collect()
    }

    /// Upper bound on the degree of any minor.
    fn minor_degree_bound(&self) -> usize {
        (0..self.rows)
            .map(|j| (0..self.cols).map(|i| self.expected_degree(j, i).max(0)).max().unwrap_or(0))
            .sum::<i64>() as usize
    }

    /// Rank over the function field, by evaluation at enough points.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let full = self.rows.min(self.cols);
        let mut best = 0;
        for z in 0..=self.minor_degree_bound() as i64 {
            best = best.max(linalg::rank(&self.eval_z(&rat(z)), self.cols));
            if best == full {
                break;
            }
        }
        best
    }

    /// Determinant of a square matrix by cofactor expansion.
    pub fn det(&self) -> Result<BinForm> {
        if !self.is_square() {
            return Err(Error::DegreeMismatch("determinant of a non-square matrix".into()));
        }
        let all: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor(&all, &all))
    }

    /// Determinant of the submatrix on `rows × cols` (equal lengths).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> BinForm {
        let deg = (rows.iter().map(|&j| self.row_degrees[j]).sum::<i64>()
            - cols.iter().map(|&i| self.col_degrees[i]).sum::<i64>())
        .max(0) as usize;
        self.minor_rec(rows, cols).with_degree(deg).expect("ledger keeps minors homogeneous")
    }

    fn minor_rec(&self, rows: &[usize], cols: &[usize]) -> BinForm {
        match rows.len() {
            0 => BinForm::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = BinForm::zero(0);
                let rest_rows = &rows[1..];
                for (p, &c) in cols.iter().enumerate() {
                    let e = self.get(rows[0], c);
                    if e.is_zero() {
                        continue;
                    }
                    let rest_cols: Vec<usize> =
                        cols.iter().enumerate().filter(|&(q, _)| q != p).map(|(_, &x)| x).collect();
                    let sub = self.minor_rec(rest_rows, &rest_cols);
                    if sub.is_zero() {
                        continue;
                    }
                    let term = e.mul(&sub);
                    acc = if p % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    /// All `size × size` minors.
    pub fn minors(&self, size: usize) -> Vec<BinForm> {
        let mut out = Vec::new();
        for rs in subsets(self.rows, size) {
            for cs in subsets(self.cols, size) {
                out.push(self.minor(&rs, &cs));
            }
        }
        out
    }

    /// Degrees of the gcds of the `i × i` minors for `i = 1..=rank`.
    pub fn minor_gcd_profile(&self) -> Vec<usize> {
        let mut profile = Vec::new();
        for size in 1..=self.rows.min(self.cols) {
            match gcd_all(&self.minors(size)) {
                Some(g) => profile.push(g.degree()),
                None => break,
            }
        }
        profile
    }

    /// gcd of the maximal (`cols × cols`) minors, `None` if they all vanish.
    pub fn maximal_minor_gcd(&self) -> Option<BinForm> {
        gcd_all(&self.minors(self.cols))
    }

    /// `Some(λ)` if the square matrix is `λ · id` for a single form `λ`.
    pub fn as_scalar(&self) -> Option<BinForm> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let k = self.row_degrees[0] - self.col_degrees[0];
        if (0..self.rows).any(|j| self.row_degrees[j] - self.col_degrees[j] != k) {
            return None;
        }
        let lambda = self.get(0, 0).clone();
        for j in 0..self.rows {
            for i in 0..self.cols {
                let e = self.get(j, i);
                let ok = if i == j { e == &lambda } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(lambda)
    }

    /// Coordinates: the coefficients of every slot with non-negative degree.
    pub fn coords(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        for j in 0..self.rows {
            for i in 0..self.cols {
                if slot_degree(self.row_degrees[j], self.col_degrees[i]).is_some() {
                    out.extend(self.get(j, i).coeffs().iter().cloned());
                }
            }
        }
        out
    }

    pub fn coord_len(row_degrees: &[i64], col_degrees: &[i64]) -> usize {
        row_degrees.iter().flat_map(|r| col_degrees.iter().map(move |c| slot_degree(*r, *c).map_or(0, |d| d + 1))).sum()
    }

    pub fn from_coords(row_degrees: Vec<i64>, col_degrees: Vec<i64>, v: &[Rat]) -> Self {
        let mut pos = 0;
        let cols = col_degrees.clone();
        Self::from_fn(row_degrees.clone(), col_degrees, |j, i| match slot_degree(row_degrees[j], cols[i]) {
            None => BinForm::zero(0),
            Some(d) => {
                let f = BinForm::new(d, v[pos..pos + d + 1].to_vec()).unwrap();
                pos += d + 1;
                f
            }
        })
        .unwrap()
    }
}

/// Increasing `size`-subsets of `0..n`.
pub fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Solution set `particular + span(basis)` of a form-linear equation.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolution {
    pub particular: FormMatrix,
    pub basis: Vec<FormMatrix>,
}

/// Solves `map(X) = 0` for `X : ⊕O(col) -> ⊕O(row)`, where `map` is affine in
/// the coefficients of `X`. Returns `None` when there is no solution.
pub fn solve_affine(
    row_degrees: &[i64],
    col_degrees: &[i64],
    map: impl Fn(&FormMatrix) -> FormMatrix,
) -> Option<AffineSolution> {
    let n = FormMatrix::coord_len(row_degrees, col_degrees);
    let zero = FormMatrix::zero(row_degrees.to_vec(), col_degrees.to_vec());
    let offset = map(&zero).coords();
    let mut columns = Vec::with_capacity(n);
    for u in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[u] = Rat::one();
        let x = FormMatrix::from_coords(row_degrees.to_vec(), col_degrees.to_vec(), &e);
        let img = map(&x).coords();
        columns.push(img.iter().zip(&offset).map(|(a, b)| a - b).collect::<Vec<_>>());
    }
    let m: QMatrix = (0..offset.len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let rhs: Vec<Rat> = offset.iter().map(|x| -x).collect();
    let x = linalg::solve(&m, &rhs, n)?;
    let particular = FormMatrix::from_coords(row_degrees.to_vec(), col_degrees.to_vec(), &x);
    let basis = linalg::nullspace(&m, n)
        .iter()
        .map(|v| FormMatrix::from_coords(row_degrees.to_vec(), col_degrees.to_vec(), v))
        .collect();
    Some(AffineSolution { particular, basis })
}

impl fmt::Display for FormMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for j in 0..self.rows {
            if j > 0 {
                write!(f, "; ")?;
            }
            for i in 0..self.cols {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(j, i))?;
            }
        }
        write!(f, "]")
    }
}
