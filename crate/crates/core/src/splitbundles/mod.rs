//! Split bundles `⊕ O(a_i)` on ℙ¹ (and ℙⁿ for section counts), maps between
//! them, subbundles, saturation and quotients.

mod kernel;

pub use kernel::{induced_quotient_map, kernel_bundle, quotient, restrict_map, saturate, Quotient};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{BinForm, FormMatrix};
use crate::rat::{rat, Rat};

/// Non-increasing list of summand degrees. Rank 0 is allowed only as the
/// zero bundle used for trivial triple factors and quotients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SplitRepr", into = "SplitRepr")]
pub struct SplittingType {
    n: usize,
    summands: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct SplitRepr {
    #[serde(default = "one")]
    n: usize,
    summands: Vec<i64>,
}

fn one() -> usize {
    1
}

impl TryFrom<SplitRepr> for SplittingType {
    type Error = Error;
    fn try_from(r: SplitRepr) -> Result<Self> {
        SplittingType::on_pn(r.n, r.summands)
    }
}

impl From<SplittingType> for SplitRepr {
    fn from(s: SplittingType) -> Self {
        SplitRepr { n: s.n, summands: s.summands }
    }
}

impl SplittingType {
    /// A split bundle on ℙ¹; the summands are sorted into non-increasing order.
    pub fn new(summands: Vec<i64>) -> Self {
        Self::on_pn(1, summands).expect("ambient dimension 1 is valid")
    }

    pub fn on_pn(n: usize, mut summands: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::SplittingType("ambient dimension must be positive".into()));
        }
        summands.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SplittingType { n, summands })
    }

    pub fn zero() -> Self {
        SplittingType { n: 1, summands: Vec::new() }
    }

    pub fn balanced(r: usize, a: i64) -> Self {
        Self::new(vec![a; r])
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn summands(&self) -> &[i64] {
        &self.summands
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn degree(&self) -> i64 {
        self.summands.iter().sum()
    }

    /// `deg / rank`; the zero bundle reports 0.
    pub fn slope(&self) -> Rat {
        if self.summands.is_empty() {
            return rat(0);
        }
        Rat::new(self.degree().into(), (self.rank() as i64).into())
    }

    pub fn max_summand(&self) -> Option<i64> {
        self.summands.first().copied()
    }

    pub fn is_balanced(&self) -> bool {
        self.summands.windows(2).all(|w| w[0] == w[1])
    }

    pub fn twist(&self, t: i64) -> Self {
        SplittingType { n: self.n, summands: self.summands.iter().map(|a| a + t).collect() }
    }

    pub fn dual(&self) -> Self {
        Self::on_pn(self.n, self.summands.iter().map(|a| -a).collect()).unwrap()
    }

    /// `End(E) = E ⊗ E^∨`.
    pub fn endomorphisms(&self) -> Self {
        let mut out = Vec::new();
        for a in &self.summands {
            for b in &self.summands {
                out.push(a - b);
            }
        }
        Self::on_pn(self.n, out).unwrap()
    }

    /// Inclusion of the coordinate summands with the given indices.
    pub fn summand_inclusion(&self, idx: &[usize]) -> FormMatrix {
        let cols = idx.iter().map(|&i| self.summands[i]).collect();
        FormMatrix::from_fn(
            self.summands.clone(),
            cols,
            |j, c| {
                if j == idx[c] {
                    BinForm::one()
                } else {
                    BinForm::zero(0)
                }
            },
        )
        .expect("coordinate inclusion respects the ledger")
    }

    /// The summands of maximal degree, `⊕_{a_i = a_1} O(a_i)`.
    pub fn top_block(&self) -> Vec<usize> {
        let a1 = self.summands[0];
        (0..self.rank()).filter(|&i| self.summands[i] == a1).collect()
    }
}

impl std::fmt::Display for SplittingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.summands.iter().map(|a| format!("O({a})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `max(0, C(a + n, n))` for `h⁰(O(a))` on ℙⁿ.
pub fn h0_line(a: i64, n: usize) -> u128 {
    if a < 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 1..=n as u128 {
        acc = acc * (a as u128 + i) / i;
    }
    acc
}

/// `h⁰(E(d))`.
pub fn h0_twist(e: &SplittingType, d: i64) -> u128 {
    e.summands.iter().map(|a| h0_line(a + d, e.n)).sum()
}

/// Expected degrees `b_j − a_i` of the entries of a map `E -> F`
/// (rows indexed by `F`); negative entries are forced zero.
pub fn hom_degree_ledger(e: &SplittingType, f: &SplittingType) -> Vec<Vec<i64>> {
    f.summands.iter().map(|b| e.summands.iter().map(|a| b - a).collect()).collect()
}

/// A map of split bundles with its matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MapRepr", into = "MapRepr")]
pub struct BundleMap {
    source: SplittingType,
    target: SplittingType,
    matrix: FormMatrix,
}

#[derive(Serialize, Deserialize)]
struct MapRepr {
    source: SplittingType,
    target: SplittingType,
    #[serde(flatten)]
    matrix: FormMatrix,
}

impl TryFrom<MapRepr> for BundleMap {
    type Error = Error;
    fn try_from(r: MapRepr) -> Result<Self> {
        BundleMap::new(r.source, r.target, r.matrix)
    }
}

impl From<BundleMap> for MapRepr {
    fn from(m: BundleMap) -> Self {
        MapRepr { source: m.source, target: m.target, matrix: m.matrix }
    }
}

impl BundleMap {
    pub fn new(source: SplittingType, target: SplittingType, matrix: FormMatrix) -> Result<Self> {
        if matrix.col_degrees() != source.summands() || matrix.row_degrees() != target.summands() {
            return Err(Error::Ledger(format!(
                "matrix ledger {:?}<-{:?} does not match {target} <- {source}",
                matrix.row_degrees(),
                matrix.col_degrees()
            )));
        }
        Ok(BundleMap { source, target, matrix })
    }

    pub fn from_matrix(matrix: FormMatrix) -> Self {
        let source = SplittingType { n: 1, summands: matrix.col_degrees().to_vec() };
        let target = SplittingType { n: 1, summands: matrix.row_degrees().to_vec() };
        BundleMap { source, target, matrix }
    }

    pub fn source(&self) -> &SplittingType {
        &self.source
    }

    pub fn target(&self) -> &SplittingType {
        &self.target
    }

    pub fn matrix(&self) -> &FormMatrix {
        &self.matrix
    }
}

/// A subsheaf given by an inclusion matrix of full column rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubbundleWitness {
    pub inclusion: FormMatrix,
    pub saturated: bool,
    pub degree: i64,
    #[serde(with = "crate::rat::pq")]
    pub slope: Rat,
}

impl SubbundleWitness {
    /// Wraps an inclusion; the degree is that of its source.
    pub fn from_inclusion(inclusion: FormMatrix) -> Result<Self> {
        let s = inclusion.cols();
        if s > 0 && inclusion.rank() != s {
            return Err(Error::Precondition("inclusion must have full column rank".into()));
        }
        let saturated = s == 0 || inclusion.maximal_minor_gcd().is_some_and(|g| g.degree() == 0);
        let degree: i64 = inclusion.col_degrees().iter().sum();
        let slope = if s == 0 { rat(0) } else { Rat::new(degree.into(), (s as i64).into()) };
        Ok(SubbundleWitness { inclusion, saturated, degree, slope })
    }

    pub fn zero_in(host: &SplittingType) -> Self {
        let inclusion = FormMatrix::zero(host.summands().to_vec(), Vec::new());
        SubbundleWitness { inclusion, saturated: true, degree: 0, slope: rat(0) }
    }

    pub fn full(host: &SplittingType) -> Self {
        Self::from_inclusion(FormMatrix::identity(host.summands())).unwrap()
    }

    pub fn summands(host: &SplittingType, idx: &[usize]) -> Self {
        Self::from_inclusion(host.summand_inclusion(idx)).unwrap()
    }

    pub fn rank(&self) -> usize {
        self.inclusion.cols()
    }

    pub fn splitting_type(&self) -> SplittingType {
        SplittingType::new(self.inclusion.col_degrees().to_vec())
    }

    pub fn host(&self) -> SplittingType {
        SplittingType::new(self.inclusion.row_degrees().to_vec())
    }
}

/// Saturation of the image of a map from a line bundle, by removing the gcd of
/// its entries.
pub fn saturate_line_image(s: &BundleMap) -> Result<SubbundleWitness> {
    let m = s.matrix();
    if m.cols() != 1 {
        return Err(Error::Precondition("source must be a line bundle".into()));
    }
    let col = m.column(0);
    let g = crate::exactpoly::gcd_all(&col).ok_or(Error::NoImage)?;
    let src = m.col_degrees()[0] + g.degree() as i64;
    let lead = col.iter().find_map(|c| c.leading_coeff()).expect("nonzero column").clone();
    let g = g.scale(&lead);
    let rows = m.row_degrees().to_vec();
    let inc = FormMatrix::from_fn(rows.clone(), vec![src], |j, _| {
        if col[j].is_zero() {
            BinForm::zero(usize::try_from(rows[j] - src).unwrap_or(0))
        } else {
            col[j].div_exact(&g).expect("gcd divides every entry")
        }
    })?;
    SubbundleWitness::from_inclusion(inc)
}

/// Splitting type of `E/S` for a saturated `S ⊆ E`.
pub fn quotient_splitting_type(e: &SplittingType, s: &SubbundleWitness) -> Result<SplittingType> {
    if s.inclusion.row_degrees() != e.summands() {
        return Err(Error::DegreeMismatch("subbundle lives in a different bundle".into()));
    }
    if !s.saturated {
        return Err(Error::NotSaturated);
    }
    let q = quotient(s)?;
    if q.splitting.degree() + s.degree != e.degree() || q.splitting.rank() + s.rank() != e.rank() {
        return Err(Error::Domain("quotient does not conserve rank and degree".into()));
    }
    Ok(q.splitting)
}
