use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{BinForm, FormMatrix};
use crate::rat::rat;
use crate::splitbundles::{quotient, SplittingType, SubbundleWitness};

/// A split bundle `E` on ℙ¹ with a field `Φ : E -> E(k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PairRepr", into = "PairRepr")]
pub struct CoHiggsPair {
    e: SplittingType,
    k: i64,
    phi: FormMatrix,
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    #[serde(rename = "E")]
    e: SplittingType,
    k: i64,
    phi: FormMatrix,
}

impl TryFrom<PairRepr> for CoHiggsPair {
    type Error = Error;
    fn try_from(r: PairRepr) -> Result<Self> {
        CoHiggsPair::new(r.e, r.k, r.phi)
    }
}

impl From<CoHiggsPair> for PairRepr {
    fn from(p: CoHiggsPair) -> Self {
        PairRepr { e: p.e, k: p.k, phi: p.phi }
    }
}

impl CoHiggsPair {
    pub fn new(e: SplittingType, k: i64, phi: FormMatrix) -> Result<Self> {
        if !validate_pair(&e, k, &phi) {
            let detail = phi.ledger_violation().unwrap_or_else(|| {
                format!("field ledger {:?}<-{:?} is not {e} -> {e}({k})", phi.row_degrees(), phi.col_degrees())
            });
            return Err(Error::NotTwistedEndomorphism(detail));
        }
        Ok(CoHiggsPair { e, k, phi })
    }

    /// The pair with `Φ = 0`.
    pub fn zero(e: SplittingType, k: i64) -> Self {
        let phi = FormMatrix::zero(e.twist(k).summands().to_vec(), e.summands().to_vec());
        CoHiggsPair { e, k, phi }
    }

    pub fn bundle(&self) -> &SplittingType {
        &self.e
    }

    pub fn twist(&self) -> i64 {
        self.k
    }

    pub fn field(&self) -> &FormMatrix {
        &self.phi
    }

    pub fn rank(&self) -> usize {
        self.e.rank()
    }

    /// `λ · ι` for a form `λ` of degree `k`.
    pub fn scalar_field(&self, lambda: &BinForm) -> FormMatrix {
        FormMatrix::scalar(self.e.summands(), lambda)
    }

    /// Whether the saturated subbundle `s` satisfies `Φ(S) ⊆ S(k)`.
    pub fn is_invariant(&self, s: &SubbundleWitness) -> Result<bool> {
        if s.rank() == 0 || s.rank() == self.rank() {
            return Ok(true);
        }
        let q = quotient(s)?;
        Ok(q.map.twisted(self.k).mul(&self.phi)?.mul(&s.inclusion)?.is_zero())
    }

    /// Same field on `E(t)`.
    pub fn twisted(&self, t: i64) -> Self {
        CoHiggsPair { e: self.e.twist(t), k: self.k, phi: self.phi.twisted(t) }
    }

    /// `Φ − λ·ι`.
    pub fn shifted_by(&self, lambda: &BinForm) -> Result<Self> {
        let phi = self.phi.sub(&self.scalar_field(lambda))?;
        CoHiggsPair::new(self.e.clone(), self.k, phi)
    }
}

/// Whether `phi` is a valid field `E -> E(k)`: shape, degree lists and ledger.
pub fn validate_pair(e: &SplittingType, k: i64, phi: &FormMatrix) -> bool {
    phi.col_degrees() == e.summands() && phi.row_degrees() == e.twist(k).summands() && phi.ledger_violation().is_none()
}

/// `Φ ≠ 0` and `Φ(k) ∘ Φ = 0`.
pub fn is_2nilpotent(p: &CoHiggsPair) -> bool {
    !p.phi.is_zero() && p.phi.twisted(p.k).mul(&p.phi).expect("shapes agree").is_zero()
}

/// `a_i − a_{i+1} ≤ k` for every consecutive pair.
pub fn gap_condition(e: &SplittingType, k: i64) -> bool {
    first_gap(e, k).is_none()
}

/// The first index `i` with `a_i − a_{i+1} > k`.
pub fn first_gap(e: &SplittingType, k: i64) -> Option<usize> {
    e.summands().windows(2).position(|w| w[0] - w[1] > k)
}

/// Components `φ_i : E -> E(k_i)` of a field with values in a split tangent
/// bundle `⊕ O(k_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiField {
    pub components: Vec<FormMatrix>,
}

impl MultiField {
    pub fn new(components: Vec<FormMatrix>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::Precondition("multi-field needs a component".into()));
        };
        for c in &components {
            if c.col_degrees() != first.col_degrees() {
                return Err(Error::MismatchedSources);
            }
            twist_of(c)?;
        }
        Ok(MultiField { components })
    }

    /// `φ_i ∘ φ_j = 0` for all ordered pairs, and some `φ_i ≠ 0`.
    pub fn is_2nilpotent(&self) -> bool {
        let nonzero = self.components.iter().any(|c| !c.is_zero());
        nonzero && self.components.iter().all(|a| self.components.iter().all(|b| compose(a, b).is_zero()))
    }
}

fn twist_of(m: &FormMatrix) -> Result<i64> {
    if !m.is_square() {
        return Err(Error::NotTwistedEndomorphism("component is not square".into()));
    }
    let k = m.row_degrees().first().zip(m.col_degrees().first()).map_or(0, |(r, c)| r - c);
    if m.row_degrees().iter().zip(m.col_degrees()).any(|(r, c)| r - c != k) {
        return Err(Error::NotTwistedEndomorphism("rows are not a uniform twist of columns".into()));
    }
    Ok(k)
}

/// `a ∘ b` with `a` twisted by the twist of `b`.
fn compose(a: &FormMatrix, b: &FormMatrix) -> FormMatrix {
    let kb = twist_of(b).expect("validated");
    a.twisted(kb).mul(b).expect("shared source")
}

/// `φ_i ∘ φ_j = φ_j ∘ φ_i` for all `i < j`.
pub fn is_integrable(mf: &MultiField) -> Result<bool> {
    let first = mf.components.first().ok_or(Error::MismatchedSources)?;
    if mf.components.iter().any(|c| c.col_degrees() != first.col_degrees()) {
        return Err(Error::MismatchedSources);
    }
    for (i, a) in mf.components.iter().enumerate() {
        for b in &mf.components[i + 1..] {
            if compose(a, b) != compose(b, a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A random form of the given degree with integer coefficients in `[-5, 5]`.
pub fn random_form<R: Rng>(rng: &mut R, degree: usize) -> BinForm {
    let coeffs = (0..=degree).map(|_| rat(rng.gen_range(-5..=5))).collect();
    BinForm::new(degree, coeffs).expect("length matches")
}

/// A random matrix with the given ledger, coefficients in `[-5, 5]`.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: Vec<i64>, cols: Vec<i64>) -> FormMatrix {
    let r2 = rows.clone();
    let c2 = cols.clone();
    FormMatrix::from_fn(rows, cols, |j, i| match usize::try_from(r2[j] - c2[i]) {
        Ok(d) => random_form(rng, d),
        Err(_) => BinForm::zero(0),
    })
    .expect("random entries respect the ledger")
}

/// A random valid field on `E` with twist `k`.
pub fn random_pair<R: Rng>(rng: &mut R, e: &SplittingType, k: i64) -> CoHiggsPair {
    let phi = random_matrix(rng, e.twist(k).summands().to_vec(), e.summands().to_vec());
    CoHiggsPair::new(e.clone(), k, phi).expect("random field is valid")
}
