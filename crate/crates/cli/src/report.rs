//! JSON request and report documents. Every report re-parses to an equal
//! value.

use serde::{Deserialize, Serialize};

use loghiggs::coherent::AlphaThresholds;
use loghiggs::cohiggs::{ClosedFormQuery, ClosedFormValue, CoHiggsPair, InvariantLine, PencilWitness};
use loghiggs::exactpoly::{BiPoly, BinForm, FormMatrix};
use loghiggs::rat::{pq, Rat};
use loghiggs::splitbundles::SplittingType;
use loghiggs::triples::{AlphaWindow, HNChain, IntertwinerSolution};
use loghiggs::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructRequest {
    #[serde(rename = "E")]
    pub e: SplittingType,
    pub k: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilRequest {
    pub u: BinForm,
    pub v: BinForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormulaRequest {
    One(ClosedFormQuery),
    Many(Vec<ClosedFormQuery>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricRequest {
    /// `(r, d)` of the line bundle `O(r, d)` in the extension.
    pub sub: (i64, i64),
    /// `(r', d')` of the quotient line bundle.
    pub quot: (i64, i64),
    pub deg_z: i64,
    pub polarization: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwinerRequest {
    #[serde(rename = "A1")]
    pub a1: FormMatrix,
    #[serde(rename = "M")]
    pub m: FormMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub pair: CoHiggsPair,
    pub rank: usize,
    #[serde(with = "pq")]
    pub slope: Rat,
    pub gap_condition: bool,
    pub two_nilpotent: bool,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructReport {
    pub seed: u64,
    pub pair: CoHiggsPair,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub char_poly: BiPoly,
    pub char_poly_text: String,
    /// Invariant saturated lines of a rank-2 pair with non-scalar field.
    pub invariant_lines: Option<Vec<InvariantLine>>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaVerdict {
    #[serde(with = "pq")]
    pub alpha: Rat,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaScanReport {
    pub thresholds: AlphaThresholds,
    pub scan: Vec<AlphaVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    #[serde(with = "pq")]
    pub alpha: Rat,
    #[serde(with = "pq")]
    pub nu: Rat,
    pub window: AlphaWindow,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HnReport {
    pub chain: HNChain,
    pub verified: bool,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilReport {
    pub witness: Option<PencilWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaRow {
    pub query: ClosedFormQuery,
    pub value: ClosedFormValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwinerReport {
    pub solution: IntertwinerSolution,
    pub commutant: Vec<FormMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}
