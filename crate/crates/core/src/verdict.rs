//! Three-valued stability verdicts with machine-checkable certificates.

use serde::{Deserialize, Serialize};

use crate::exactpoly::{BiPoly, Place};
use crate::rat::Rat;
use crate::splitbundles::SubbundleWitness;
use crate::triples::Subtriple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Stable,
    StrictlySemistable,
    NotSemistable,
    Unknown,
}

impl Status {
    /// `Some(true)` for the two semistable outcomes, `None` for `Unknown`.
    pub fn is_semistable(self) -> Option<bool> {
        match self {
            Status::Stable | Status::StrictlySemistable => Some(true),
            Status::NotSemistable => Some(false),
            Status::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum Certificate {
    /// Invariant saturated subbundle of slope above the total slope.
    Destabilizer { witness: SubbundleWitness },
    /// Invariant proper subbundle of maximal slope, equal to the total slope.
    MaximalInvariant { witness: SubbundleWitness },
    /// A Galois-conjugate pair of invariant lines over `ℚ(√c)`.
    ConjugateLines {
        degree: i64,
        #[serde(with = "crate::rat::pq")]
        radicand: Rat,
    },
    /// The characteristic polynomial is Eisenstein at `place`.
    Eisenstein { place: Place, char_poly: BiPoly },
    /// Every invariant subbundle was enumerated.
    Exhaustive { transcript: Vec<String> },
    /// The decision only depends on the bundle.
    Bundle { reason: String },
    /// Search log for an undecided case.
    Transcript { transcript: Vec<String> },
    /// A pair `(F, G)` attaining the maximal `μ_α`.
    CoherentPair {
        f: SubbundleWitness,
        g: SubbundleWitness,
        #[serde(with = "crate::rat::pq")]
        mu_alpha: Rat,
    },
    /// A subtriple attaining the maximal `ν_α`.
    Subtriple {
        subtriple: Box<Subtriple>,
        #[serde(with = "crate::rat::pq")]
        nu: Rat,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    pub fn new(status: Status, certificate: Certificate) -> Self {
        Verdict { status, certificate: Some(certificate) }
    }

    pub fn unknown(transcript: Vec<String>) -> Self {
        Self::new(Status::Unknown, Certificate::Transcript { transcript })
    }
}
