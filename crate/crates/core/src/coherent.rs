//! Coherent-system pairs `F ⊆ G ⊆ E` with `Φ(F) ⊆ G(k)`, the `μ_α` slopes,
//! α-thresholds and `μ_α`-stability of rank-2 pairs.

use serde::{Deserialize, Serialize};

use crate::cohiggs::{decide_stability, invariant_line_subbundles_rank2, CoHiggsPair};
use crate::error::{Error, Result};
use crate::rat::{rat, Rat};
use crate::splitbundles::{quotient, SplittingType, SubbundleWitness};
use crate::verdict::{Certificate, Status, Verdict};

/// A pair `(F, G)` of saturated subbundles of the host of a co-Higgs pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsPair {
    pub f: SubbundleWitness,
    pub g: SubbundleWitness,
}

impl CsPair {
    /// Checks `F ⊆ G` and `Φ(F) ⊆ G(k)`.
    pub fn new(host: &CoHiggsPair, f: SubbundleWitness, g: SubbundleWitness) -> Result<Self> {
        let rows = host.bundle().summands();
        if f.inclusion.row_degrees() != rows || g.inclusion.row_degrees() != rows {
            return Err(Error::Precondition("subbundles live in a different host".into()));
        }
        if f.rank() == 0 {
            return Err(Error::Precondition("F must be nonzero".into()));
        }
        if g.rank() < host.rank() {
            let q = quotient(&g)?.map;
            if !q.mul(&f.inclusion)?.is_zero() {
                return Err(Error::Precondition("F is not contained in G".into()));
            }
            if !q.twisted(host.twist()).mul(host.field())?.mul(&f.inclusion)?.is_zero() {
                return Err(Error::Precondition("Φ(F) is not contained in G(k)".into()));
            }
        }
        Ok(CsPair { f, g })
    }

    pub fn mu_alpha(&self, alpha: &Rat) -> Rat {
        mu_alpha(&self.f, &self.g, alpha)
    }

    pub fn mu_alpha_prime(&self, alpha: &Rat) -> Rat {
        mu_alpha_prime(&self.f, &self.g, alpha)
    }
}

fn ranks(f: &SubbundleWitness, g: &SubbundleWitness) -> (Rat, Rat) {
    (rat(f.rank() as i64), rat(g.rank() as i64))
}

/// `μ(F) + α·rank F / rank G`.
pub fn mu_alpha(f: &SubbundleWitness, g: &SubbundleWitness, alpha: &Rat) -> Rat {
    let (rf, rg) = ranks(f, g);
    if g.rank() == 0 {
        return f.slope.clone();
    }
    &f.slope + alpha * rf / rg
}

/// `μ(F) + α·rank F / (rank F + rank G)`.
pub fn mu_alpha_prime(f: &SubbundleWitness, g: &SubbundleWitness, alpha: &Rat) -> Rat {
    let (rf, rg) = ranks(f, g);
    if f.rank() + g.rank() == 0 {
        return f.slope.clone();
    }
    &f.slope + alpha * &rf / (&rf + rg)
}

/// α-thresholds of a bundle. `beta` and `gamma` are absent for balanced
/// bundles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaThresholds {
    #[serde(with = "crate::rat::pq_opt")]
    pub beta: Option<Rat>,
    #[serde(with = "crate::rat::pq_opt")]
    pub gamma: Option<Rat>,
    #[serde(with = "crate::rat::pq")]
    pub gamma0: Rat,
}

/// Mean of the `s` largest summands.
fn top_mean(e: &SplittingType, s: usize) -> Rat {
    let sum: i64 = e.summands()[..s].iter().sum();
    rat(sum) / rat(s as i64)
}

/// `β = max r(b_s − μ)/(r − s)` over `b_s > μ`, `γ = r(a₁ − μ)` and
/// `γ₀ = max (s+1)(b_s − μ)`, with `b_s` the mean of the `s` largest summands.
pub fn alpha_thresholds(e: &SplittingType) -> AlphaThresholds {
    let r = e.rank();
    let mu = e.slope();
    let rr = rat(r as i64);
    let gamma0 = (1..r).map(|s| rat(s as i64 + 1) * (top_mean(e, s) - &mu)).max().unwrap_or_else(|| rat(0));
    if e.is_balanced() {
        return AlphaThresholds { beta: None, gamma: None, gamma0 };
    }
    let beta = (1..r)
        .filter_map(|s| {
            let b = top_mean(e, s);
            (b > mu).then(|| &rr * (b - &mu) / rat((r - s) as i64))
        })
        .max();
    let gamma = Some(&rr * (rat(e.summands()[0]) - &mu));
    AlphaThresholds { beta, gamma, gamma0 }
}

/// `μ_α`-stability of a co-Higgs pair. Exact for rank 2; higher ranks are
/// decided only when the pair itself is not semistable.
pub fn decide_mu_alpha(p: &CoHiggsPair, alpha: &Rat) -> Result<Verdict> {
    if *alpha < rat(0) {
        return Err(Error::Domain("α must be non-negative".into()));
    }
    let e = p.bundle();
    let base = decide_stability(p)?;
    if base.status == Status::NotSemistable {
        if let Some(Certificate::Destabilizer { witness }) = &base.certificate {
            let value = mu_alpha(witness, witness, alpha);
            return Ok(Verdict::new(
                Status::NotSemistable,
                Certificate::CoherentPair { f: witness.clone(), g: witness.clone(), mu_alpha: value },
            ));
        }
        return Ok(base);
    }
    if p.rank() == 1 {
        return Ok(Verdict::new(Status::Stable, Certificate::Bundle { reason: "rank one".into() }));
    }
    if p.rank() != 2 {
        return Ok(Verdict::unknown(vec![format!(
            "rank {} pair is semistable; μ_α search is implemented for rank 2",
            p.rank()
        )]));
    }
    let full = SubbundleWitness::full(e);
    let target = e.slope() + alpha;
    let top = SubbundleWitness::summands(e, &[0]);
    // (F, E) with F a line of maximal degree
    let mut best_value = mu_alpha(&top, &full, alpha);
    let mut best = Certificate::CoherentPair { f: top.clone(), g: full.clone(), mu_alpha: best_value.clone() };
    let mut transcript = vec![format!("(O({}), E): μ_α = {}", e.summands()[0], best_value)];
    // (F, F) with F an invariant line
    let lines = match invariant_line_subbundles_rank2(p) {
        Ok(lines) => lines.into_iter().map(|l| (l.degree, l.witness)).collect(),
        Err(Error::ScalarField) => vec![(e.summands()[0], Some(top.clone()))],
        Err(err) => return Err(err),
    };
    for (degree, witness) in lines {
        let value = rat(degree) + alpha;
        transcript.push(format!("invariant line of degree {degree}: μ_α = {value}"));
        if value > best_value {
            best = match witness {
                Some(w) => Certificate::CoherentPair { f: w.clone(), g: w, mu_alpha: value.clone() },
                None => Certificate::Exhaustive { transcript: transcript.clone() },
            };
            best_value = value;
        }
    }
    let status = match best_value.cmp(&target) {
        std::cmp::Ordering::Greater => Status::NotSemistable,
        std::cmp::Ordering::Equal => Status::StrictlySemistable,
        std::cmp::Ordering::Less => Status::Stable,
    };
    Ok(match status {
        Status::Stable => Verdict::new(status, Certificate::Exhaustive { transcript }),
        _ => Verdict::new(status, best),
    })
}

/// The α grid `j/10` for `j = 1..=20`.
pub fn default_alpha_grid() -> Vec<Rat> {
    (1..=20).map(|j| Rat::new(j.into(), 10.into())).collect()
}
