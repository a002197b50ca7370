use serde::{Deserialize, Serialize};

use super::subtriples::{decide_nu_alpha, enumerate_subtriples, Subtriple};
use super::triple::{nu_alpha, Triple};
use crate::cohiggs::CoHiggsPair;
use crate::error::{Error, Result};
use crate::exactpoly::FormMatrix;
use crate::rat::Rat;
use crate::splitbundles::{induced_quotient_map, quotient, restrict_map, SplittingType, SubbundleWitness};

/// One graded piece of a Harder–Narasimhan filtration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HNStep {
    pub piece: Triple,
    #[serde(with = "crate::rat::pq")]
    pub nu: Rat,
    /// Ranks and degrees of the filtration level ending with this piece.
    pub cumulative_ranks: (usize, usize),
    pub cumulative_degrees: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HNChain {
    #[serde(with = "crate::rat::pq")]
    pub alpha: Rat,
    pub steps: Vec<HNStep>,
}

/// Restriction of the triple to a rational subtriple.
pub fn restrict_triple(t: &Triple, s: &Subtriple) -> Result<Triple> {
    let (w1, w2) = match (&s.s1.witness, &s.s2.witness) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Undecided("subtriple is not defined over the rationals".into())),
    };
    let k = t.twist();
    let restrict_pair = |p: &CoHiggsPair, w: &SubbundleWitness| -> Result<CoHiggsPair> {
        let inc = &w.inclusion;
        let psi = restrict_map(p.field(), inc, &inc.twisted(k))?
            .ok_or_else(|| Error::Precondition("subbundle is not invariant".into()))?;
        CoHiggsPair::new(SplittingType::new(inc.col_degrees().to_vec()), k, psi)
    };
    let g = restrict_map(t.map(), &w1.inclusion, &w2.inclusion)?
        .ok_or_else(|| Error::Precondition("f(S₁) is not contained in S₂".into()))?;
    Triple::new(restrict_pair(t.first(), w1)?, restrict_pair(t.second(), w2)?, g)
}

/// The quotient triple `T / S` with the induced fields and map.
pub fn quotient_triple(t: &Triple, s: &Subtriple) -> Result<Triple> {
    let (w1, w2) = match (&s.s1.witness, &s.s2.witness) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Undecided("subtriple is not defined over the rationals".into())),
    };
    let k = t.twist();
    let (q1, q2) = (quotient(w1)?, quotient(w2)?);
    let quotient_pair = |p: &CoHiggsPair, q: &FormMatrix, e: SplittingType| -> Result<CoHiggsPair> {
        let tau = induced_quotient_map(p.field(), q, &q.twisted(k))?;
        CoHiggsPair::new(e, k, tau)
    };
    let f = induced_quotient_map(t.map(), &q1.map, &q2.map)?;
    Triple::new(quotient_pair(t.first(), &q1.map, q1.splitting)?, quotient_pair(t.second(), &q2.map, q2.splitting)?, f)
}

/// The maximal subtriple of maximal `ν_α`, possibly the whole triple.
pub fn maximal_destabilizer(t: &Triple, alpha: &Rat) -> Result<Subtriple> {
    let en = enumerate_subtriples(t)?;
    let scored: Vec<(Rat, &Subtriple)> =
        en.candidates.iter().filter(|s| !s.is_zero()).map(|s| (s.nu(alpha).expect("nonzero"), s)).collect();
    let top = scored.iter().map(|(nu, _)| nu.clone()).max().ok_or(Error::Domain("zero triple".into()))?;
    if let Some(open) = &en.open_family {
        if open.nu_bound(alpha) >= top {
            return Err(Error::Undecided("lines with saturated images may reach the maximal slope".into()));
        }
    }
    let best_rank = scored.iter().filter(|(nu, _)| *nu == top).map(|(_, s)| s.total_rank()).max().unwrap();
    let winners: Vec<&Subtriple> =
        scored.iter().filter(|(nu, s)| *nu == top && s.total_rank() == best_rank).map(|(_, s)| *s).collect();
    if winners.len() != 1 {
        return Err(Error::MaximalElementNotUnique);
    }
    Ok(winners[0].clone())
}

/// Harder–Narasimhan filtration of a triple with respect to `ν_α`.
pub fn hn_filtration(t: &Triple, alpha: &Rat) -> Result<HNChain> {
    let mut steps = Vec::new();
    let mut cur = t.clone();
    let (mut ranks, mut degrees) = ((0, 0), (0, 0));
    while cur.ranks() != (0, 0) {
        let s = maximal_destabilizer(&cur, alpha)?;
        let piece = restrict_triple(&cur, &s)?;
        let nu = nu_alpha(&piece, alpha)?;
        ranks = (ranks.0 + s.s1.rank, ranks.1 + s.s2.rank);
        degrees = (degrees.0 + s.s1.degree, degrees.1 + s.s2.degree);
        let full = s.is_full(&cur);
        if !full {
            cur = quotient_triple(&cur, &s)?;
        }
        steps.push(HNStep { piece, nu, cumulative_ranks: ranks, cumulative_degrees: degrees });
        if full {
            break;
        }
    }
    Ok(HNChain { alpha: alpha.clone(), steps })
}

/// Re-checks a chain: strictly decreasing slopes, semistable pieces, and
/// conservation of ranks and degrees. Returns the first failure.
pub fn verify_hn(t: &Triple, chain: &HNChain) -> Result<Option<String>> {
    for w in chain.steps.windows(2) {
        if w[0].nu <= w[1].nu {
            return Ok(Some(format!("slopes {} and {} do not decrease", w[0].nu, w[1].nu)));
        }
    }
    for (i, step) in chain.steps.iter().enumerate() {
        let v = decide_nu_alpha(&step.piece, &chain.alpha)?;
        if v.status.is_semistable() != Some(true) {
            return Ok(Some(format!("graded piece {i} is {:?}", v.status)));
        }
    }
    let last = chain.steps.last().map(|s| (s.cumulative_ranks, s.cumulative_degrees));
    if last != Some((t.ranks(), t.degrees())) {
        return Ok(Some("ranks and degrees are not conserved".into()));
    }
    Ok(None)
}
