use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{rat, Rat};

/// `(2 − m) r² + 1`, for `m ∈ {0, 1, 2}` marked points and rank `r ≥ 1`.
pub fn moduli_dimension(r: i64, m: i64) -> Result<i64> {
    if r < 1 || !(0..=2).contains(&m) {
        return Err(Error::Domain(format!("moduli dimension needs r >= 1 and m in {{0,1,2}}, got r={r}, m={m}")));
    }
    Ok((2 - m) * r * r + 1)
}

/// `r − (r−1)(r−2) L² − (r−1)² R² − (2r−3)(r−1) L·R`.
pub fn chern_bound(r: i64, l2: i64, r2: i64, lr: i64) -> Result<i64> {
    if r < 1 {
        return Err(Error::Domain(format!("rank must be positive, got {r}")));
    }
    Ok(r - (r - 1) * (r - 2) * l2 - (r - 1) * (r - 1) * r2 - (2 * r - 3) * (r - 1) * lr)
}

/// Dimension of the space of nilpotent fields on a stable rank-2 reflexive
/// sheaf on ℙⁿ with `m` hyperplanes: `n − m + 1` when `c₁ + 2x = −3`, else 0.
pub fn nilpotent_space_dimension(n: i64, m: i64, c1: i64, x: i64) -> Result<i64> {
    if n < 2 || m < 1 || m > n {
        return Err(Error::Domain(format!("need n >= 2 and 1 <= m <= n, got n={n}, m={m}")));
    }
    Ok(if c1 + 2 * x == -3 { n - m + 1 } else { 0 })
}

/// True when no semistable meromorphic pair with nonzero field exists on a
/// curve of genus `g`: `g ≥ 2` and `2 − 2g + ℓ < 0`.
pub fn genus_nonexistence(g: i64, ell: i64) -> bool {
    g >= 2 && 2 - 2 * g + ell < 0
}

/// One closed-form rule with its inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum ClosedFormQuery {
    ModuliDimension { r: i64, m: i64 },
    ChernBound { r: i64, l2: i64, r2: i64, lr: i64 },
    NilpotentDimension { n: i64, m: i64, c1: i64, x: i64 },
    GenusNonexistence { g: i64, ell: i64 },
    QuadricC2 { r: i64, d: i64, r_prime: i64, d_prime: i64, deg_z: i64 },
}

/// Result of a closed-form rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClosedFormValue {
    Integer(i64),
    Flag(bool),
}

impl ClosedFormQuery {
    pub fn evaluate(&self) -> Result<ClosedFormValue> {
        use ClosedFormQuery::*;
        use ClosedFormValue::*;
        Ok(match *self {
            ModuliDimension { r, m } => Integer(moduli_dimension(r, m)?),
            ChernBound { r, l2, r2, lr } => Integer(chern_bound(r, l2, r2, lr)?),
            NilpotentDimension { n, m, c1, x } => Integer(nilpotent_space_dimension(n, m, c1, x)?),
            GenusNonexistence { g, ell } => Flag(genus_nonexistence(g, ell)),
            QuadricC2 { r, d, r_prime, d_prime, deg_z } => {
                if deg_z < 0 {
                    return Err(Error::Domain("deg Z must be non-negative".into()));
                }
                Integer(deg_z + r * d_prime + r_prime * d)
            }
        })
    }
}

/// Outcome of the slope screen for an extension on the quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScreenVerdict {
    Fails,
    StrictlySemistableCandidate,
    StableCandidate,
}

/// Chern classes and slope screen for `0 → O(r,d) → E → I_Z(r′,d′) → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricScreen {
    pub c1: (i64, i64),
    pub c2: i64,
    pub polarization: (i64, i64),
    #[serde(with = "crate::rat::pq")]
    pub sub_slope: Rat,
    #[serde(with = "crate::rat::pq")]
    pub quotient_slope: Rat,
    #[serde(with = "crate::rat::pq")]
    pub total_slope: Rat,
    pub verdict: ScreenVerdict,
}

/// Slope screen for the middle term of an extension of `I_Z(r′,d′)` by
/// `O(r,d)`; degrees are taken against the polarization `O(h₁,h₂)`.
pub fn quadric_extension_screen(
    sub: (i64, i64),
    quot: (i64, i64),
    deg_z: i64,
    polarization: (i64, i64),
) -> Result<QuadricScreen> {
    let (r, d) = sub;
    let (rp, dp) = quot;
    let (h1, h2) = polarization;
    if deg_z < 0 {
        return Err(Error::Domain("deg Z must be non-negative".into()));
    }
    if h1 <= 0 || h2 <= 0 {
        return Err(Error::Domain(format!("polarization must be ample, got ({h1},{h2})")));
    }
    let deg = |p: i64, q: i64| p * h2 + q * h1;
    let c1 = (r + rp, d + dp);
    let sub_slope = rat(deg(r, d));
    let quotient_slope = rat(deg(rp, dp));
    let total_slope = rat(deg(c1.0, c1.1)) / rat(2);
    let verdict = match sub_slope.cmp(&total_slope) {
        std::cmp::Ordering::Greater => ScreenVerdict::Fails,
        std::cmp::Ordering::Equal => ScreenVerdict::StrictlySemistableCandidate,
        std::cmp::Ordering::Less => ScreenVerdict::StableCandidate,
    };
    Ok(QuadricScreen { c1, c2: deg_z + r * dp + rp * d, polarization, sub_slope, quotient_slope, total_slope, verdict })
}
