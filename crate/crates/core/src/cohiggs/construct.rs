use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::pair::{gap_condition, random_pair, CoHiggsPair};
use super::stability::decide_stability;
use crate::error::{Error, Result};
use crate::exactpoly::{BinForm, FormMatrix};
use crate::rat::rat;
use crate::splitbundles::SplittingType;
use crate::verdict::Status;

/// Draw cap used when the explicit matrix fails to certify.
pub const DEFAULT_FALLBACK_CAP: usize = 1000;

fn check_preconditions(e: &SplittingType, k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::Precondition(format!("twist must be positive, got {k}")));
    }
    if !gap_condition(e, k) {
        return Err(Error::Precondition(format!("{e} violates the gap condition for k = {k}")));
    }
    Ok(())
}

/// Cyclic field with subdiagonal `x1^(a_{i+1} − a_i + k)` and corner
/// `(−1)^r x0 x1^(a_1 − a_r + k − 1)`; its characteristic polynomial is
/// `t^r + (−1)^(r−1) x0 x1^(rk−1)`.
pub fn explicit_stable_field(e: &SplittingType, k: i64) -> Result<CoHiggsPair> {
    check_preconditions(e, k)?;
    let a = e.summands();
    let r = a.len();
    let rows = e.twist(k).summands().to_vec();
    let cols = a.to_vec();
    let phi = if r == 1 {
        FormMatrix::scalar(a, &BinForm::x0().pow(k as usize))
    } else {
        let sign = if r.is_multiple_of(2) { rat(1) } else { rat(-1) };
        let corner = BinForm::monomial(1, (a[0] - a[r - 1] + k - 1) as usize, sign);
        FormMatrix::from_fn(rows, cols, |j, i| {
            if j == i + 1 {
                BinForm::x1().pow((a[j] - a[i] + k) as usize)
            } else if j == 0 && i == r - 1 {
                corner.clone()
            } else {
                BinForm::zero(0)
            }
        })?
    };
    CoHiggsPair::new(e.clone(), k, phi)
}

/// Random fields with coefficients in `[−5, 5]` until one is certified
/// stable; errors after `cap` draws.
pub fn random_stable_field(e: &SplittingType, k: i64, seed: u64, cap: usize) -> Result<CoHiggsPair> {
    check_preconditions(e, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..cap {
        let p = random_pair(&mut rng, e, k);
        if decide_stability(&p)?.status == Status::Stable {
            return Ok(p);
        }
    }
    Err(Error::FallbackExhausted(cap))
}

/// A certified stable pair on `E` with twist `k ≥ 1`, for `E` satisfying
/// the gap condition.
pub fn construct_stable_field(e: &SplittingType, k: i64, seed: u64) -> Result<CoHiggsPair> {
    let p = explicit_stable_field(e, k)?;
    if decide_stability(&p)?.status == Status::Stable {
        return Ok(p);
    }
    random_stable_field(e, k, seed, DEFAULT_FALLBACK_CAP)
}
