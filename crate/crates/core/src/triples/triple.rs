use serde::{Deserialize, Serialize};

use crate::cohiggs::CoHiggsPair;
use crate::error::{Error, Result};
use crate::exactpoly::{BinForm, FormMatrix};
use crate::rat::{rat, Rat};
use crate::splitbundles::SplittingType;

/// Two co-Higgs pairs with a common twist and a map `f : E₁ -> E₂` with
/// `Φ₂ ∘ f = f(k) ∘ Φ₁`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TripleRepr", into = "TripleRepr")]
pub struct Triple {
    p1: CoHiggsPair,
    p2: CoHiggsPair,
    f: FormMatrix,
}

#[derive(Serialize, Deserialize)]
struct TripleRepr {
    k: i64,
    #[serde(rename = "E1")]
    e1: SplittingType,
    phi1: FormMatrix,
    #[serde(rename = "E2")]
    e2: SplittingType,
    phi2: FormMatrix,
    f: FormMatrix,
}

impl TryFrom<TripleRepr> for Triple {
    type Error = Error;
    fn try_from(r: TripleRepr) -> Result<Self> {
        let p1 = CoHiggsPair::new(r.e1, r.k, r.phi1)?;
        let p2 = CoHiggsPair::new(r.e2, r.k, r.phi2)?;
        Triple::new(p1, p2, r.f)
    }
}

impl From<Triple> for TripleRepr {
    fn from(t: Triple) -> Self {
        let k = t.twist();
        let (e1, phi1) = (t.p1.bundle().clone(), t.p1.field().clone());
        let (e2, phi2) = (t.p2.bundle().clone(), t.p2.field().clone());
        TripleRepr { k, e1, phi1, e2, phi2, f: t.f }
    }
}

fn check_shapes(p1: &CoHiggsPair, p2: &CoHiggsPair, f: &FormMatrix) -> Result<()> {
    if p1.twist() != p2.twist() {
        return Err(Error::TwistMismatch);
    }
    if f.col_degrees() != p1.bundle().summands() || f.row_degrees() != p2.bundle().summands() {
        return Err(Error::DegreeMismatch(format!(
            "f has ledger {:?}<-{:?}, expected {}<-{}",
            f.row_degrees(),
            f.col_degrees(),
            p2.bundle(),
            p1.bundle()
        )));
    }
    if let Some(msg) = f.ledger_violation() {
        return Err(Error::Ledger(msg));
    }
    Ok(())
}

fn compatible(p1: &CoHiggsPair, p2: &CoHiggsPair, f: &FormMatrix) -> Result<bool> {
    let lhs = p2.field().mul(f)?;
    let rhs = f.twisted(p1.twist()).mul(p1.field())?;
    Ok(lhs == rhs)
}

/// Whether `Φ₂ ∘ f = f(k) ∘ Φ₁`. Errors when the twists or ledgers disagree.
pub fn validate_triple(p1: &CoHiggsPair, p2: &CoHiggsPair, f: &FormMatrix) -> Result<bool> {
    check_shapes(p1, p2, f)?;
    compatible(p1, p2, f)
}

impl Triple {
    pub fn new(p1: CoHiggsPair, p2: CoHiggsPair, f: FormMatrix) -> Result<Self> {
        if !validate_triple(&p1, &p2, &f)? {
            return Err(Error::Precondition("f does not intertwine the fields".into()));
        }
        Ok(Triple { p1, p2, f })
    }

    /// The triple with both fields zero.
    pub fn with_zero_fields(e1: SplittingType, e2: SplittingType, k: i64, f: FormMatrix) -> Result<Self> {
        Self::new(CoHiggsPair::zero(e1, k), CoHiggsPair::zero(e2, k), f)
    }

    pub fn first(&self) -> &CoHiggsPair {
        &self.p1
    }

    pub fn second(&self) -> &CoHiggsPair {
        &self.p2
    }

    pub fn map(&self) -> &FormMatrix {
        &self.f
    }

    pub fn twist(&self) -> i64 {
        self.p1.twist()
    }

    pub fn ranks(&self) -> (usize, usize) {
        (self.p1.rank(), self.p2.rank())
    }

    pub fn degrees(&self) -> (i64, i64) {
        (self.p1.bundle().degree(), self.p2.bundle().degree())
    }
}

/// `(d₁ + d₂ + α r₁) / (r₁ + r₂)` for ranks and degrees of a (sub)triple.
pub fn nu_alpha_of(ranks: (usize, usize), degrees: (i64, i64), alpha: &Rat) -> Result<Rat> {
    let total = ranks.0 + ranks.1;
    if total == 0 {
        return Err(Error::Domain("ν_α is undefined for the zero triple".into()));
    }
    Ok((rat(degrees.0 + degrees.1) + alpha * rat(ranks.0 as i64)) / rat(total as i64))
}

pub fn nu_alpha(t: &Triple, alpha: &Rat) -> Result<Rat> {
    nu_alpha_of(t.ranks(), t.degrees(), alpha)
}

/// The interval `[α_m, α_M]` outside which no triple of these ranks and
/// degrees is semistable; `alpha_max` is absent for equal ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaWindow {
    #[serde(with = "crate::rat::pq")]
    pub alpha_min: Rat,
    #[serde(with = "crate::rat::pq_opt")]
    pub alpha_max: Option<Rat>,
}

impl AlphaWindow {
    pub fn contains(&self, alpha: &Rat) -> bool {
        *alpha >= self.alpha_min && self.alpha_max.as_ref().is_none_or(|m| alpha <= m)
    }
}

pub fn alpha_window_of(e1: &SplittingType, e2: &SplittingType) -> AlphaWindow {
    let alpha_min = e2.slope() - e1.slope();
    let (r1, r2) = (e1.rank() as i64, e2.rank() as i64);
    let alpha_max = (r1 != r2).then(|| (rat(1) + rat(r1 + r2) / rat((r1 - r2).abs())) * &alpha_min);
    AlphaWindow { alpha_min, alpha_max }
}

pub fn alpha_window(t: &Triple) -> AlphaWindow {
    alpha_window_of(t.p1.bundle(), t.p2.bundle())
}

fn reversed(n: usize) -> Vec<usize> {
    (0..n).rev().collect()
}

/// Dual of a bundle map `E -> F` as a map `F^∨ -> E^∨`, with summands in
/// non-increasing order.
fn dual_map(m: &FormMatrix) -> FormMatrix {
    let t = m.transpose();
    t.select_rows(&reversed(t.rows())).select_columns(&reversed(t.cols()))
}

/// `(E^∨, Φ^T)` as a pair with the same twist.
pub fn dual_pair(p: &CoHiggsPair) -> CoHiggsPair {
    let phi = dual_map(p.field()).twisted(p.twist());
    CoHiggsPair::new(p.bundle().dual(), p.twist(), phi).expect("transpose of a valid field is valid")
}

/// `((E₂^∨, Φ₂^T), (E₁^∨, Φ₁^T), f^T)`.
pub fn dual_triple(t: &Triple) -> Triple {
    Triple::new(dual_pair(&t.p2), dual_pair(&t.p1), dual_map(&t.f)).expect("transpose preserves compatibility")
}

/// `((E₁, Φ₁ − c), (E₂, Φ₂ − c), f)`; requires `k = 0`.
pub fn shift_family(t: &Triple, c: &Rat) -> Result<Triple> {
    if t.twist() != 0 {
        return Err(Error::IdentityTwistMismatch);
    }
    let lambda = BinForm::constant(c.clone());
    Triple::new(t.p1.shifted_by(&lambda)?, t.p2.shifted_by(&lambda)?, t.f.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn c(x: i64) -> BinForm {
        BinForm::constant(rat(x))
    }

    fn line_triple() -> Triple {
        let f = FormMatrix::new(vec![1], vec![0], vec![BinForm::x0()]).unwrap();
        Triple::with_zero_fields(SplittingType::new(vec![0]), SplittingType::new(vec![1]), 1, f).unwrap()
    }

    #[test]
    fn compatibility() {
        let t = line_triple();
        assert_eq!(t.ranks(), (1, 1));
        let e = SplittingType::new(vec![0, 0]);
        let jordan = CoHiggsPair::new(
            e.clone(),
            0,
            FormMatrix::new(vec![0, 0], vec![0, 0], vec![c(0), c(1), c(0), c(0)]).unwrap(),
        )
        .unwrap();
        let other = CoHiggsPair::new(
            e.clone(),
            0,
            FormMatrix::new(vec![0, 0], vec![0, 0], vec![c(1), c(2), c(3), c(4)]).unwrap(),
        )
        .unwrap();
        let f = FormMatrix::new(vec![0, 0], vec![0, 0], vec![c(1), c(2), c(3), c(5)]).unwrap();
        assert_eq!(validate_triple(&jordan, &other, &f), Ok(false));
        let s1 = CoHiggsPair::new(e.clone(), 0, FormMatrix::scalar(&[0, 0], &c(3))).unwrap();
        assert_eq!(validate_triple(&s1, &s1, &f), Ok(true));
        let twisted = CoHiggsPair::zero(e, 1);
        assert_eq!(validate_triple(&s1, &twisted, &f), Err(Error::TwistMismatch));
    }

    #[test]
    fn slopes_and_windows() {
        let t = line_triple();
        assert_eq!(nu_alpha_of((1, 1), (0, 0), &rat(2)).unwrap(), rat(1));
        assert_eq!(nu_alpha(&t, &rat(1)).unwrap(), rat(1));
        let w = alpha_window_of(&SplittingType::new(vec![0]), &SplittingType::new(vec![1, 1]));
        assert_eq!((w.alpha_min, w.alpha_max), (rat(1), Some(rat(4))));
        assert_eq!(alpha_window_of(&SplittingType::new(vec![0, 0]), &SplittingType::new(vec![1, 0])).alpha_max, None);
        assert_eq!(alpha_window(&t).alpha_min, rat(1));
        assert!(!alpha_window(&t).contains(&ratio(1, 2)));
    }

    #[test]
    fn duality() {
        let t = line_triple();
        let d = dual_triple(&t);
        assert_eq!(d.first().bundle().summands(), &[-1]);
        assert_eq!(d.second().bundle().summands(), &[0]);
        assert_eq!(d.map().get(0, 0), &BinForm::x0());
        assert_eq!(dual_triple(&d), t);
    }

    #[test]
    fn shifts() {
        let e = SplittingType::new(vec![0, 0]);
        let s = CoHiggsPair::new(e, 0, FormMatrix::scalar(&[0, 0], &c(2))).unwrap();
        let t = Triple::new(s.clone(), s, FormMatrix::identity(&[0, 0])).unwrap();
        let u = shift_family(&t, &rat(2)).unwrap();
        assert!(u.first().field().is_zero());
        assert_eq!(shift_family(&line_triple(), &rat(1)), Err(Error::IdentityTwistMismatch));
    }
}
