use serde::{Deserialize, Serialize};

use super::triple::{nu_alpha, nu_alpha_of, Triple};
use crate::cohiggs::{invariant_line_subbundles_rank2, CoHiggsPair, Eigenvalue};
use crate::error::{Error, Result};
use crate::exactpoly::FormMatrix;
use crate::rat::{rat, Rat};
use crate::splitbundles::{kernel_bundle, quotient, SplittingType, SubbundleWitness};
use crate::verdict::{Certificate, Status, Verdict};

/// Largest factor rank handled by the subtriple enumeration.
pub const MAX_FACTOR_RANK: usize = 2;

/// An invariant saturated subsheaf of one factor: either rational, with an
/// inclusion, or one of a conjugate pair of eigenlines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Piece {
    pub rank: usize,
    pub degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SubbundleWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalue: Option<Eigenvalue>,
}

impl Piece {
    pub fn rational(w: SubbundleWitness) -> Self {
        Piece { rank: w.rank(), degree: w.degree, witness: Some(w), eigenvalue: None }
    }

    fn conjugate(degree: i64, eigenvalue: Eigenvalue) -> Self {
        Piece { rank: 1, degree, witness: None, eigenvalue: Some(eigenvalue) }
    }

    pub fn is_rational(&self) -> bool {
        self.witness.is_some()
    }
}

/// A pair of invariant subsheaves `S₁ ⊆ E₁`, `S₂ ⊆ E₂` with `f(S₁) ⊆ S₂`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subtriple {
    pub s1: Piece,
    pub s2: Piece,
}

impl Subtriple {
    pub fn ranks(&self) -> (usize, usize) {
        (self.s1.rank, self.s2.rank)
    }

    pub fn degrees(&self) -> (i64, i64) {
        (self.s1.degree, self.s2.degree)
    }

    pub fn total_rank(&self) -> usize {
        self.s1.rank + self.s2.rank
    }

    pub fn is_zero(&self) -> bool {
        self.total_rank() == 0
    }

    pub fn is_full(&self, t: &Triple) -> bool {
        self.ranks() == t.ranks()
    }

    pub fn nu(&self, alpha: &Rat) -> Option<Rat> {
        nu_alpha_of(self.ranks(), self.degrees(), alpha).ok()
    }
}

/// Pairs `(S₁, M)` with `S₁` an arbitrary line and `M` the saturation of
/// its image, when both fields are scalar and `f` is injective in rank
/// `(2, 2)`. Only an upper bound for `deg S₁ + deg M` is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenFamily {
    pub degree_bound: i64,
}

impl OpenFamily {
    pub fn nu_bound(&self, alpha: &Rat) -> Rat {
        (rat(self.degree_bound) + alpha) / rat(2)
    }
}

/// Candidate maximizers of `ν_α`, including the zero and full subtriples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubtripleEnumeration {
    pub candidates: Vec<Subtriple>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub open_family: Option<OpenFamily>,
}

pub(crate) fn is_scalar_field(p: &CoHiggsPair) -> bool {
    p.field().is_zero() || p.field().as_scalar().is_some()
}

fn intrinsic_pieces(p: &CoHiggsPair) -> Result<Vec<Piece>> {
    let e = p.bundle();
    let r = e.rank();
    if r > MAX_FACTOR_RANK {
        return Err(Error::DeskScale(format!("factor of rank {r} exceeds {MAX_FACTOR_RANK}")));
    }
    let mut out = vec![Piece::rational(SubbundleWitness::zero_in(e))];
    if r == 0 {
        return Ok(out);
    }
    out.push(Piece::rational(SubbundleWitness::full(e)));
    if r == 2 {
        if is_scalar_field(p) {
            out.push(Piece::rational(SubbundleWitness::summands(e, &[0])));
            out.push(Piece::rational(SubbundleWitness::summands(e, &[1])));
        } else {
            for line in invariant_line_subbundles_rank2(p)? {
                out.push(match line.witness {
                    Some(w) => Piece::rational(w),
                    None => Piece::conjugate(line.degree, line.eigenvalue),
                });
            }
        }
    }
    Ok(out)
}

fn quotient_map(w: &SubbundleWitness) -> Result<FormMatrix> {
    Ok(quotient(w)?.map)
}

fn same_subbundle(a: &Piece, b: &Piece) -> Result<bool> {
    if a.rank != b.rank || a.degree != b.degree {
        return Ok(false);
    }
    match (&a.witness, &b.witness) {
        (Some(x), Some(y)) => Ok(quotient_map(x)?.mul(&y.inclusion)?.is_zero()),
        (None, None) => Ok(a.eigenvalue == b.eigenvalue),
        _ => Ok(false),
    }
}

fn push_new(list: &mut Vec<Piece>, p: Piece) -> Result<bool> {
    for q in list.iter() {
        if same_subbundle(q, &p)? {
            return Ok(false);
        }
    }
    list.push(p);
    Ok(true)
}

/// Saturation of the image of `g`, or `None` for `g = 0`.
pub fn saturated_image(g: &FormMatrix) -> Result<Option<SubbundleWitness>> {
    if g.is_zero() {
        return Ok(None);
    }
    let host = SplittingType::new(g.row_degrees().to_vec());
    let ann = kernel_bundle(&g.transpose())?;
    if ann.rank() == 0 {
        return Ok(Some(SubbundleWitness::full(&host)));
    }
    kernel_bundle(&ann.inclusion.transpose()).map(Some)
}

/// `f(S₁) ⊆ S₂`.
fn maps_into(t: &Triple, s1: &Piece, s2: &Piece) -> Result<bool> {
    let f = t.map();
    if s1.rank == 0 || s2.rank == t.ranks().1 {
        return Ok(true);
    }
    match (&s1.witness, &s2.witness) {
        (Some(a), Some(b)) => Ok(quotient_map(b)?.mul(f)?.mul(&a.inclusion)?.is_zero()),
        // an irrational line lies in a rational subsheaf only if that is everything
        (None, Some(b)) => Ok(quotient_map(b)?.mul(f)?.is_zero()),
        (Some(a), None) => Ok(f.mul(&a.inclusion)?.is_zero()),
        // a nonzero image of an eigenline is the eigenline with the same eigenvalue
        (None, None) => Ok(f.is_zero() || s1.eigenvalue == s2.eigenvalue),
    }
}

/// All candidate subtriples of a triple whose factors have rank at most 2.
pub fn enumerate_subtriples(t: &Triple) -> Result<SubtripleEnumeration> {
    let (p1, p2, f) = (t.first(), t.second(), t.map());
    let mut left = intrinsic_pieces(p1)?;
    let mut right = intrinsic_pieces(p2)?;
    loop {
        let mut changed = false;
        for s in left.clone().iter().filter_map(|p| p.witness.as_ref()) {
            if let Some(m) = saturated_image(&f.mul(&s.inclusion)?)? {
                changed |= push_new(&mut right, Piece::rational(m))?;
            }
        }
        for m in right.clone().iter().filter_map(|p| p.witness.as_ref()) {
            let pre = kernel_bundle(&quotient_map(m)?.mul(f)?)?;
            changed |= push_new(&mut left, Piece::rational(pre))?;
        }
        if !changed {
            break;
        }
    }
    let mut candidates = Vec::new();
    for s1 in &left {
        for s2 in &right {
            if maps_into(t, s1, s2)? {
                candidates.push(Subtriple { s1: s1.clone(), s2: s2.clone() });
            }
        }
    }
    let open_family = (t.ranks() == (2, 2) && is_scalar_field(p1) && is_scalar_field(p2) && f.rank() == 2)
        .then(|| OpenFamily { degree_bound: p1.bundle().summands()[0] + p2.bundle().summands()[0] });
    Ok(SubtripleEnumeration { candidates, open_family })
}

/// `ν_α`-stability of a triple with factors of rank at most 2.
pub fn decide_nu_alpha(t: &Triple, alpha: &Rat) -> Result<Verdict> {
    let nu_t = nu_alpha(t, alpha)?;
    let en = enumerate_subtriples(t)?;
    let mut best: Option<(Rat, &Subtriple)> = None;
    let mut transcript = Vec::new();
    for s in en.candidates.iter().filter(|s| !s.is_zero() && !s.is_full(t)) {
        let nu = s.nu(alpha).expect("nonzero subtriple");
        transcript.push(format!("ranks {:?}, degrees {:?}: ν = {nu}", s.ranks(), s.degrees()));
        if best.as_ref().is_none_or(|(b, _)| nu > *b) {
            best = Some((nu, s));
        }
    }
    let cert = |nu: &Rat, s: &Subtriple| Certificate::Subtriple { subtriple: Box::new(s.clone()), nu: nu.clone() };
    if let Some((nu, s)) = &best {
        if *nu > nu_t {
            return Ok(Verdict::new(Status::NotSemistable, cert(nu, s)));
        }
    }
    if let Some(open) = &en.open_family {
        let bound = open.nu_bound(alpha);
        let tie = best.as_ref().is_some_and(|(nu, _)| *nu == nu_t);
        if bound > nu_t || (bound == nu_t && !tie) {
            transcript.push(format!("lines with saturated images reach at most ν = {bound}"));
            return Ok(Verdict::unknown(transcript));
        }
    }
    Ok(match best {
        Some((nu, s)) if nu == nu_t => Verdict::new(Status::StrictlySemistable, cert(&nu, s)),
        _ => Verdict::new(Status::Stable, Certificate::Exhaustive { transcript }),
    })
}
