use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::pair::{first_gap, CoHiggsPair};
use crate::error::{Error, Result};
use crate::exactpoly::upoly::{self, homogeneous_gcd_degree};
use crate::exactpoly::{char_poly, eisenstein_scan, square_over_c_test, BiPoly, BinForm, QuadraticField, Rationals};
use crate::rat::{rat, ratio, rational_sqrt, Rat};
use crate::splitbundles::{kernel_bundle, SubbundleWitness};
use crate::verdict::{Certificate, Status, Verdict};

/// Eigenvalue attached to an invariant line of a rank-2 field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Eigenvalue {
    Rational {
        lambda: BinForm,
    },
    /// `λ = (trace + sign·√radicand·root) / 2`.
    Conjugate {
        trace: BinForm,
        #[serde(with = "crate::rat::pq")]
        radicand: Rat,
        root: BinForm,
        sign: i8,
    },
}

/// A saturated `Φ`-invariant line subbundle. `witness` is absent when the
/// line is only defined over a quadratic extension of ℚ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantLine {
    pub degree: i64,
    pub witness: Option<SubbundleWitness>,
    pub eigenvalue: Eigenvalue,
}

fn line_for(p: &CoHiggsPair, lambda: &BinForm) -> Result<InvariantLine> {
    let k = kernel_bundle(p.shifted_by(lambda)?.field())?;
    debug_assert_eq!(k.rank(), 1);
    Ok(InvariantLine {
        degree: k.degree,
        witness: Some(k),
        eigenvalue: Eigenvalue::Rational { lambda: lambda.clone() },
    })
}

/// All invariant saturated line subbundles of a rank-2 pair with non-scalar
/// field, via the discriminant of the characteristic polynomial.
pub fn invariant_line_subbundles_rank2(p: &CoHiggsPair) -> Result<Vec<InvariantLine>> {
    if p.rank() != 2 {
        return Err(Error::Precondition("rank-2 pair required".into()));
    }
    let phi = p.field();
    if phi.as_scalar().is_some() || (phi.is_zero() && p.twist() >= 0) {
        return Err(Error::ScalarField);
    }
    let (a, b, c, d) = (phi.get(0, 0), phi.get(0, 1), phi.get(1, 0), phi.get(1, 1));
    let half = ratio(1, 2);
    let trace = a.add(d);
    let diff = a.sub(d);
    let disc = diff.mul(&diff).add(&b.mul(c).scale(&rat(4)));
    let mut lines = Vec::new();
    if disc.is_zero() {
        lines.push(line_for(p, &trace.scale(&half))?);
        return Ok(lines);
    }
    let sq = square_over_c_test(&disc)?;
    let Some((g, cst)) = sq.root else {
        return Ok(lines);
    };
    if let Some(s0) = rational_sqrt(&cst) {
        let h = g.scale(&s0);
        for lambda in [trace.add(&h).scale(&half), trace.sub(&h).scale(&half)] {
            lines.push(line_for(p, &lambda)?);
        }
    } else {
        // kernel vector (b, λ − a) with λ − a = ((d − a) + sign·√c·g) / 2
        let field = QuadraticField::new(cst.clone());
        let k = p.twist();
        let a2 = p.bundle().summands()[1];
        let bq: Vec<(Rat, Rat)> = b.dehomogenize().into_iter().map(|x| (x, Rat::zero())).collect();
        for sign in [1i8, -1] {
            let s = rat(sign as i64);
            let w: Vec<(Rat, Rat)> =
                (0..=k as usize).map(|i| (-diff.coeff(i) * &half, g.coeff(i) * &half * &s)).collect();
            let w = upoly::trim(&field, w);
            let gd = homogeneous_gcd_degree(&field, &bq, b.degree(), &w, k as usize)
                .expect("b is nonzero in the irrational case");
            lines.push(InvariantLine {
                degree: a2 - k + gd as i64,
                witness: None,
                eigenvalue: Eigenvalue::Conjugate {
                    trace: trace.clone(),
                    radicand: cst.clone(),
                    root: g.clone(),
                    sign,
                },
            });
        }
    }
    lines.sort_by_key(|l| std::cmp::Reverse(l.degree));
    Ok(lines)
}

/// `Φ(S) ⊆ S(k)`, `S` saturated and proper, and `μ(S) > μ(E)`.
pub fn verify_destabilizer(p: &CoHiggsPair, w: &SubbundleWitness) -> bool {
    w.saturated
        && w.rank() > 0
        && w.rank() < p.rank()
        && w.inclusion.row_degrees() == p.bundle().summands()
        && p.is_invariant(w).unwrap_or(false)
        && w.slope > p.bundle().slope()
}

/// Slope (semi)stability of a co-Higgs pair.
pub fn decide_stability(p: &CoHiggsPair) -> Result<Verdict> {
    let e = p.bundle();
    let k = p.twist();
    let r = e.rank();
    if r <= 1 {
        return Ok(Verdict::new(Status::Stable, Certificate::Bundle { reason: "rank one".into() }));
    }
    if k < 0 || !e.is_balanced() && k == 0 {
        return Ok(bundle_verdict(p, "non-positive twist: only the bundle matters"));
    }
    if let Some(i) = first_gap(e, k) {
        let idx: Vec<usize> = (0..=i).collect();
        return Ok(Verdict::new(
            Status::NotSemistable,
            Certificate::Destabilizer { witness: SubbundleWitness::summands(e, &idx) },
        ));
    }
    if k == 0 {
        return Ok(Verdict::new(
            Status::StrictlySemistable,
            Certificate::Bundle { reason: "balanced bundle with a constant field has an eigenline".into() },
        ));
    }
    if p.field().as_scalar().is_some() || p.field().is_zero() {
        return Ok(bundle_verdict(p, "scalar field: every subbundle is invariant"));
    }
    if r == 2 {
        return decide_rank2(p);
    }
    decide_higher_rank(p)
}

/// Verdict for a pair where every relevant subbundle is invariant, or the
/// field vanishes on the top block.
fn bundle_verdict(p: &CoHiggsPair, reason: &str) -> Verdict {
    let e = p.bundle();
    let top = SubbundleWitness::summands(e, &e.top_block());
    if e.is_balanced() {
        let first = SubbundleWitness::summands(e, &[0]);
        let _ = reason;
        Verdict::new(Status::StrictlySemistable, Certificate::MaximalInvariant { witness: first })
    } else {
        Verdict::new(Status::NotSemistable, Certificate::Destabilizer { witness: top })
    }
}

fn decide_rank2(p: &CoHiggsPair) -> Result<Verdict> {
    let mu = p.bundle().slope();
    let lines = invariant_line_subbundles_rank2(p)?;
    let Some(best) = lines.first() else {
        return Ok(Verdict::new(
            Status::Stable,
            Certificate::Exhaustive { transcript: vec!["discriminant is not a square: no invariant line".into()] },
        ));
    };
    let deg = rat(best.degree);
    let cert = |w: Option<&SubbundleWitness>, destab: bool| match (w, destab) {
        (Some(w), true) => Certificate::Destabilizer { witness: w.clone() },
        (Some(w), false) => Certificate::MaximalInvariant { witness: w.clone() },
        (None, _) => match &best.eigenvalue {
            Eigenvalue::Conjugate { radicand, .. } => {
                Certificate::ConjugateLines { degree: best.degree, radicand: radicand.clone() }
            }
            Eigenvalue::Rational { .. } => unreachable!("rational lines carry witnesses"),
        },
    };
    Ok(if deg > mu {
        Verdict::new(Status::NotSemistable, cert(best.witness.as_ref(), true))
    } else if deg == mu {
        Verdict::new(Status::StrictlySemistable, cert(best.witness.as_ref(), false))
    } else {
        let transcript = lines.iter().map(|l| format!("invariant line of degree {}", l.degree)).collect();
        Verdict::new(Status::Stable, Certificate::Exhaustive { transcript })
    })
}

fn decide_higher_rank(p: &CoHiggsPair) -> Result<Verdict> {
    let chi = char_poly(p.field(), p.twist())?;
    if let Some(place) = eisenstein_scan(&chi)? {
        return Ok(Verdict::new(Status::Stable, Certificate::Eisenstein { place, char_poly: chi }));
    }
    let mut transcript = vec![format!("characteristic polynomial {chi}"), "no Eisenstein place in the scan".into()];
    let (roots, rest, complete) = rational_linear_factors(&chi);
    transcript.push(format!(
        "rational eigenforms: [{}]",
        roots.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    ));
    if !complete {
        transcript.push("rational root search inconclusive".into());
    }
    let distinct = roots.iter().enumerate().all(|(i, x)| roots[..i].iter().all(|y| y != x));
    let rest_irreducible = complete
        && match rest.tdegree() {
            0 => true,
            2 => {
                let (b, c) = (rest.coeff(1), rest.coeff(2));
                let disc = b.mul(b).sub(&c.scale(&rat(4)));
                !disc.is_zero() && !square_over_c_test(&disc)?.is_square
            }
            n if n >= 3 => eisenstein_scan(&rest)?.is_some(),
            _ => false,
        };
    let mut factors: Vec<BiPoly> = roots.iter().map(|l| BiPoly::linear(l, p.twist())).collect();
    let exhaustive = distinct && rest_irreducible;
    if exhaustive && rest.tdegree() > 0 {
        factors.push(rest.clone());
    }
    let mu = p.bundle().slope();
    let mut best: Option<SubbundleWitness> = None;
    let n = factors.len();
    for mask in 1u32..(1u32 << n) {
        let prod = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .fold(BiPoly::monomial_power(0, p.twist()), |acc, i| acc.mul(&factors[i]));
        let ker = kernel_bundle(&prod.at_field(p.field()))?;
        if ker.rank() == 0 || ker.rank() == p.rank() {
            continue;
        }
        transcript.push(format!("invariant subbundle of rank {} and degree {}", ker.rank(), ker.degree));
        if best.as_ref().is_none_or(|b| ker.slope > b.slope) {
            best = Some(ker);
        }
    }
    if let Some(b) = &best {
        if b.slope > mu {
            return Ok(Verdict::new(Status::NotSemistable, Certificate::Destabilizer { witness: b.clone() }));
        }
    }
    if !exhaustive {
        transcript.push("invariant subbundles not exhausted".into());
        return Ok(Verdict::unknown(transcript));
    }
    Ok(match best {
        Some(b) if b.slope == mu => {
            Verdict::new(Status::StrictlySemistable, Certificate::MaximalInvariant { witness: b })
        }
        _ => Verdict::new(Status::Stable, Certificate::Exhaustive { transcript }),
    })
}

/// Splits off rational factors `t − λ`, `λ` a form of degree `k`. Returns the
/// roots with multiplicity, the remaining factor, and whether the search was
/// complete.
pub fn rational_linear_factors(chi: &BiPoly) -> (Vec<BinForm>, BiPoly, bool) {
    let mut cur = chi.clone();
    let mut roots = Vec::new();
    let mut complete = true;
    while cur.tdegree() > 0 {
        match find_rational_root(&cur) {
            RootSearch::Found(l) => {
                cur = cur.divide_linear(&l).expect("verified root");
                roots.push(l);
            }
            RootSearch::None => break,
            RootSearch::Inconclusive => {
                complete = false;
                break;
            }
        }
    }
    (roots, cur, complete)
}

enum RootSearch {
    Found(BinForm),
    None,
    Inconclusive,
}

const COMBINATION_CAP: usize = 50_000;

fn find_rational_root(p: &BiPoly) -> RootSearch {
    let k = p.grading();
    if k < 0 {
        return RootSearch::Inconclusive;
    }
    let k = k as usize;
    let points: Vec<Rat> = (0..=k as i64).map(rat).collect();
    let mut choices: Vec<Vec<Rat>> = Vec::new();
    for z in &points {
        let ascending: Vec<Rat> = p.coeffs().iter().rev().map(|c| c.eval_z(z)).collect();
        match rational_roots(&ascending) {
            Some(r) if r.is_empty() => return RootSearch::None,
            Some(r) => choices.push(r),
            None => return RootSearch::Inconclusive,
        }
    }
    let total: usize = choices.iter().map(Vec::len).product();
    if total > COMBINATION_CAP {
        return RootSearch::Inconclusive;
    }
    let mut idx = vec![0usize; choices.len()];
    loop {
        let ys: Vec<Rat> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        let poly = upoly::interpolate(&Rationals, &points, &ys);
        let lambda = BinForm::homogenize(&poly, k);
        if p.eval_form(&lambda).is_zero() {
            return RootSearch::Found(lambda);
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return RootSearch::None;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

const DIVISOR_CAP: u64 = 1_000_000_000_000;

/// Distinct rational roots of a univariate polynomial (lowest degree
/// first); `None` when the coefficients are too large to factor.
pub fn rational_roots(p: &[Rat]) -> Option<Vec<Rat>> {
    let p = upoly::trim(&Rationals, p.to_vec());
    if p.len() <= 1 {
        return Some(Vec::new());
    }
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rat::zero());
        while ints[0].is_zero() {
            ints.remove(0);
        }
    }
    if ints.len() == 1 {
        return Some(roots);
    }
    let a0 = ints[0].abs().to_u64().filter(|&x| x <= DIVISOR_CAP)?;
    let an = ints.last().unwrap().abs().to_u64().filter(|&x| x <= DIVISOR_CAP)?;
    let ascending: Vec<Rat> = ints.iter().map(|c| Rat::from_integer(c.clone())).collect();
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i64, -1] {
                let cand = Rat::new(BigInt::from(num) * sign, BigInt::from(den));
                if !roots.contains(&cand) && upoly::eval(&Rationals, &ascending, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
