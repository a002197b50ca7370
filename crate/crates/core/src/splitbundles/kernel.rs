//! Kernels as subbundles via minimal bases of section spaces, and the
//! saturation and quotient constructions built on them.

use super::{SplittingType, SubbundleWitness};
use crate::error::{Error, Result};
use crate::exactpoly::linalg::EchelonBasis;
use crate::exactpoly::{solve_affine, BinForm, FormMatrix};
use crate::rat::rat;

/// The kernel of `a` as a subbundle of its source, with a minimal basis
/// (columns ordered by non-increasing degree).
pub fn kernel_bundle(a: &FormMatrix) -> Result<SubbundleWitness> {
    let src = a.col_degrees().to_vec();
    let s = a.cols() - a.rank();
    if s == 0 {
        return Ok(SubbundleWitness {
            inclusion: FormMatrix::zero(src, Vec::new()),
            saturated: true,
            degree: 0,
            slope: rat(0),
        });
    }
    let top = *src.iter().max().unwrap();
    let floor = *src.iter().min().unwrap() - bound(a) - 1;
    let mut gens: Vec<(i64, FormMatrix)> = Vec::new();
    let mut e = top;
    while gens.len() < s {
        if e < floor {
            return Err(Error::Domain("kernel basis search did not terminate".into()));
        }
        let level =
            solve_affine(&src, &[e], |v| a.mul(v).expect("shapes agree")).expect("homogeneous system is solvable");
        let dim = FormMatrix::coord_len(&src, &[e]);
        let mut span = EchelonBasis::new(dim);
        for (eg, g) in &gens {
            let d = (eg - e) as usize;
            for p in 0..=d {
                let mono = BinForm::monomial(p, d - p, rat(1));
                let shifted = FormMatrix::from_fn(src.clone(), vec![e], |j, _| g.get(j, 0).mul(&mono))?;
                span.insert(&shifted.coords());
            }
        }
        for v in level.basis {
            if gens.len() == s {
                break;
            }
            if span.insert(&v.coords()) {
                gens.push((e, v));
            }
        }
        e -= 1;
    }
    let mut inc = gens[0].1.clone();
    for (_, g) in &gens[1..] {
        inc = inc.hstack(g)?;
    }
    SubbundleWitness::from_inclusion(inc)
}

fn bound(a: &FormMatrix) -> i64 {
    (0..a.rows()).map(|j| (0..a.cols()).map(|i| a.expected_degree(j, i).max(0)).max().unwrap_or(0)).sum::<i64>()
        + (0..a.cols()).map(|i| (0..a.rows()).map(|j| a.expected_degree(j, i).max(0)).max().unwrap_or(0)).sum::<i64>()
}

/// A torsion-free quotient `E -> Q` of split bundles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    /// Surjective bundle map `E -> Q`, rows in non-increasing degree order.
    pub map: FormMatrix,
    pub splitting: SplittingType,
}

/// The quotient of the host by the saturation of `s`.
pub fn quotient(s: &SubbundleWitness) -> Result<Quotient> {
    let host = s.inclusion.row_degrees().to_vec();
    if s.rank() == 0 {
        let map = FormMatrix::identity(&host);
        return Ok(Quotient { splitting: SplittingType::new(host), map });
    }
    let n = kernel_bundle(&s.inclusion.transpose())?;
    let mut q = n.inclusion.transpose();
    let mut order: Vec<usize> = (0..q.rows()).collect();
    order.sort_by_key(|&j| std::cmp::Reverse(q.row_degrees()[j]));
    q = q.select_rows(&order);
    let splitting = SplittingType::new(q.row_degrees().to_vec());
    Ok(Quotient { map: q, splitting })
}

/// Saturation of a subsheaf as the kernel of its torsion-free quotient.
pub fn saturate(s: &SubbundleWitness) -> Result<SubbundleWitness> {
    if s.rank() == 0 || s.saturated {
        return Ok(s.clone());
    }
    kernel_bundle(&quotient(s)?.map)
}

/// `Ψ` with `target_inc ∘ Ψ = phi ∘ source_inc`, if it exists.
pub fn restrict_map(phi: &FormMatrix, source_inc: &FormMatrix, target_inc: &FormMatrix) -> Result<Option<FormMatrix>> {
    let rhs = phi.mul(source_inc)?;
    let sol = solve_affine(target_inc.col_degrees(), source_inc.col_degrees(), |x| {
        target_inc.mul(x).expect("shapes agree").sub(&rhs).expect("shapes agree")
    });
    Ok(sol.map(|s| s.particular))
}

/// `τ` with `τ ∘ q_source = q_target ∘ phi`, when `phi` maps the kernel of
/// `q_source` into the kernel of `q_target`.
pub fn induced_quotient_map(phi: &FormMatrix, q_source: &FormMatrix, q_target: &FormMatrix) -> Result<FormMatrix> {
    let rhs = q_target.mul(phi)?;
    let sol = solve_affine(q_target.row_degrees(), q_source.row_degrees(), |x| {
        x.mul(q_source).expect("shapes agree").sub(&rhs).expect("shapes agree")
    })
    .ok_or_else(|| Error::Precondition("map does not descend to the quotients".into()))?;
    Ok(sol.particular)
}
