//! Deterministic generators of splitting types, pairs and triples.

use loghiggs::cohiggs::{random_form, random_matrix, random_pair, CoHiggsPair};
use loghiggs::exactpoly::{BinForm, FormMatrix};
use loghiggs::rat::rat;
use loghiggs::splitbundles::SplittingType;
use loghiggs::triples::Triple;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All non-increasing sequences of length `r` with entries in `[-b, b]`.
pub fn splitting_types(r: usize, b: i64) -> Vec<SplittingType> {
    fn go(r: usize, hi: i64, b: i64, cur: &mut Vec<i64>, out: &mut Vec<SplittingType>) {
        if cur.len() == r {
            out.push(SplittingType::new(cur.clone()));
            return;
        }
        for a in (-b..=hi).rev() {
            cur.push(a);
            go(r, a, b, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, b, b, &mut Vec::new(), &mut out);
    out
}

fn field(e: &SplittingType, k: i64, f: impl FnMut(usize, usize) -> BinForm) -> FormMatrix {
    FormMatrix::from_fn(e.twist(k).summands().to_vec(), e.summands().to_vec(), f).unwrap()
}

fn slot(e: &SplittingType, k: i64, j: usize, i: usize) -> Option<usize> {
    usize::try_from(e.summands()[j] + k - e.summands()[i]).ok()
}

/// A rank-2 pair of one of several shapes: generic, triangular, scalar, or
/// `h·I + s·A` with a constant `A` (balanced bundles).
pub fn structured_rank2<R: Rng>(rng: &mut R, e: &SplittingType, k: i64, shape: usize) -> CoHiggsPair {
    let entry = |rng: &mut R, j: usize, i: usize| match slot(e, k, j, i) {
        Some(d) => random_form(rng, d),
        None => BinForm::zero(0),
    };
    let phi = match shape % 5 {
        0 => return random_pair(rng, e, k),
        1 => field(e, k, |j, i| if j == 1 && i == 0 { BinForm::zero(0) } else { entry(rng, j, i) }),
        2 => field(e, k, |j, i| if j == 0 && i == 1 { BinForm::zero(0) } else { entry(rng, j, i) }),
        3 if k >= 0 => FormMatrix::scalar(e.summands(), &random_form(rng, k as usize)),
        4 if k >= 0 && e.is_balanced() => {
            let h = random_form(rng, k as usize);
            let s = random_form(rng, k as usize);
            let a: Vec<i64> = (0..4).map(|_| rng.gen_range(-3..=3)).collect();
            field(e, k, |j, i| {
                let base = s.scale(&rat(a[2 * j + i]));
                if i == j {
                    base.add(&h)
                } else {
                    base
                }
            })
        }
        _ => return random_pair(rng, e, k),
    };
    CoHiggsPair::new(e.clone(), k, phi).unwrap()
}

/// Triples of small rank whose fields are compatible with `f` by
/// construction. `variant` selects the shape.
pub fn small_triple<R: Rng>(rng: &mut R, e1: &SplittingType, e2: &SplittingType, k: i64, variant: usize) -> Triple {
    let f_random = |rng: &mut R| random_matrix(rng, e2.summands().to_vec(), e1.summands().to_vec());
    match variant % 4 {
        // zero fields, random map
        0 => Triple::with_zero_fields(e1.clone(), e2.clone(), k, f_random(rng)).unwrap(),
        // equal scalar fields, random map
        1 if k >= 0 => {
            let lam = random_form(rng, k as usize);
            let p1 = CoHiggsPair::new(e1.clone(), k, FormMatrix::scalar(e1.summands(), &lam)).unwrap();
            let p2 = CoHiggsPair::new(e2.clone(), k, FormMatrix::scalar(e2.summands(), &lam)).unwrap();
            Triple::new(p1, p2, f_random(rng)).unwrap()
        }
        // arbitrary fields, zero map
        2 => {
            let p1 = random_pair(rng, e1, k);
            let p2 = random_pair(rng, e2, k);
            Triple::new(p1, p2, FormMatrix::zero(e2.summands().to_vec(), e1.summands().to_vec())).unwrap()
        }
        // identity-like map between equal bundles with a shared field
        3 if e1 == e2 => {
            let p = random_pair(rng, e1, k);
            Triple::new(p.clone(), p, FormMatrix::identity(e1.summands())).unwrap()
        }
        _ => Triple::with_zero_fields(e1.clone(), e2.clone(), k, f_random(rng)).unwrap(),
    }
}
