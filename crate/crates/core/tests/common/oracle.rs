//! Independent rank-2 stability oracle: the discriminant is reconstructed by
//! sampling and interpolation, its square root by power series, and the
//! eigenline degrees by Euclid over ℚ or ℚ(√c).

use loghiggs::cohiggs::CoHiggsPair;
use loghiggs::Status;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Elements `x + y√c` of ℚ(√c).
#[derive(Clone, Debug, PartialEq)]
pub struct K {
    x: Q,
    y: Q,
}

struct Ext {
    c: Q,
}

impl Ext {
    fn from(&self, x: Q) -> K {
        K { x, y: Q::zero() }
    }
    fn zero(&self) -> K {
        self.from(Q::zero())
    }
    fn add(&self, a: &K, b: &K) -> K {
        K { x: &a.x + &b.x, y: &a.y + &b.y }
    }
    fn sub(&self, a: &K, b: &K) -> K {
        K { x: &a.x - &b.x, y: &a.y - &b.y }
    }
    fn mul(&self, a: &K, b: &K) -> K {
        K { x: &a.x * &b.x + &a.y * &b.y * &self.c, y: &a.x * &b.y + &a.y * &b.x }
    }
    fn inv(&self, a: &K) -> K {
        let n = &a.x * &a.x - &a.y * &a.y * &self.c;
        K { x: &a.x / &n, y: -&a.y / &n }
    }
    fn is_zero(a: &K) -> bool {
        a.x.is_zero() && a.y.is_zero()
    }

    fn trim(&self, mut p: Vec<K>) -> Vec<K> {
        while p.last().is_some_and(Self::is_zero) {
            p.pop();
        }
        p
    }

    /// Remainder of `a` modulo `b` (lowest degree first).
    fn rem(&self, a: &[K], b: &[K]) -> Vec<K> {
        let mut r = self.trim(a.to_vec());
        let lead = self.inv(b.last().unwrap());
        while r.len() >= b.len() {
            let s = r.len() - b.len();
            let factor = self.mul(r.last().unwrap(), &lead);
            for (i, bi) in b.iter().enumerate() {
                r[s + i] = self.sub(&r[s + i], &self.mul(&factor, bi));
            }
            r = self.trim(r);
        }
        r
    }

    fn gcd_degree(&self, a: &[K], b: &[K]) -> usize {
        let (mut a, mut b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        a.len() - 1
    }

    /// Degree of the gcd of two forms of degrees `da`, `db`, given by their
    /// dehomogenizations; at least one must be nonzero.
    fn form_gcd_degree(&self, a: &[K], da: usize, b: &[K], db: usize) -> usize {
        let (a, b) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        match (a.is_empty(), b.is_empty()) {
            (true, _) => db,
            (_, true) => da,
            _ => {
                let inf = (da + 1 - a.len()).min(db + 1 - b.len());
                self.gcd_degree(&a, &b) + inf
            }
        }
    }
}

/// Lagrange interpolation through `(j, ys[j])`, lowest degree first.
fn interpolate(ys: &[Q]) -> Vec<Q> {
    let n = ys.len();
    let mut out = vec![Q::zero(); n];
    for (j, yj) in ys.iter().enumerate() {
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for m in 0..n {
            if m == j {
                continue;
            }
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b;
                next[i] -= b * q(m as i64);
            }
            basis = next;
            denom *= q(j as i64 - m as i64);
        }
        for (i, b) in basis.iter().enumerate() {
            out[i] += b * yj / &denom;
        }
    }
    out
}

/// Coefficients of an entry as a form of degree `d` (x0-power index).
fn entry(p: &CoHiggsPair, j: usize, i: usize, d: usize) -> Vec<Q> {
    let e = p.field().get(j, i);
    (0..=d).map(|t| if e.is_zero() || t > e.degree() { Q::zero() } else { e.coeff(t).clone() }).collect()
}

fn eval(c: &[Q], z: &Q) -> Q {
    c.iter().rev().fold(Q::zero(), |acc, a| acc * z + a)
}

fn is_rational_square(c: &Q) -> bool {
    if c.is_negative() {
        return false;
    }
    let sq = |n: &BigInt| {
        let r = n.sqrt();
        &r * &r == *n
    };
    sq(c.numer()) && sq(c.denom())
}

/// Power-series square root of `p` (with `p[0] = 1`), verified exactly.
fn series_sqrt(p: &[Q], half: usize) -> Option<Vec<Q>> {
    let mut s = vec![Q::one()];
    for n in 1..=half {
        let mut acc = p.get(n).cloned().unwrap_or_else(Q::zero);
        for i in 1..n {
            acc -= &s[i] * &s[n - i];
        }
        s.push(acc / q(2));
    }
    let mut sq = vec![Q::zero(); 2 * half + 1];
    for (i, a) in s.iter().enumerate() {
        for (j, b) in s.iter().enumerate() {
            sq[i + j] += a * b;
        }
    }
    let padded: Vec<Q> = (0..sq.len().max(p.len())).map(|i| p.get(i).cloned().unwrap_or_else(Q::zero)).collect();
    let sq: Vec<Q> = (0..padded.len()).map(|i| sq.get(i).cloned().unwrap_or_else(Q::zero)).collect();
    (sq == padded).then_some(s)
}

/// Status of a rank-2 pair computed without the library's decision code.
pub fn rank2_status(p: &CoHiggsPair) -> Status {
    let e = p.bundle().summands().to_vec();
    let (a1, a2) = (e[0], e[1]);
    let k = p.twist();
    let mu = Q::new((a1 + a2).into(), 2.into());
    let verdict = |deg: Option<i64>| match deg {
        None => Status::Stable,
        Some(d) => match q(d).cmp(&mu) {
            std::cmp::Ordering::Greater => Status::NotSemistable,
            std::cmp::Ordering::Equal => Status::StrictlySemistable,
            std::cmp::Ordering::Less => Status::Stable,
        },
    };
    if k < 0 && a1 == a2 {
        return Status::StrictlySemistable;
    }
    let deg = |x: i64| usize::try_from(x).ok();
    let dk = deg(k).unwrap_or(0);
    // entry degrees, with forced zeros given degree 0
    let (da, db, dc, dd) = (dk, deg(a1 + k - a2), deg(a2 + k - a1), dk);
    let ea = if k >= 0 { entry(p, 0, 0, da) } else { vec![Q::zero()] };
    let ed = if k >= 0 { entry(p, 1, 1, dd) } else { vec![Q::zero()] };
    let eb = db.map_or(vec![Q::zero()], |d| entry(p, 0, 1, d));
    let ec = dc.map_or(vec![Q::zero()], |d| entry(p, 1, 0, d));
    let scalar = eb.iter().all(Zero::is_zero) && ec.iter().all(Zero::is_zero) && ea == ed;
    if scalar {
        return verdict(Some(a1));
    }
    if k < 0 {
        // only b can be nonzero; its kernel is the first summand
        return verdict(Some(a1));
    }
    // discriminant by sampling at z = 0..=2k
    let n = 2 * dk + 1;
    let samples: Vec<Q> = (0..n)
        .map(|j| {
            let z = q(j as i64);
            let (a, b, c, d) = (eval(&ea, &z), eval(&eb, &z), eval(&ec, &z), eval(&ed, &z));
            (&a - &d) * (&a - &d) + q(4) * b * c
        })
        .collect();
    let disc = interpolate(&samples);
    let trace: Vec<Q> = (0..=dk).map(|i| &ea[i] + &ed[i]).collect();
    // eigenvalues λ = (τ + s·√c·g) / 2 as vectors over ℚ(√c)
    let eigen: Vec<(Ext, Vec<K>)> = if disc.iter().all(Zero::is_zero) {
        let ext = Ext { c: q(1) };
        let lam = trace.iter().map(|t| ext.from(t / q(2))).collect();
        vec![(ext, lam)]
    } else {
        let i0 = disc.iter().position(|x| !x.is_zero()).unwrap();
        let top = disc.iter().rposition(|x| !x.is_zero()).unwrap();
        let inf = 2 * dk - top;
        if i0 % 2 == 1 || inf % 2 == 1 {
            return Status::Stable;
        }
        let c = disc[i0].clone();
        let normalized: Vec<Q> = disc[i0..=top].iter().map(|x| x / &c).collect();
        let Some(root) = series_sqrt(&normalized, (top - i0) / 2) else {
            return Status::Stable;
        };
        let mut g = vec![Q::zero(); dk + 1];
        for (i, r) in root.iter().enumerate() {
            g[i0 / 2 + i] = r.clone();
        }
        let (ext, scale) = if is_rational_square(&c) {
            let s = Q::new(c.numer().sqrt(), c.denom().sqrt());
            (Ext { c: q(1) }, K { x: s, y: Q::zero() })
        } else {
            (Ext { c: c.clone() }, K { x: Q::zero(), y: Q::one() })
        };
        [1i64, -1]
            .iter()
            .map(|&s| {
                let lam = (0..=dk)
                    .map(|i| {
                        let gi = ext.mul(&scale, &ext.from(&g[i] * q(s)));
                        let v = ext.add(&ext.from(trace[i].clone()), &gi);
                        K { x: v.x / q(2), y: v.y / q(2) }
                    })
                    .collect();
                (Ext { c: ext.c.clone() }, lam)
            })
            .collect()
    };
    let mut best: Option<i64> = None;
    for (ext, lam) in eigen {
        let lift = |v: &[Q]| -> Vec<K> { v.iter().map(|x| ext.from(x.clone())).collect() };
        let (ka, kb, kc, kd) = (lift(&ea), lift(&eb), lift(&ec), lift(&ed));
        let lam_minus = |v: &[K]| -> Vec<K> { (0..=dk).map(|i| ext.sub(&lam[i], &v[i])).collect() };
        // eigenvector (b, λ − a) from O(a2 − k), else (λ − d, c) from O(a1 − k)
        let first = (kb.clone(), db.unwrap_or(0), lam_minus(&ka), dk, a2 - k);
        let second = (lam_minus(&kd), dk, kc.clone(), dc.unwrap_or(0), a1 - k);
        let nonzero = |v: &[K]| v.iter().any(|x| !Ext::is_zero(x));
        let (u, du, w, dw, m) = if nonzero(&first.0) || nonzero(&first.2) { first } else { second };
        let g = ext.form_gcd_degree(&u, du, &w, dw);
        let d = m + g as i64;
        best = Some(best.map_or(d, |b: i64| b.max(d)));
    }
    verdict(best)
}
