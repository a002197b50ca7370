//! Dense univariate polynomials over a [`Field`], stored lowest degree first
//! with no trailing zeros (the zero polynomial is the empty vector).

use super::field::Field;

pub type UPoly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, mut p: UPoly<F::Elem>) -> UPoly<F::Elem> {
    while p.last().is_some_and(|c| f.is_zero(c)) {
        p.pop();
    }
    p
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<E>(p: &[E]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(f, out)
}

pub fn neg<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    a.iter().map(|x| f.neg(x)).collect()
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    add(f, a, &neg(f, b))
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, a: &[F::Elem], c: &F::Elem) -> UPoly<F::Elem> {
    trim(f, a.iter().map(|x| f.mul(x, c)).collect())
}

/// Quotient and remainder; panics if `b` is zero.
pub fn div_rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (UPoly<F::Elem>, UPoly<F::Elem>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(&b[db]);
    let mut rem: UPoly<F::Elem> = a.to_vec();
    if rem.len() < b.len() {
        return (Vec::new(), trim(f, rem));
    }
    let mut quot = vec![f.zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = f.mul(&rem[i + db], &lead_inv);
        if f.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] = f.sub(&rem[i + j], &f.mul(&c, bj));
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (trim(f, quot), trim(f, rem))
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(lead) => scale(f, a, &f.inv(lead)),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> UPoly<F::Elem> {
    let mut x = trim(f, a.to_vec());
    let mut y = trim(f, b.to_vec());
    while !y.is_empty() {
        let (_, r) = div_rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> UPoly<F::Elem> {
    let mut out = Vec::with_capacity(a.len().saturating_sub(1));
    let mut k = f.zero();
    for (i, c) in a.iter().enumerate() {
        if i > 0 {
            out.push(f.mul(c, &k));
        }
        k = f.add(&k, &f.one());
    }
    trim(f, out)
}

pub fn eval<F: Field>(f: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

/// Squarefree factorization by Yun's algorithm: `a = c · Π parts[i]^(i+1)`
/// with monic pairwise coprime squarefree parts (possibly constant 1).
pub fn squarefree_parts<F: Field>(f: &F, a: &[F::Elem]) -> Vec<UPoly<F::Elem>> {
    let a = monic(f, a);
    if degree(&a).is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let da = derivative(f, &a);
    let mut g = gcd(f, &a, &da);
    let mut b = div_rem(f, &a, &g).0;
    let mut c = div_rem(f, &da, &g).0;
    let mut d = sub(f, &c, &derivative(f, &b));
    let mut parts = Vec::new();
    loop {
        g = gcd(f, &b, &d);
        parts.push(g.clone());
        b = div_rem(f, &b, &g).0;
        if degree(&b).is_none_or(|x| x == 0) {
            break;
        }
        c = div_rem(f, &d, &g).0;
        d = sub(f, &c, &derivative(f, &b));
    }
    while parts.last().is_some_and(|p| p.len() == 1) {
        parts.pop();
    }
    parts
}

/// Multiplicity of the root `x` in `a` (`a` nonzero).
pub fn root_multiplicity<F: Field>(f: &F, a: &[F::Elem], x: &F::Elem) -> usize {
    let lin = vec![f.neg(x), f.one()];
    let mut p = trim(f, a.to_vec());
    let mut m = 0;
    while !p.is_empty() {
        let (q, r) = div_rem(f, &p, &lin);
        if !r.is_empty() {
            break;
        }
        p = q;
        m += 1;
    }
    m
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
pub fn interpolate<F: Field>(f: &F, xs: &[F::Elem], ys: &[F::Elem]) -> UPoly<F::Elem> {
    let mut out: UPoly<F::Elem> = Vec::new();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = vec![f.one()];
        let mut denom = f.one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = mul(f, &basis, &[f.neg(xj), f.one()]);
                denom = f.mul(&denom, &f.sub(xi, xj));
            }
        }
        out = add(f, &out, &scale(f, &basis, &f.div(yi, &denom)));
    }
    out
}

/// Degree of the gcd of two homogeneous forms of degrees `da`, `db` given by
/// their dehomogenized coefficient lists (lowest power of `z` first).
pub fn homogeneous_gcd_degree<F: Field>(f: &F, a: &[F::Elem], da: usize, b: &[F::Elem], db: usize) -> Option<usize> {
    let a = trim(f, a.to_vec());
    let b = trim(f, b.to_vec());
    match (a.is_empty(), b.is_empty()) {
        (true, true) => None,
        (true, false) => Some(db),
        (false, true) => Some(da),
        (false, false) => {
            let inf = (da + 1 - a.len()).min(db + 1 - b.len());
            Some(gcd(f, &a, &b).len() - 1 + inf)
        }
    }
}
