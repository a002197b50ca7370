//! Homogeneous binary forms in `x0, x1` with rational coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::field::Rationals;
use super::upoly;
use crate::error::{Error, Result};
use crate::rat::{self, Rat};

/// A binary form of fixed degree `d`; `coeffs[i]` multiplies `x0^i x1^(d-i)`.
///
/// The zero form keeps its degree tag so that sums and ledgers stay typed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FormRepr", into = "FormRepr")]
pub struct BinForm {
    degree: usize,
    coeffs: Vec<Rat>,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    degree: usize,
    #[serde(with = "crate::rat::pq_vec")]
    coeffs: Vec<Rat>,
}

impl TryFrom<FormRepr> for BinForm {
    type Error = Error;
    fn try_from(r: FormRepr) -> Result<Self> {
        BinForm::new(r.degree, r.coeffs)
    }
}

impl From<BinForm> for FormRepr {
    fn from(f: BinForm) -> Self {
        FormRepr { degree: f.degree, coeffs: f.coeffs }
    }
}

/// A point of ℙ¹ where a form can be dehomogenized and localized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Place {
    /// The point `[z : 1]`, i.e. the linear form `x0 - z·x1`.
    Finite(#[serde(with = "crate::rat::pq")] Rat),
    /// The point `[1 : 0]`, i.e. the linear form `x1`.
    Infinity,
}

impl BinForm {
    pub fn new(degree: usize, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::MalformedForm(format!(
                "degree {degree} needs {} coefficients, got {}",
                degree + 1,
                coeffs.len()
            )));
        }
        Ok(BinForm { degree, coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty());
        BinForm { degree: coeffs.len() - 1, coeffs: coeffs.iter().map(|&c| rat::rat(c)).collect() }
    }

    pub fn zero(degree: usize) -> Self {
        BinForm { degree, coeffs: vec![Rat::zero(); degree + 1] }
    }

    pub fn constant(c: Rat) -> Self {
        BinForm { degree: 0, coeffs: vec![c] }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// `c · x0^i · x1^j`.
    pub fn monomial(i: usize, j: usize, c: Rat) -> Self {
        let mut f = Self::zero(i + j);
        f.coeffs[i] = c;
        f
    }

    pub fn x0() -> Self {
        Self::monomial(1, 0, Rat::one())
    }

    pub fn x1() -> Self {
        Self::monomial(0, 1, Rat::one())
    }

    /// The linear form vanishing at `place`.
    pub fn linear_at(place: &Place) -> Self {
        match place {
            Place::Finite(z) => BinForm { degree: 1, coeffs: vec![-z, Rat::one()] },
            Place::Infinity => Self::x1(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    /// Re-tags a zero form with a new degree; nonzero forms must already match.
    pub fn with_degree(self, degree: usize) -> Result<Self> {
        if self.degree == degree {
            Ok(self)
        } else if self.is_zero() {
            Ok(Self::zero(degree))
        } else {
            Err(Error::DegreeMismatch(format!("form of degree {} cannot be re-tagged as degree {degree}", self.degree)))
        }
    }

    fn check_same_degree(&self, other: &Self) {
        assert!(
            self.degree == other.degree || self.is_zero() || other.is_zero(),
            "adding forms of degrees {} and {}",
            self.degree,
            other.degree
        );
    }

    /// Sum; a zero operand adopts the degree of the other.
    pub fn add(&self, other: &Self) -> Self {
        self.check_same_degree(other);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        BinForm { degree: self.degree, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn neg(&self) -> Self {
        BinForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        BinForm { degree: self.degree, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x0: &Rat, x1: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * pow_rat(x0, i) * pow_rat(x1, self.degree - i);
        }
        acc
    }

    /// Value at `[z : 1]`.
    pub fn eval_z(&self, z: &Rat) -> Rat {
        upoly::eval(&Rationals, &self.coeffs, z)
    }

    /// `f(z, 1)` as a trimmed univariate polynomial in `z = x0/x1`.
    pub fn dehomogenize(&self) -> Vec<Rat> {
        upoly::trim(&Rationals, self.coeffs.clone())
    }

    /// `f(1, w)` in `w = x1/x0`, lowest power of `w` first.
    pub fn dehomogenize_at_infinity(&self) -> Vec<Rat> {
        upoly::trim(&Rationals, self.coeffs.iter().rev().cloned().collect())
    }

    /// Multiplicity of the root `[1 : 0]`.
    pub fn multiplicity_at_infinity(&self) -> usize {
        assert!(!self.is_zero());
        self.degree - upoly::degree(&self.dehomogenize()).unwrap()
    }

    pub fn multiplicity_at(&self, place: &Place) -> usize {
        assert!(!self.is_zero());
        match place {
            Place::Infinity => self.multiplicity_at_infinity(),
            Place::Finite(z) => upoly::root_multiplicity(&Rationals, &self.dehomogenize(), z),
        }
    }

    /// Homogenizes `p(z)` to degree `degree >= deg p`.
    pub fn homogenize(p: &[Rat], degree: usize) -> Self {
        let p = upoly::trim(&Rationals, p.to_vec());
        assert!(p.len() <= degree + 1, "polynomial degree exceeds form degree");
        let mut f = Self::zero(degree);
        for (i, c) in p.into_iter().enumerate() {
            f.coeffs[i] = c;
        }
        f
    }

    /// Exact quotient `self / other`, or `None` if `other` does not divide.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() || other.degree > self.degree {
            return if self.is_zero() && !other.is_zero() && other.degree <= self.degree {
                Some(Self::zero(self.degree - other.degree))
            } else {
                None
            };
        }
        let d = self.degree - other.degree;
        if self.is_zero() {
            return Some(Self::zero(d));
        }
        if self.multiplicity_at_infinity() < other.multiplicity_at_infinity() {
            return None;
        }
        let (q, r) = upoly::div_rem(&Rationals, &self.dehomogenize(), &other.dehomogenize());
        if !r.is_empty() {
            return None;
        }
        Some(Self::homogenize(&q, d))
    }

    /// Scales so the highest-`x0`-power nonzero coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().rev().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.iter().rev().find(|c| !c.is_zero())
    }

    pub fn derivative_x0(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.degree).map(|i| &self.coeffs[i] * rat::rat(i as i64)).collect();
        BinForm { degree: self.degree - 1, coeffs }
    }

    pub fn derivative_x1(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let coeffs = (0..self.degree).map(|i| &self.coeffs[i] * rat::rat((self.degree - i) as i64)).collect();
        BinForm { degree: self.degree - 1, coeffs }
    }

    /// Substitutes `x0 -> x1, x1 -> x0`.
    pub fn swap_variables(&self) -> Self {
        BinForm { degree: self.degree, coeffs: self.coeffs.iter().rev().cloned().collect() }
    }

    pub fn is_square_over_c(&self) -> Result<SquareTest> {
        square_over_c_test(self)
    }
}

fn pow_rat(x: &Rat, e: usize) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * x)
}

/// Monic-normalized greatest common divisor of two forms, including the
/// shared power of `x1` (common roots at infinity).
pub fn form_gcd(f: &BinForm, g: &BinForm) -> Result<BinForm> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::UndefinedGcd),
        (true, false) => Ok(g.normalized()),
        (false, true) => Ok(f.normalized()),
        (false, false) => {
            let inf = f.multiplicity_at_infinity().min(g.multiplicity_at_infinity());
            let u = upoly::gcd(&Rationals, &f.dehomogenize(), &g.dehomogenize());
            let finite_deg = u.len() - 1;
            Ok(BinForm::homogenize(&u, finite_deg + inf))
        }
    }
}

/// gcd of every nonzero form in `forms`; `None` if all are zero.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a BinForm>>(forms: I) -> Option<BinForm> {
    let mut acc: Option<BinForm> = None;
    for f in forms {
        if f.is_zero() {
            continue;
        }
        acc = Some(match acc {
            None => f.normalized(),
            Some(a) => form_gcd(&a, f).expect("nonzero operands"),
        });
        if acc.as_ref().is_some_and(|a| a.degree == 0) {
            break;
        }
    }
    acc
}

/// Outcome of [`square_over_c_test`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTest {
    pub is_square: bool,
    /// Degree of `g` in `f = c·g²` when `is_square`.
    pub half_degree: Option<usize>,
    /// `g` itself, defined over ℚ, and the constant `c` when `is_square`.
    pub root: Option<(BinForm, Rat)>,
}

/// Decides whether `f = c·g²` over ℂ: every root, including `[1:0]`, must
/// have even multiplicity. The square root `g` is then defined over ℚ.
pub fn square_over_c_test(f: &BinForm) -> Result<SquareTest> {
    if f.is_zero() {
        return Err(Error::ZeroForm("square test of the zero form"));
    }
    let inf = f.multiplicity_at_infinity();
    let p = f.dehomogenize();
    let parts = upoly::squarefree_parts(&Rationals, &p);
    let odd = parts.iter().enumerate().any(|(i, part)| (i + 1) % 2 == 1 && part.len() > 1);
    if inf % 2 == 1 || odd {
        return Ok(SquareTest { is_square: false, half_degree: None, root: None });
    }
    let mut g = vec![Rat::one()];
    for (i, part) in parts.iter().enumerate() {
        for _ in 0..i.div_ceil(2) {
            g = upoly::mul(&Rationals, &g, part);
        }
    }
    let half = f.degree / 2;
    let g = BinForm::homogenize(&g, half);
    let c = f.leading_coeff().unwrap().clone() / g.leading_coeff().unwrap().pow(2);
    Ok(SquareTest { is_square: true, half_degree: Some(half), root: Some((g, c)) })
}

impl fmt::Display for BinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..=self.degree).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let j = self.degree - i;
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let mut parts = Vec::new();
                    if i > 0 {
                        parts.push(if i == 1 { "x0".to_string() } else { format!("x0^{i}") });
                    }
                    if j > 0 {
                        parts.push(if j == 1 { "x1".to_string() } else { format!("x1^{j}") });
                    }
                    parts.join("*")
                }
            };
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}
