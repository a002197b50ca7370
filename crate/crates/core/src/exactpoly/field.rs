//! Ground fields used by the univariate kernel: ℚ and quadratic extensions ℚ(√c).

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::rat::Rat;

/// A field given as a context object; elements carry no context of their own.
pub trait Field {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_rat(&self, r: &Rat) -> Self::Elem;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn inv(&self, a: &Rat) -> Rat {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
}

/// ℚ(√c) for a non-square rational `c`; elements are pairs `a + b√c`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticField {
    pub radicand: Rat,
}

impl QuadraticField {
    pub fn new(radicand: Rat) -> Self {
        QuadraticField { radicand }
    }

    pub fn sqrt(&self) -> (Rat, Rat) {
        (Rat::zero(), Rat::one())
    }

    pub fn conj(&self, a: &(Rat, Rat)) -> (Rat, Rat) {
        (a.0.clone(), -&a.1)
    }
}

impl Field for QuadraticField {
    type Elem = (Rat, Rat);

    fn zero(&self) -> Self::Elem {
        (Rat::zero(), Rat::zero())
    }
    fn one(&self) -> Self::Elem {
        (Rat::one(), Rat::zero())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.0.is_zero() && a.1.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (&a.0 + &b.0, &a.1 + &b.1)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (&a.0 - &b.0, &a.1 - &b.1)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (&a.0 * &b.0 + &a.1 * &b.1 * &self.radicand, &a.0 * &b.1 + &a.1 * &b.0)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (-&a.0, -&a.1)
    }
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        let norm = &a.0 * &a.0 - &a.1 * &a.1 * &self.radicand;
        assert!(!norm.is_zero(), "inverse of zero in quadratic field");
        (&a.0 / &norm, -&a.1 / &norm)
    }
    fn from_rat(&self, r: &Rat) -> Self::Elem {
        (r.clone(), Rat::zero())
    }
}
