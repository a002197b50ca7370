use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::stability::rational_roots;
use crate::error::{Error, Result};
use crate::exactpoly::{form_gcd, gcd_all, BinForm, Place};
use crate::rat::Rat;

/// How the member `a·u + b·v` degenerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Degeneracy {
    IdenticallyZero,
    PerfectPower,
}

/// A degenerate member of the pencil `a·u + b·v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilMember {
    #[serde(with = "crate::rat::pq")]
    pub a: Rat,
    #[serde(with = "crate::rat::pq")]
    pub b: Rat,
    pub kind: Degeneracy,
    pub member: BinForm,
    /// `ℓ` with `member = c·ℓ^d`, for perfect powers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_factor: Option<BinForm>,
}

/// Degenerate members of a pencil. `locus` is a binary form in `(a, b)`
/// whose roots over ℂ are exactly the degenerate members; it is the zero
/// form when every member degenerates. `members` lists the rational ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilWitness {
    pub locus: BinForm,
    pub members: Vec<PencilMember>,
}

fn classify(u: &BinForm, v: &BinForm, a: Rat, b: Rat) -> PencilMember {
    let member = u.scale(&a).add(&v.scale(&b));
    if member.is_zero() {
        return PencilMember { a, b, kind: Degeneracy::IdenticallyZero, member, linear_factor: None };
    }
    let d = member.degree();
    let linear_factor = if d == 1 {
        Some(member.normalized())
    } else {
        let dx = form_gcd(&member.derivative_x0(), &member.derivative_x1());
        dx.ok().filter(|g| g.degree() + 1 == d).and_then(|g| member.div_exact(&g)).map(|l| l.normalized())
    };
    debug_assert!(linear_factor.as_ref().is_some_and(|l| {
        let p = l.pow(d);
        member.div_exact(&p).is_some_and(|c| c.is_constant())
    }));
    PencilMember { a, b, kind: Degeneracy::PerfectPower, member, linear_factor }
}

/// Quadratic form in `(a, b)` for `(a·p_u + b·p_v)(a·q_u + b·q_v)`.
fn product_form(pu: &Rat, pv: &Rat, qu: &Rat, qv: &Rat) -> BinForm {
    BinForm::new(2, vec![pv * qv, pu * qv + pv * qu, pu * qu]).expect("three coefficients")
}

/// Finds `(a, b) ≠ 0` with `a·u + b·v` identically zero or a `d`-th power of
/// a linear form, where `d = deg u = deg v ≥ 1`. Returns `None` when no
/// member over ℂ degenerates.
pub fn pencil_degenerate_member(u: &BinForm, v: &BinForm) -> Result<Option<PencilWitness>> {
    let d = u.degree();
    if v.degree() != d {
        return Err(Error::DegreeMismatch(format!("pencil forms of degrees {d} and {}", v.degree())));
    }
    if d == 0 {
        return Err(Error::Precondition("pencil forms must have positive degree".into()));
    }
    let zero = Rat::zero();
    let one = Rat::one();
    // proportional pencil
    let dependent = match (u.is_zero(), v.is_zero()) {
        (_, true) => Some((zero.clone(), one.clone())),
        (true, false) => Some((one.clone(), zero.clone())),
        _ => {
            let i = v.coeffs().iter().position(|c| !c.is_zero()).expect("v nonzero");
            let lambda = u.coeff(i) / v.coeff(i);
            (u == &v.scale(&lambda)).then(|| (one.clone(), -lambda))
        }
    };
    if let Some((a, b)) = dependent {
        let m = classify(u, v, a.clone(), b.clone());
        let locus = BinForm::new(1, vec![b, -a]).expect("two coefficients");
        return Ok(Some(PencilWitness { locus, members: vec![m] }));
    }
    // member is a d-th power iff its two partials are proportional
    let (ux, uy, vx, vy) = (u.derivative_x0(), u.derivative_x1(), v.derivative_x0(), v.derivative_x1());
    let mut minors = Vec::new();
    for j in 0..d {
        for l in j + 1..d {
            let m = product_form(ux.coeff(j), vx.coeff(j), uy.coeff(l), vy.coeff(l)).sub(&product_form(
                ux.coeff(l),
                vx.coeff(l),
                uy.coeff(j),
                vy.coeff(j),
            ));
            if !m.is_zero() {
                minors.push(m);
            }
        }
    }
    let Some(locus) = gcd_all(&minors) else {
        let m = classify(u, v, one, zero);
        return Ok(Some(PencilWitness { locus: BinForm::zero(0), members: vec![m] }));
    };
    if locus.degree() == 0 {
        return Ok(None);
    }
    let mut members = Vec::new();
    if locus.multiplicity_at(&Place::Infinity) > 0 {
        members.push(classify(u, v, one.clone(), zero.clone()));
    }
    let finite = rational_roots(&locus.dehomogenize()).unwrap_or_default();
    for z in finite {
        members.push(classify(u, v, z, one.clone()));
    }
    Ok(Some(PencilWitness { locus, members }))
}
