use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{is_admissible, JumpSequence};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::psl2::InertiaType;

/// Degree of the ramification divisor above the branch point, per point:
/// `m·pʳ − 1 + (p − 1)·m·Σ p^{i−1}·u_i`.
pub fn divisor_degree(inertia: &InertiaType, jumps: &JumpSequence) -> Result<BigInt> {
    let verdict = is_admissible(inertia, jumps)?;
    if !verdict.admissible {
        return Err(Error::Precondition(format!("{jumps} is not admissible for {inertia}: {}", verdict.summary())));
    }
    let (p, m) = (inertia.p, inertia.m);
    let weighted: Rational =
        jumps.jumps().iter().enumerate().map(|(i, u)| u * Rational::from_integer(p.pow(i as u32).into())).sum();
    let deg = Rational::from_integer((m * inertia.p_part() - 1).into())
        + Rational::from_integer(((p - 1) * m).into()) * weighted;
    if !deg.is_integer() {
        return Err(Error::Invariant(format!("ramification divisor degree {deg} is not an integer")));
    }
    Ok(deg.to_integer())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenusStatus {
    /// A nonnegative integer: a genus some curve could have.
    Curve,
    /// Integral but negative: no curve realizes this data.
    Negative,
    /// Not an integer: the inertia data is incompatible with the group order.
    NonIntegral,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Genus {
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub value: Rational,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub divisor_degree: BigInt,
    pub status: GenusStatus,
}

impl Genus {
    pub fn as_integer(&self) -> Option<BigInt> {
        self.value.is_integer().then(|| self.value.to_integer())
    }
}

/// Genus `1 − |G| + |G|·deg(R)/(2·m·pʳ)` of a one-point `G`-cover of the
/// line with inertia `I` and upper jumps `jumps`.
///
/// Negative and non-integral values are returned, flagged, not rejected.
pub fn genus(group_order: &BigInt, inertia: &InertiaType, jumps: &JumpSequence) -> Result<Genus> {
    if !group_order.is_positive() {
        return Err(Error::Argument(format!("group order {group_order} must be positive")));
    }
    let pr = BigInt::from(inertia.p_part());
    if !(group_order % &pr).is_zero() {
        return Err(Error::Argument(format!("p^r = {pr} does not divide |G| = {group_order}")));
    }
    let deg = divisor_degree(inertia, jumps)?;
    let g = Rational::from_integer(group_order.clone());
    let value = Rational::from_integer(1.into()) - &g
        + &g * Rational::from_integer(deg.clone()) / Rational::from_integer(2 * inertia.m * pr);
    let status = if !value.is_integer() {
        GenusStatus::NonIntegral
    } else if value.is_negative() {
        GenusStatus::Negative
    } else {
        GenusStatus::Curve
    };
    Ok(Genus { value, divisor_degree: deg, status })
}
