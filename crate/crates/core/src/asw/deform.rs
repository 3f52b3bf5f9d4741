use num_traits::One;
use serde::Serialize;

use super::{oracle_jumps, predicted_jumps, TowerSpec};
use crate::error::{Error, Result};
use crate::exactmath::{FpPolynomial, Rational};
use crate::ramification::{deformation_compatible, JumpSequence};

/// Replaces `x_i` by `x_i + scale·x^{m·u_i'}` whenever `u_i' > p·u_{i−1}'`
/// and `u_i' > u_i`, where `u` are the current jumps.
pub fn deform(tower: &TowerSpec, target: &JumpSequence, scale: u64) -> Result<TowerSpec> {
    let p = tower.p();
    if scale.is_multiple_of(p) {
        return Err(Error::Argument(format!("scale {scale} vanishes mod {p}")));
    }
    let current = predicted_jumps(tower)?;
    let inertia = tower.inertia()?;
    if !deformation_compatible(&inertia, &current, target)? {
        return Err(Error::Precondition(format!(
            "{target} is not a compatible deformation target for {current} under {}",
            inertia.name()
        )));
    }
    let m = Rational::from_integer(tower.m().into());
    let pr = Rational::from_integer(p.into());
    let mut prev = Rational::from_integer(0.into());
    let mut polys = Vec::with_capacity(tower.r());
    for ((x, u), u_new) in tower.polys().iter().zip(current.jumps()).zip(target.jumps()) {
        let mut x = x.clone();
        if *u_new > &prev * &pr && u_new > u {
            let deg = u_new * &m;
            debug_assert!(deg.denom().is_one());
            let deg = usize::try_from(deg.to_integer())
                .map_err(|_| Error::Unsupported(format!("degree {deg} is too large")))?;
            x = &x + &FpPolynomial::monomial(p, scale, deg);
        }
        polys.push(x);
        prev = u_new.clone();
    }
    Ok(tower.with_polys(polys))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeformationVerdict {
    pub passed: bool,
    pub target: JumpSequence,
    pub predicted: JumpSequence,
    /// `None` when `r ≥ 3`, where no oracle is available.
    pub oracle: Option<JumpSequence>,
    /// The deformed tower in its text form.
    pub deformed: String,
}

pub fn verify_deformation(tower: &TowerSpec, target: &JumpSequence, scale: u64) -> Result<DeformationVerdict> {
    let deformed = deform(tower, target, scale)?;
    let predicted = predicted_jumps(&deformed)?;
    let oracle = if deformed.r() <= 2 { Some(oracle_jumps(&deformed)?) } else { None };
    let passed = predicted == *target && oracle.as_ref().is_none_or(|o| o == target);
    Ok(DeformationVerdict { passed, target: target.clone(), predicted, oracle, deformed: deformed.format() })
}
