use num_traits::{Signed, Zero};

use super::{check_length, divides, is_admissible, JumpSequence};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::psl2::InertiaType;

/// Herbrand's `φ` and its inverse `ψ` for a totally ramified extension with
/// inertia `ℤ/pʳ ⋊ ℤ/m` and lower jumps `h_1 < … < h_r`.
///
/// The filtration is `|G_0| = m·pʳ` and `|G_t| = p^{r−i+1}` on
/// `(h_{i−1}, h_i]`, so `φ` has slope `1/(m·p^{i−1})` there and
/// `1/(m·pʳ)` past `h_r`.
#[derive(Debug, Clone)]
pub struct HerbrandFunction {
    breaks: Vec<Rational>,
    slopes: Vec<Rational>,
}

impl HerbrandFunction {
    pub fn new(inertia: &InertiaType, lower: &JumpSequence) -> Result<Self> {
        check_length(inertia, lower)?;
        let slopes = (0..=inertia.r).map(|i| Rational::new(1.into(), (inertia.m * inertia.p.pow(i)).into())).collect();
        Ok(Self { breaks: lower.jumps().to_vec(), slopes })
    }

    /// `φ(t)` for `t ≥ 0`.
    pub fn phi(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut start = Rational::zero();
        for (h, slope) in self.breaks.iter().zip(&self.slopes) {
            if t <= h {
                return acc + (t - &start) * slope;
            }
            acc += (h - &start) * slope;
            start = h.clone();
        }
        acc + (t - &start) * self.slopes.last().expect("r + 1 slopes")
    }

    /// `ψ = φ⁻¹` for `v ≥ 0`.
    pub fn psi(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut start = Rational::zero();
        for (h, slope) in self.breaks.iter().zip(&self.slopes) {
            let seg_end = &acc + (h - &start) * slope;
            if *v <= seg_end {
                return &start + (v - &acc) / slope;
            }
            acc = seg_end;
            start = h.clone();
        }
        &start + (v - &acc) / self.slopes.last().expect("r + 1 slopes")
    }
}

/// Upper jumps `φ(h_i)` from integer lower jumps.
pub fn upper_from_lower(inertia: &InertiaType, lower: &JumpSequence) -> Result<JumpSequence> {
    check_length(inertia, lower)?;
    if let Some(h) = lower.jumps().iter().find(|h| !h.is_integer()) {
        return Err(Error::Argument(format!("lower jump {h} is not an integer")));
    }
    let h1 = lower.jumps()[0].to_integer();
    if divides(inertia.p, &h1) {
        return Err(Error::Argument(format!("first lower jump {h1} is divisible by p = {}", inertia.p)));
    }
    let phi = HerbrandFunction::new(inertia, lower)?;
    JumpSequence::new(lower.jumps().iter().map(|h| phi.phi(h)).collect())
}

/// Lower jumps from admissible upper jumps:
/// `h_i = h_{i−1} + m·p^{i−1}·(u_i − u_{i−1})`.
pub fn lower_from_upper(inertia: &InertiaType, upper: &JumpSequence) -> Result<JumpSequence> {
    let verdict = is_admissible(inertia, upper)?;
    if !verdict.admissible {
        return Err(Error::Precondition(format!("{upper} is not admissible for {inertia}: {}", verdict.summary())));
    }
    let mut lower = Vec::with_capacity(upper.len());
    let mut prev_u = Rational::zero();
    let mut prev_h = Rational::zero();
    for (i, u) in upper.jumps().iter().enumerate() {
        let scale = Rational::from_integer((inertia.m * inertia.p.pow(i as u32)).into());
        let h = &prev_h + (u - &prev_u) * scale;
        debug_assert!(h.is_integer() && h.is_positive());
        lower.push(h.clone());
        prev_h = h;
        prev_u = u.clone();
    }
    JumpSequence::new(lower)
}
