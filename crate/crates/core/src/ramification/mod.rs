//! Upper-jump sequences of `ℤ/pʳ ⋊ ℤ/m` inertia: admissibility, the partial
//! order and its deformation-compatible refinement, Herbrand conversion,
//! Hurwitz genus arithmetic, tame base change, and enumeration.

mod admissible;
mod enumerate;
mod genus;
mod herbrand;
mod tame;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

pub use admissible::{deformation_compatible, is_admissible, leq, AdmissibilityVerdict, Condition, ConditionCheck};
pub use enumerate::enumerate_admissible;
pub use genus::{divisor_degree, genus, Genus, GenusStatus};
pub use herbrand::{lower_from_upper, upper_from_lower, HerbrandFunction};
pub use tame::{base_sigma, tame_base_change, BaseSigma};

use crate::error::{Error, Result};
use crate::exactmath::{parse_rational, Rational};
use crate::psl2::InertiaType;

/// A strictly increasing, nonempty sequence of positive exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JumpSequence(Vec<Rational>);

impl JumpSequence {
    pub fn new(jumps: Vec<Rational>) -> Result<Self> {
        if jumps.is_empty() {
            return Err(Error::Argument("a jump sequence needs at least one jump".into()));
        }
        if !jumps[0].is_positive() {
            return Err(Error::Argument(format!("jump {} is not positive", jumps[0])));
        }
        if let Some(w) = jumps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::Argument(format!("jumps not strictly increasing: {} then {}", w[0], w[1])));
        }
        Ok(Self(jumps))
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(jumps: I) -> Result<Self> {
        Self::new(jumps.into_iter().map(|n| Rational::from_integer(n.into())).collect())
    }

    /// Parses a comma-separated list such as `"1/2,7/2"`.
    pub fn parse(s: &str) -> Result<Self> {
        let jumps = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Self::new(jumps)
    }

    pub fn jumps(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The conductor: the largest jump.
    pub fn last(&self) -> &Rational {
        self.0.last().expect("nonempty")
    }

    /// Jumps scaled by a positive rational.
    pub fn scaled(&self, factor: &Rational) -> Self {
        Self(self.0.iter().map(|u| u * factor).collect())
    }

    /// `(m·u_1, …, m·u_r)` if all are integers.
    pub fn integer_multiples(&self, m: u64) -> Option<Vec<BigInt>> {
        let m = Rational::from_integer(m.into());
        self.0
            .iter()
            .map(|u| {
                let x = u * &m;
                x.is_integer().then(|| x.to_integer())
            })
            .collect()
    }
}

impl fmt::Display for JumpSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|u| u.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for JumpSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::serde_util::rationals(&self.0, s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Numbering {
    Lower,
    Upper,
}

/// A higher ramification filtration of `I`, recorded by its jumps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamificationFiltration {
    pub numbering: Numbering,
    pub jumps: JumpSequence,
    pub inertia: InertiaType,
}

impl RamificationFiltration {
    /// Upper filtrations must be `I`-admissible; lower ones must come from
    /// an admissible upper filtration.
    pub fn new(numbering: Numbering, jumps: JumpSequence, inertia: InertiaType) -> Result<Self> {
        let upper = match numbering {
            Numbering::Upper => jumps.clone(),
            Numbering::Lower => upper_from_lower(&inertia, &jumps)?,
        };
        let verdict = is_admissible(&inertia, &upper)?;
        if !verdict.admissible {
            return Err(Error::Precondition(format!("{upper} is not admissible for {inertia}: {}", verdict.summary())));
        }
        Ok(Self { numbering, jumps, inertia })
    }

    pub fn to_upper(&self) -> Result<Self> {
        match self.numbering {
            Numbering::Upper => Ok(self.clone()),
            Numbering::Lower => Ok(Self {
                numbering: Numbering::Upper,
                jumps: upper_from_lower(&self.inertia, &self.jumps)?,
                inertia: self.inertia,
            }),
        }
    }

    pub fn to_lower(&self) -> Result<Self> {
        match self.numbering {
            Numbering::Lower => Ok(self.clone()),
            Numbering::Upper => Ok(Self {
                numbering: Numbering::Lower,
                jumps: lower_from_upper(&self.inertia, &self.jumps)?,
                inertia: self.inertia,
            }),
        }
    }
}

pub(crate) fn check_length(inertia: &InertiaType, jumps: &JumpSequence) -> Result<()> {
    if jumps.len() != inertia.r as usize {
        return Err(Error::Argument(format!("{} has r = {} but {} jumps were given", inertia, inertia.r, jumps.len())));
    }
    Ok(())
}

pub(crate) fn divides(p: u64, n: &BigInt) -> bool {
    (n % BigInt::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn sequence_validation() {
        assert!(JumpSequence::new(vec![]).is_err());
        assert!(JumpSequence::new(vec![rat(0, 1)]).is_err());
        assert!(JumpSequence::new(vec![rat(2, 1), rat(2, 1)]).is_err());
        assert!(JumpSequence::new(vec![rat(1, 2), rat(7, 2)]).is_ok());
    }

    #[test]
    fn parse_and_display() {
        let s = JumpSequence::parse("1/2, 7/2").unwrap();
        assert_eq!(s.to_string(), "(1/2, 7/2)");
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"["1/2","7/2"]"#);
        assert!(JumpSequence::parse("1.5").is_err());
    }

    #[test]
    fn filtration_conversion() {
        let d7 = InertiaType::dihedral(7, 1).unwrap();
        let f = RamificationFiltration::new(Numbering::Lower, JumpSequence::from_integers([3]).unwrap(), d7).unwrap();
        assert_eq!(f.to_upper().unwrap().jumps, JumpSequence::new(vec![rat(3, 2)]).unwrap());
        let bad = RamificationFiltration::new(Numbering::Upper, JumpSequence::from_integers([1]).unwrap(), d7);
        assert!(bad.is_err());
    }
}
