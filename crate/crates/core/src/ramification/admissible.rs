use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::{check_length, divides, JumpSequence};
use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::psl2::InertiaType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// Every `u_i ∈ (1/m)ℕ`.
    #[serde(rename = "a")]
    Integrality,
    /// `gcd(m, m·u_1) = m/m_I`.
    #[serde(rename = "b")]
    TameAction,
    /// `p ∤ m·u_1`, and each later jump is `p·u_{i−1}` or exceeds it with `p ∤ m·u_i`.
    #[serde(rename = "c")]
    JumpGrowth,
    /// `m·u_i ≡ m·u_1 (mod m)`.
    #[serde(rename = "d")]
    ResidueClass,
}

impl Condition {
    pub fn label(&self) -> char {
        match self {
            Self::Integrality => 'a',
            Self::TameAction => 'b',
            Self::JumpGrowth => 'c',
            Self::ResidueClass => 'd',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub condition: Condition,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdmissibilityVerdict {
    pub admissible: bool,
    pub conditions: [ConditionCheck; 4],
}

impl AdmissibilityVerdict {
    /// The first failing condition, in order (a)–(d).
    pub fn first_failure(&self) -> Option<&ConditionCheck> {
        self.conditions.iter().find(|c| !c.holds)
    }

    pub fn summary(&self) -> String {
        match self.first_failure() {
            None => "admissible".into(),
            Some(c) => format!("condition ({}) fails: {}", c.condition.label(), c.witness.as_deref().unwrap_or("")),
        }
    }
}

fn check(condition: Condition, failure: Option<String>) -> ConditionCheck {
    ConditionCheck { condition, holds: failure.is_none(), witness: failure }
}

/// Decides whether `jumps` can be the upper ramification jumps of `inertia`.
///
/// Conditions that need `m·u_i` to be an integer count as failed when it is
/// not; the witness then names the non-integral value.
pub fn is_admissible(inertia: &InertiaType, jumps: &JumpSequence) -> Result<AdmissibilityVerdict> {
    check_length(inertia, jumps)?;
    let (p, m, m_i) = (inertia.p, inertia.m, inertia.m_i);
    let mq = Rational::from_integer(m.into());
    let scaled: Vec<Rational> = jumps.jumps().iter().map(|u| u * &mq).collect();
    let ints: Vec<Option<BigInt>> = scaled.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect();
    let m_big = BigInt::from(m);

    let a = ints
        .iter()
        .zip(jumps.jumps())
        .find(|(n, _)| n.is_none())
        .map(|(_, u)| format!("m*u = {} is not an integer", &mq * u));

    let b = match &ints[0] {
        None => Some(format!("m*u_1 = {} is not an integer", scaled[0])),
        Some(n1) => {
            let g = m_big.gcd(n1);
            let want = BigInt::from(m / m_i);
            (g != want).then(|| format!("gcd({m}, {n1}) = {g} != m/m_I = {want}"))
        }
    };

    let c = match &ints[0] {
        None => Some(format!("m*u_1 = {} is not an integer", scaled[0])),
        Some(n1) if divides(p, n1) => Some(format!("m*u_1 = {n1} is divisible by p = {p}")),
        Some(_) => {
            let pq = Rational::from_integer(p.into());
            (1..jumps.len()).find_map(|i| {
                let prev = &jumps.jumps()[i - 1] * &pq;
                let u = &jumps.jumps()[i];
                if *u == prev {
                    None
                } else if *u < prev {
                    Some(format!("u_{} = {u} < p*u_{} = {prev}", i + 1, i))
                } else {
                    match &ints[i] {
                        Some(n) if !divides(p, n) => None,
                        Some(n) => Some(format!("u_{} > p*u_{} but m*u_{} = {n} is divisible by p", i + 1, i, i + 1)),
                        None => Some(format!("m*u_{} = {} is not an integer", i + 1, scaled[i])),
                    }
                }
            })
        }
    };

    let d = match &ints[0] {
        None => Some(format!("m*u_1 = {} is not an integer", scaled[0])),
        Some(n1) => ints.iter().enumerate().skip(1).find_map(|(i, n)| match n {
            None => Some(format!("m*u_{} = {} is not an integer", i + 1, scaled[i])),
            Some(n) if (n - n1).mod_floor(&m_big) != BigInt::from(0) => {
                Some(format!("m*u_{} = {n} and m*u_1 = {n1} differ mod {m}", i + 1))
            }
            Some(_) => None,
        }),
    };

    let conditions = [
        check(Condition::Integrality, a),
        check(Condition::TameAction, b),
        check(Condition::JumpGrowth, c),
        check(Condition::ResidueClass, d),
    ];
    let admissible = conditions.iter().all(|c| c.holds);
    Ok(AdmissibilityVerdict { admissible, conditions })
}

/// Componentwise order on sequences of equal length.
pub fn leq(lhs: &JumpSequence, rhs: &JumpSequence) -> Result<bool> {
    if lhs.len() != rhs.len() {
        return Err(Error::Argument(format!("cannot compare {lhs} with {rhs}: lengths differ")));
    }
    Ok(lhs.jumps().iter().zip(rhs.jumps()).all(|(a, b)| a <= b))
}

/// `target` is admissible, dominates `current`, and `m·u_1 ≡ m·u_1' (mod m)`.
pub fn deformation_compatible(inertia: &InertiaType, current: &JumpSequence, target: &JumpSequence) -> Result<bool> {
    let verdict = is_admissible(inertia, current)?;
    if !verdict.admissible {
        return Err(Error::Precondition(format!("{current} is not admissible for {inertia}: {}", verdict.summary())));
    }
    check_length(inertia, target)?;
    if !is_admissible(inertia, target)?.admissible || !leq(current, target)? {
        return Ok(false);
    }
    let m = BigInt::from(inertia.m);
    let n1 = current.integer_multiples(inertia.m).expect("admissible")[0].clone();
    let n1_new = target.integer_multiples(inertia.m).expect("admissible")[0].clone();
    Ok((n1 - n1_new).mod_floor(&m) == BigInt::from(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn seq(v: &[(i64, i64)]) -> JumpSequence {
        JumpSequence::new(v.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap()
    }

    #[test]
    fn examples() {
        let d7 = InertiaType::dihedral(7, 1).unwrap();
        let z7 = InertiaType::cyclic(7, 1).unwrap();
        let z49 = InertiaType::cyclic(7, 2).unwrap();
        assert!(is_admissible(&d7, &seq(&[(3, 2)])).unwrap().admissible);

        let v = is_admissible(&z7, &seq(&[(7, 1)])).unwrap();
        assert!(!v.admissible);
        let f = v.first_failure().unwrap();
        assert_eq!(f.condition, Condition::JumpGrowth);
        assert!(f.witness.as_ref().unwrap().contains("m*u_1 = 7"));

        let v = is_admissible(&d7, &seq(&[(1, 1)])).unwrap();
        assert_eq!(v.first_failure().unwrap().condition, Condition::TameAction);
        assert!(v.first_failure().unwrap().witness.as_ref().unwrap().contains("gcd(2, 2) = 2"));

        assert!(is_admissible(&z49, &seq(&[(1, 1), (7, 1)])).unwrap().admissible);
    }

    #[test]
    fn integrality_failure() {
        let z7 = InertiaType::cyclic(7, 1).unwrap();
        let v = is_admissible(&z7, &seq(&[(1, 2)])).unwrap();
        assert_eq!(v.first_failure().unwrap().condition, Condition::Integrality);
    }

    #[test]
    fn growth_and_residue() {
        let z49 = InertiaType::cyclic(7, 2).unwrap();
        // 10 < 7·2 = 14.
        assert!(!is_admissible(&z49, &seq(&[(2, 1), (10, 1)])).unwrap().admissible);
        // 21 > 14 but divisible by 7.
        assert!(!is_admissible(&z49, &seq(&[(2, 1), (21, 1)])).unwrap().admissible);
        assert!(is_admissible(&z49, &seq(&[(2, 1), (15, 1)])).unwrap().admissible);
        let d49 = InertiaType::dihedral(7, 2).unwrap();
        // 2u_2 = 8 is even while 2u_1 = 1 is odd.
        let v = is_admissible(&d49, &seq(&[(1, 2), (4, 1)])).unwrap();
        assert!(!v.conditions[3].holds);
        assert!(is_admissible(&d49, &seq(&[(1, 2), (7, 2)])).unwrap().admissible);
    }

    #[test]
    fn length_mismatch() {
        let z49 = InertiaType::cyclic(7, 2).unwrap();
        assert!(matches!(is_admissible(&z49, &seq(&[(1, 1)])), Err(Error::Argument(_))));
    }

    #[test]
    fn order() {
        assert!(leq(&seq(&[(3, 2)]), &seq(&[(5, 2)])).unwrap());
        assert!(!leq(&seq(&[(3, 1)]), &seq(&[(2, 1)])).unwrap());
        assert!(leq(&seq(&[(1, 1), (7, 1)]), &seq(&[(1, 1), (7, 1)])).unwrap());
        assert!(leq(&seq(&[(1, 1)]), &seq(&[(1, 1), (7, 1)])).is_err());
    }

    #[test]
    fn compatibility() {
        let d7 = InertiaType::dihedral(7, 1).unwrap();
        let z7 = InertiaType::cyclic(7, 1).unwrap();
        let z49 = InertiaType::cyclic(7, 2).unwrap();
        assert!(deformation_compatible(&d7, &seq(&[(3, 2)]), &seq(&[(5, 2)])).unwrap());
        assert!(!deformation_compatible(&z7, &seq(&[(3, 1)]), &seq(&[(2, 1)])).unwrap());
        assert!(deformation_compatible(&z49, &seq(&[(1, 1), (7, 1)]), &seq(&[(2, 1), (15, 1)])).unwrap());
        assert!(matches!(deformation_compatible(&z7, &seq(&[(7, 1)]), &seq(&[(8, 1)])), Err(Error::Precondition(_))));
    }
}
