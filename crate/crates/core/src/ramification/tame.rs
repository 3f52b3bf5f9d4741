use num_integer::Integer;
use serde::Serialize;

use super::{is_admissible, JumpSequence};
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};
use crate::psl2::{group_params, inertia_candidates, InertiaType};

/// Pulls the extension back along a tame cover of degree `m/m'` totally
/// ramified at the branch point.
///
/// Inertia becomes `ℤ/pʳ ⋊ ℤ/m'`: the subgroup of index `m/m'` in the tame
/// part, whose action has order `m_I / gcd(m_I, m/m')`. Upper jumps scale by
/// `m/m'`; the `ℤ/pʳ`-subextension itself is unchanged.
pub fn tame_base_change(
    inertia: &InertiaType,
    jumps: &JumpSequence,
    new_m: u64,
) -> Result<(InertiaType, JumpSequence)> {
    if new_m == 0 || !inertia.m.is_multiple_of(new_m) {
        return Err(Error::Argument(format!("m' = {new_m} does not divide m = {}", inertia.m)));
    }
    let verdict = is_admissible(inertia, jumps)?;
    if !verdict.admissible {
        return Err(Error::Precondition(format!("{jumps} is not admissible for {inertia}: {}", verdict.summary())));
    }
    let degree = inertia.m / new_m;
    let m_i = inertia.m_i / inertia.m_i.gcd(&degree);
    let pulled = InertiaType::new(inertia.p, inertia.r, new_m, m_i)?;
    Ok((pulled, jumps.scaled(&Rational::from_integer(degree.into()))))
}

/// A sequence `Σ` above which every admissible filtration is realized, when
/// one is known explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "jumps", rename_all = "lowercase")]
pub enum BaseSigma {
    Known(JumpSequence),
    /// Existence is known but no explicit sequence is.
    Unknown,
}

/// Explicit base sequences for one-point `PSL₂(ℓ)`-covers in characteristic
/// `p ≥ 7`: `(3/2)` for `D_p`; for `ℤ/p`, `(2)` when `ℓ ≡ ±1 (mod 8)` and
/// `(3)` otherwise. Other candidate inertia groups give [`BaseSigma::Unknown`].
pub fn base_sigma(inertia: &InertiaType, ell: u64) -> Result<BaseSigma> {
    let gp = group_params(inertia.p, ell)?;
    if !inertia_candidates(&gp).contains(inertia) {
        return Err(Error::Argument(format!("{inertia} is not a candidate inertia group of PSL2({ell})")));
    }
    if inertia.p < 7 {
        return Err(Error::Hypothesis(format!("needs p >= 7, got p = {}", inertia.p)));
    }
    let known = |q: Rational| Ok(BaseSigma::Known(JumpSequence::new(vec![q]).expect("positive")));
    match (inertia.r, inertia.m) {
        (1, 2) => known(rat(3, 2)),
        (1, 1) if ell % 8 == 1 || ell % 8 == 7 => known(rat(2, 1)),
        (1, 1) => known(rat(3, 1)),
        _ => Ok(BaseSigma::Unknown),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(q: Rational) -> JumpSequence {
        JumpSequence::new(vec![q]).unwrap()
    }

    #[test]
    fn base_change_examples() {
        let d7 = InertiaType::dihedral(7, 1).unwrap();
        let z7 = InertiaType::cyclic(7, 1).unwrap();
        assert_eq!(tame_base_change(&d7, &one(rat(3, 2)), 1).unwrap(), (z7, one(rat(3, 1))));
        assert_eq!(tame_base_change(&d7, &one(rat(3, 2)), 2).unwrap(), (d7, one(rat(3, 2))));
        assert_eq!(tame_base_change(&d7, &one(rat(5, 2)), 1).unwrap(), (z7, one(rat(5, 1))));
        assert!(tame_base_change(&d7, &one(rat(3, 2)), 3).is_err());
        assert!(tame_base_change(&d7, &one(rat(1, 1)), 1).is_err());
    }

    #[test]
    fn base_change_action_order() {
        // ℤ/7 ⋊ ℤ/6 with faithful action, pulled back to m' = 3: action order 3.
        let i = InertiaType::new(7, 1, 6, 6).unwrap();
        let (j, s) = tame_base_change(&i, &one(rat(1, 6)), 3).unwrap();
        assert_eq!((j.m, j.m_i), (3, 3));
        assert_eq!(s, one(rat(1, 3)));
        assert!(is_admissible(&j, &s).unwrap().admissible);
    }

    #[test]
    fn base_sigma_examples() {
        let d7 = InertiaType::dihedral(7, 1).unwrap();
        let z7 = InertiaType::cyclic(7, 1).unwrap();
        assert_eq!(base_sigma(&d7, 97).unwrap(), BaseSigma::Known(one(rat(3, 2))));
        assert_eq!(base_sigma(&z7, 97).unwrap(), BaseSigma::Known(one(rat(2, 1))));
        assert_eq!(base_sigma(&z7, 13).unwrap(), BaseSigma::Known(one(rat(3, 1))));
        assert_eq!(base_sigma(&InertiaType::cyclic(7, 2).unwrap(), 97).unwrap(), BaseSigma::Unknown);
        assert_eq!(base_sigma(&InertiaType::dihedral(7, 2).unwrap(), 97).unwrap(), BaseSigma::Unknown);
    }

    #[test]
    fn base_sigma_errors() {
        let z49 = InertiaType::cyclic(7, 2).unwrap();
        assert!(matches!(base_sigma(&z49, 13), Err(Error::Argument(_))));
        let z5 = InertiaType::cyclic(5, 1).unwrap();
        assert!(matches!(base_sigma(&z5, 11), Err(Error::Hypothesis(_))));
    }
}
