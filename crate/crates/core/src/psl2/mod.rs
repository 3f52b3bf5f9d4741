//! Group data of SL₂(ℓ) and PSL₂(ℓ) at an auxiliary prime `p ≠ ℓ`.

mod classes;
mod inertia;
mod matrix;
mod subgroups;

use num_bigint::BigInt;
use serde::Serialize;

pub use classes::{class_order, select_triple, ClassKind, ClassOrder, ClassTriple, ConjClass, RootsOfUnity};
pub use inertia::InertiaType;
pub use matrix::{Mat2, Psl2};
pub use subgroups::{verify_subgroup_claims, Claim, ClaimStatus, SubgroupReport, DEFAULT_SUBGROUP_BUDGET};

use crate::error::{Error, Result};
use crate::exactmath::{is_prime, vp, vp_u64};

/// Invariants of `PSL₂(ℓ)` relative to `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupParams {
    pub p: u64,
    pub ell: u64,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub order: BigInt,
    /// `v_p(ℓ² − 1)`, the exponent of the cyclic `p`-Sylow subgroup.
    pub a: u32,
    /// Order of normalizer mod centralizer of a `p`-Sylow; 1 if it is trivial.
    pub m_g: u32,
}

pub(crate) fn check_odd_prime(n: u64, name: &str) -> Result<()> {
    if n == 2 || !is_prime(n) {
        return Err(Error::Argument(format!("{name} = {n} is not an odd prime")));
    }
    Ok(())
}

pub fn group_params(p: u64, ell: u64) -> Result<GroupParams> {
    check_odd_prime(p, "p")?;
    check_odd_prime(ell, "l")?;
    if p == ell {
        return Err(Error::Argument(format!("p and l must differ (both {p})")));
    }
    let l = BigInt::from(ell);
    let order = &l * (&l * &l - 1u32) / 2u32;
    let a = vp(&(&l * &l - 1u32), p)?;
    let below = vp_u64(ell - 1, p)?;
    let above = vp_u64(ell + 1, p)?;
    if below + above != a || (below > 0 && above > 0) {
        return Err(Error::Invariant(format!("v_p(l-1) = {below}, v_p(l+1) = {above}, v_p(l^2-1) = {a}")));
    }
    let m_g = if a >= 1 { 2 } else { 1 };
    Ok(GroupParams { p, ell, order, a, m_g })
}

/// Cyclic `ℤ/pʳ` and dihedral `D_{pʳ}` for `1 ≤ r ≤ a`, cyclic ones first.
pub fn inertia_candidates(gp: &GroupParams) -> Vec<InertiaType> {
    let cyclic = (1..=gp.a).map(|r| InertiaType::cyclic(gp.p, r));
    let dihedral = (1..=gp.a).map(|r| InertiaType::dihedral(gp.p, r));
    cyclic.chain(dihedral).map(|i| i.expect("odd prime p")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_examples() {
        let g = group_params(7, 97).unwrap();
        assert_eq!(g.order, BigInt::from(456288));
        assert_eq!((g.a, g.m_g), (2, 2));
        let g = group_params(7, 13).unwrap();
        assert_eq!(g.order, BigInt::from(1092));
        assert_eq!((g.a, g.m_g), (1, 2));
        let g = group_params(7, 11).unwrap();
        assert_eq!(g.order, BigInt::from(660));
        assert_eq!((g.a, g.m_g), (0, 1));
    }

    #[test]
    fn params_errors() {
        assert!(matches!(group_params(7, 7), Err(Error::Argument(_))));
        assert!(group_params(2, 7).is_err());
        assert!(group_params(7, 15).is_err());
    }

    #[test]
    fn candidates() {
        let names =
            |p, l| inertia_candidates(&group_params(p, l).unwrap()).iter().map(|i| i.name()).collect::<Vec<_>>();
        assert_eq!(names(7, 97), ["Z/7", "Z/49", "D_7", "D_49"]);
        assert_eq!(names(7, 13), ["Z/7", "D_7"]);
        assert!(names(7, 11).is_empty());
    }

    #[test]
    fn exactly_one_torus_carries_p() {
        for p in [3u64, 5, 7, 11, 13] {
            for ell in (3..400).filter(|&l| is_prime(l) && l != p) {
                let g = group_params(p, ell).unwrap();
                let lo = vp_u64(ell - 1, p).unwrap();
                let hi = vp_u64(ell + 1, p).unwrap();
                assert_eq!(lo + hi, g.a);
                assert!(lo == 0 || hi == 0);
            }
        }
    }
}
