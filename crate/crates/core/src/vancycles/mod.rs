//! Constraints on stable reduction: the vanishing-cycles equation for étale
//! tails, what a tail's invariant says about inertia, and the generation
//! arguments used to rule out configurations.

mod group;
mod tails;

use serde::Serialize;

pub use group::{branch_cycle_feasible, generation_obstruction, SemidirectGroup, MAX_CONCRETE_ORDER};
pub use tails::{solve_tail_configs, TailConfig, TailDatum, TailKind};

use crate::error::{Error, Result};
use crate::exactmath::{vp_u64, Rational};
use crate::psl2::ClassTriple;

/// Branching indices `(e_1, e_2, e_3)` with their `p`-valuations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchData {
    pub p: u64,
    pub indices: [u64; 3],
    pub valuations: [u32; 3],
}

impl BranchData {
    pub fn new(p: u64, indices: [u64; 3]) -> Result<Self> {
        let mut valuations = [0; 3];
        for (v, &e) in valuations.iter_mut().zip(&indices) {
            *v = vp_u64(e, p)?;
        }
        Ok(Self { p, indices, valuations })
    }

    /// The projective element orders of a class triple.
    pub fn from_triple(p: u64, triple: &ClassTriple) -> Result<Self> {
        Self::new(p, triple.psl2_indices)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InertiaInference {
    /// All `r ≥ 1` with `p^{r−1}/m_G ≤ σ`.
    pub allowed_r: Vec<u32>,
    /// False when `σ` is not an integer: by Hasse–Arf an abelian inertia
    /// group has integral upper jumps.
    pub abelian_possible: bool,
    /// The bound `σ ≥ p^{r−1}/m_G` is only established for `m_G = 2`.
    pub extrapolated: bool,
}

/// What a tail with effective invariant `σ` allows for the inertia group
/// `ℤ/pʳ ⋊ ℤ/m` above it.
pub fn infer_inertia(sigma: &Rational, p: u64, m_g: u64) -> Result<InertiaInference> {
    if *sigma <= Rational::from_integer(0.into()) {
        return Err(Error::Argument(format!("sigma = {sigma} must be positive")));
    }
    if m_g == 0 || p < 2 {
        return Err(Error::Argument("need p >= 2 and m_G >= 1".into()));
    }
    let mut allowed_r = Vec::new();
    let mut pk = Rational::from_integer(1.into());
    let m = Rational::from_integer(m_g.into());
    let mut r = 1;
    while &pk / &m <= *sigma {
        allowed_r.push(r);
        r += 1;
        pk *= Rational::from_integer(p.into());
    }
    Ok(InertiaInference { allowed_r, abelian_possible: sigma.is_integer(), extrapolated: m_g != 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::psl2::select_triple;

    #[test]
    fn inference_examples() {
        let i = infer_inertia(&rat(3, 2), 7, 2).unwrap();
        assert_eq!(i.allowed_r, [1]);
        assert!(!i.abelian_possible);
        assert!(!i.extrapolated);
        let i = infer_inertia(&rat(3, 2), 3, 2).unwrap();
        assert_eq!(i.allowed_r, [1, 2]);
        assert!(!i.abelian_possible);
        let i = infer_inertia(&rat(2, 1), 7, 2).unwrap();
        assert_eq!(i.allowed_r, [1]);
        assert!(i.abelian_possible);
        assert!(infer_inertia(&rat(2, 1), 7, 3).unwrap().extrapolated);
        assert!(infer_inertia(&rat(0, 1), 7, 2).is_err());
    }

    #[test]
    fn small_sigma_allows_nothing() {
        assert!(infer_inertia(&rat(1, 3), 5, 2).unwrap().allowed_r.is_empty());
    }

    #[test]
    fn branch_data_from_triple() {
        let t = select_triple(7, 97).unwrap();
        let b = BranchData::from_triple(7, &t).unwrap();
        assert_eq!(b.indices, t.psl2_indices);
        assert_eq!(b.valuations, [0, 1, 2]);
    }
}
