//! Explicit `ℤ/pʳ ⋊ ℤ/m`-extensions of `k((u))`:
//!
//! ```text
//! x^m = 1/u,    y_i^p − y_i = f_i(y_1, …, y_{i−1}, x_1, …, x_i)
//! ```
//!
//! with each `x_i ∈ 𝔽_p[x]` supported on degrees prime to `p` in a common
//! residue class mod `m`.

mod deform;
mod oracle;
mod spec;

use serde::Serialize;

pub use deform::{deform, verify_deformation, DeformationVerdict};
pub use oracle::{oracle_detail, oracle_jumps, OracleJumps, WittCarry};
pub use spec::{validate_spec, SpecVerdict, TowerSpec};

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::ramification::JumpSequence;

/// How the inertia group acts on the tower's generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerAction {
    /// `c(x)/x = ζ` for a primitive `m`-th root of unity `ζ`.
    pub m: u64,
    /// `c(x_i)/x_i = c(y_i)/y_i = ζ^j` with `j` the residue class.
    pub zeta_exponent: u64,
    /// Order of `ζ^j`.
    pub m_i: u64,
    /// `σ` of order `pʳ` acts by `y_i ↦ y_i + f_i(y_1, …, y_{i−1}, 1, 0, …, 0)`.
    pub sigma_order: u64,
}

/// Upper jumps from the degree recurrence
/// `u_1 = deg(x_1)/m`, `u_i = max(deg(x_i)/m, p·u_{i−1})`.
///
/// A zero `x_i` contributes only the `p·u_{i−1}` branch.
pub fn predicted_jumps(tower: &TowerSpec) -> Result<JumpSequence> {
    let verdict = validate_spec(tower);
    if !verdict.valid {
        return Err(Error::Precondition(format!("invalid tower: {}", verdict.violations.join("; "))));
    }
    let m = Rational::from_integer(tower.m().into());
    let p = Rational::from_integer(tower.p().into());
    let mut jumps: Vec<Rational> = Vec::with_capacity(tower.r());
    for x in tower.polys() {
        let own = x.degree().map(|d| Rational::from_integer(d.into()) / &m);
        let next = match (jumps.last(), own) {
            (None, Some(u)) => u,
            (Some(prev), None) => prev * &p,
            (Some(prev), Some(u)) => u.max(prev * &p),
            (None, None) => unreachable!("validated x_1 != 0"),
        };
        jumps.push(next);
    }
    JumpSequence::new(jumps)
}
