use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{gcd_u64, is_prime};

/// An abstract inertia group `ℤ/pʳ ⋊ ℤ/m` with `p ∤ m`, where the tame
/// generator acts on `ℤ/pʳ` through a character of order `m_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct InertiaType {
    pub p: u64,
    pub r: u32,
    pub m: u64,
    #[serde(rename = "m_I")]
    pub m_i: u64,
}

impl InertiaType {
    pub fn new(p: u64, r: u32, m: u64, m_i: u64) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::Argument(format!("p = {p} is not an odd prime")));
        }
        if r == 0 {
            return Err(Error::Argument("r must be positive".into()));
        }
        if m == 0 || m.is_multiple_of(p) {
            return Err(Error::Argument(format!("m = {m} must be positive and prime to p = {p}")));
        }
        if m_i == 0 || !gcd_u64(m, p - 1).is_multiple_of(m_i) {
            return Err(Error::Argument(format!("m_I = {m_i} must divide gcd(m, p - 1) = {}", gcd_u64(m, p - 1))));
        }
        Ok(Self { p, r, m, m_i })
    }

    /// `ℤ/pʳ`.
    pub fn cyclic(p: u64, r: u32) -> Result<Self> {
        Self::new(p, r, 1, 1)
    }

    /// `D_{pʳ}` of order `2pʳ`.
    pub fn dihedral(p: u64, r: u32) -> Result<Self> {
        Self::new(p, r, 2, 2)
    }

    pub fn p_part(&self) -> u64 {
        self.p.pow(self.r)
    }

    pub fn order(&self) -> u64 {
        self.p_part() * self.m
    }

    pub fn is_abelian(&self) -> bool {
        self.m_i == 1
    }

    /// `Z/49`, `D_7`, or the generic `Z/7^2 x| Z/6 (m_I=3)`.
    pub fn name(&self) -> String {
        match (self.m, self.m_i) {
            (1, _) => format!("Z/{}", self.p_part()),
            (2, 2) => format!("D_{}", self.p_part()),
            _ => format!("Z/{}^{} x| Z/{} (m_I={})", self.p, self.r, self.m, self.m_i),
        }
    }
}

impl fmt::Display for InertiaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
