use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;

use super::TowerAction;
use crate::error::{Error, Result};
use crate::exactmath::{is_prime, FpPolynomial};
use crate::psl2::InertiaType;

/// Defining data of an explicit tower: `p`, the tame degree `m`, the
/// polynomials `x_1, …, x_r` in `x`, and the common residue class of their
/// monomial degrees mod `m`.
///
/// Only structural facts are enforced here; [`validate_spec`] checks the
/// degree conditions and reports every violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    p: u64,
    m: u64,
    residue_class: u64,
    polys: Vec<FpPolynomial>,
}

impl TowerSpec {
    pub fn new(p: u64, m: u64, residue_class: u64, polys: Vec<FpPolynomial>) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::Argument(format!("p = {p} is not an odd prime")));
        }
        if m == 0 {
            return Err(Error::Argument("m must be positive".into()));
        }
        if polys.is_empty() {
            return Err(Error::Argument("a tower needs at least one layer".into()));
        }
        if let Some(x) = polys.iter().find(|x| x.characteristic() != p) {
            return Err(Error::Argument(format!("polynomial {x} is not over F_{p}")));
        }
        Ok(Self { p, m, residue_class: residue_class % m, polys })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn r(&self) -> usize {
        self.polys.len()
    }

    pub fn residue_class(&self) -> u64 {
        self.residue_class
    }

    pub fn polys(&self) -> &[FpPolynomial] {
        &self.polys
    }

    pub(crate) fn with_polys(&self, polys: Vec<FpPolynomial>) -> Self {
        Self { polys, ..self.clone() }
    }

    /// Order of `ζ^j` for `ζ` a primitive `m`-th root of unity.
    pub fn action_order(&self) -> u64 {
        self.m / self.m.gcd(&self.residue_class)
    }

    pub fn action(&self) -> TowerAction {
        TowerAction {
            m: self.m,
            zeta_exponent: self.residue_class,
            m_i: self.action_order(),
            sigma_order: self.p.pow(self.r() as u32),
        }
    }

    /// The inertia group `ℤ/pʳ ⋊ ℤ/m` acting on the tower.
    pub fn inertia(&self) -> Result<InertiaType> {
        InertiaType::new(self.p, self.r() as u32, self.m, self.action_order())
    }

    /// Parses the text record
    ///
    /// ```text
    /// p m r residue_class
    /// c_0 c_1 … c_d        (x_1, low degree first)
    /// …                    (x_2 … x_r; "0" for the zero polynomial)
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| Error::Parse("empty tower file".into()))?;
        let nums = parse_fields(header, "header")?;
        let [p, m, r, residue] = nums[..] else {
            return Err(Error::Parse(format!("header needs 4 fields (p m r residue_class), got {header:?}")));
        };
        if r == 0 || r > 64 {
            return Err(Error::Parse(format!("unsupported layer count r = {r}")));
        }
        if p == 2 || !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Parse(format!("p = {p} is not an odd prime")));
        }
        let mut polys = Vec::with_capacity(r as usize);
        for i in 1..=r {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing coefficient line for x_{i}")))?;
            let coeffs = parse_fields(line, &format!("x_{i}"))?;
            if let Some(c) = coeffs.iter().find(|&&c| c >= p) {
                return Err(Error::Parse(format!("coefficient {c} of x_{i} is not a residue mod {p}")));
            }
            polys.push(FpPolynomial::from_residues(p, coeffs));
        }
        if let Some(extra) = lines.find(|l| !l.trim().is_empty()) {
            return Err(Error::Parse(format!("unexpected trailing line {extra:?}")));
        }
        if m == 0 || residue >= m {
            return Err(Error::Parse(format!("residue class {residue} is not in [0, m) for m = {m}")));
        }
        Self::new(p, m, residue, polys).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Canonical text form; `parse(format(t)) == t` and formatting a parsed
    /// canonical record reproduces it byte for byte.
    pub fn format(&self) -> String {
        let mut out = format!("{} {} {} {}\n", self.p, self.m, self.r(), self.residue_class);
        for x in &self.polys {
            if x.is_zero() {
                out.push_str("0\n");
                continue;
            }
            let coeffs: Vec<String> = x.coeffs().iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "{}", coeffs.join(" "));
        }
        out
    }
}

fn parse_fields(line: &str, what: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|f| f.parse::<u64>().map_err(|_| Error::Parse(format!("bad number {f:?} in {what}"))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecVerdict {
    pub valid: bool,
    pub residue_class: u64,
    pub violations: Vec<String>,
}

/// Checks that `m` is prime to `p`, `x_1 ≠ 0`, that every monomial degree
/// is prime to `p` and `≡ residue_class (mod m)`, and that the action of
/// `ζ^j` has order dividing `p − 1`.
pub fn validate_spec(tower: &TowerSpec) -> SpecVerdict {
    let (p, m, j) = (tower.p, tower.m, tower.residue_class);
    let mut violations = Vec::new();
    if m % p == 0 {
        violations.push(format!("m = {m} is divisible by p = {p}"));
    }
    if tower.polys[0].is_zero() {
        violations.push("x_1 is zero".into());
    }
    for (i, x) in tower.polys.iter().enumerate() {
        for k in x.support() {
            let k = k as u64;
            if k.is_multiple_of(p) {
                violations.push(format!("x_{}: degree {k} is divisible by p = {p}", i + 1));
            }
            if k % m != j {
                violations.push(format!("x_{}: degree {k} is not {j} mod {m}", i + 1));
            }
        }
    }
    let m_i = tower.action_order();
    if (p - 1) % m_i != 0 {
        violations.push(format!("action order m_I = {m_i} does not divide p - 1 = {}", p - 1));
    }
    SpecVerdict { valid: violations.is_empty(), residue_class: j, violations }
}
