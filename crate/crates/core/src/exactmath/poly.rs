use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::integer::is_prime;
use crate::error::{Error, Result};

/// Univariate polynomial over 𝔽_p, coefficients low degree first with the
/// top coefficient nonzero. The zero polynomial has no coefficients and
/// degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPolynomial {
    pub fn new(p: u64, coeffs: Vec<i64>) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::Argument(format!("{p} is not a supported prime")));
        }
        let coeffs = coeffs.into_iter().map(|c| c.rem_euclid(p as i64) as u64).collect();
        Ok(Self::from_residues(p, coeffs))
    }

    pub(crate) fn from_residues(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    /// `c·x^k`.
    pub fn monomial(p: u64, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c % p;
        Self::from_residues(p, coeffs)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree −∞ of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, _)| k)
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.p;
        Self::from_residues(p, self.coeffs.iter().map(|&a| a * (c % p) % p).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::monomial(self.p, 1, 0);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `w ↦ w^p − w`, the Artin–Schreier operator.
    pub fn wp(&self) -> Self {
        // Over 𝔽_p the Frobenius acts only on exponents.
        let p = self.p as usize;
        let mut frob = vec![0; self.coeffs.len().saturating_sub(1) * p + 1];
        for k in self.support() {
            frob[k * p] = self.coeffs[k];
        }
        &Self::from_residues(self.p, frob) - self
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.p, o.p, "characteristic mismatch");
    }
}

impl Add for &FpPolynomial {
    type Output = FpPolynomial;
    fn add(self, o: &FpPolynomial) -> FpPolynomial {
        self.check(o);
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n).map(|k| (self.coeff(k) + o.coeff(k)) % self.p).collect();
        FpPolynomial::from_residues(self.p, c)
    }
}

impl Neg for &FpPolynomial {
    type Output = FpPolynomial;
    fn neg(self) -> FpPolynomial {
        let p = self.p;
        FpPolynomial::from_residues(p, self.coeffs.iter().map(|&c| (p - c) % p).collect())
    }
}

impl Sub for &FpPolynomial {
    type Output = FpPolynomial;
    fn sub(self, o: &FpPolynomial) -> FpPolynomial {
        self + &(-o)
    }
}

impl Mul for &FpPolynomial {
    type Output = FpPolynomial;
    fn mul(self, o: &FpPolynomial) -> FpPolynomial {
        self.check(o);
        if self.is_zero() || o.is_zero() {
            return FpPolynomial::zero(self.p);
        }
        let p = self.p;
        let mut c = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % p;
            }
        }
        FpPolynomial::from_residues(p, c)
    }
}

impl fmt::Debug for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in self.support().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = self.coeffs[k];
            match (c, k) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (c, 1) => write!(f, "{c}x")?,
                (1, k) => write!(f, "x^{k}")?,
                (c, k) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Artin–Schreier reduction of a polynomial in `x` over 𝔽_p.
///
/// Returns the representative of `g + ℘(𝔽_p[x])` supported on the constant
/// term and exponents prime to `p`: every monomial `c·x^{kp}` (k ≥ 1) is
/// replaced by `c^{1/p}·x^k = c·x^k`, from the top degree down so that
/// cascades (`x^{p²} → x^p → x`) resolve in one pass.
pub fn as_reduce(g: &FpPolynomial) -> Result<FpPolynomial> {
    let p = g.p;
    if p == 2 {
        return Err(Error::Argument("Artin-Schreier reduction needs an odd prime".into()));
    }
    let mut c = g.coeffs.clone();
    let p = p as usize;
    for k in (1..c.len()).rev() {
        if k % p == 0 && c[k] != 0 {
            let a = c[k];
            c[k] = 0;
            c[k / p] = (c[k / p] + a) % g.p;
        }
    }
    Ok(FpPolynomial::from_residues(g.p, c))
}
