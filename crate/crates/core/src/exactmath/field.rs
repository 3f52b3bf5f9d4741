use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::integer::{is_prime, mod_pow};
use crate::error::{Error, Result};

/// 𝔽_q for q = p or q = p², with 𝔽_{p²} realized as 𝔽_p[s]/(s² − n) where
/// `n` is the least quadratic nonresidue mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaloisField {
    p: u64,
    degree: u8,
    nonresidue: u64,
}

impl GaloisField {
    pub fn prime(p: u64) -> Result<Self> {
        check_char(p)?;
        Ok(Self { p, degree: 1, nonresidue: 0 })
    }

    /// The quadratic extension of 𝔽_p. Requires `p` odd.
    pub fn quadratic(p: u64) -> Result<Self> {
        check_char(p)?;
        if p == 2 {
            return Err(Error::Unsupported("quadratic extension of F_2".into()));
        }
        let nonresidue = (2..p).find(|&n| mod_pow(n, (p - 1) / 2, p) == p - 1).expect("odd prime has a nonresidue");
        Ok(Self { p, degree: 2, nonresidue })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    /// The fixed `n` with 𝔽_{p²} = 𝔽_p[s]/(s² − n); zero for prime fields.
    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.degree as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: *self, c: [0, 0] }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: *self, c: [1 % self.p, 0] }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement { field: *self, c: [n.rem_euclid(self.p as i64) as u64, 0] }
    }

    /// `a + b·s`; for prime fields `b` must be zero.
    pub fn element(&self, a: u64, b: u64) -> FieldElement {
        debug_assert!(self.degree == 2 || b.is_multiple_of(self.p));
        FieldElement { field: *self, c: [a % self.p, b % self.p] }
    }

    /// Every element, ordered by `(b, a)` lexicographically.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let p = self.p;
        let top = if self.degree == 2 { p } else { 1 };
        (0..top).flat_map(move |b| (0..p).map(move |a| self.element(a, b)))
    }

    /// The least generator of the multiplicative group in [`elements`](Self::elements) order.
    pub fn primitive_element(&self) -> FieldElement {
        let order = self.size() - 1;
        let primes = prime_factors(order);
        self.elements()
            .filter(|x| !x.is_zero())
            .find(|x| primes.iter().all(|&q| !x.pow(order / q).is_one()))
            .expect("finite field has a primitive element")
    }
}

fn check_char(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::Argument(format!("{p} is not prime")));
    }
    if p >= 1 << 31 {
        return Err(Error::Unsupported(format!("characteristic {p} exceeds 2^31")));
    }
    Ok(())
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: GaloisField,
    c: [u64; 2],
}

impl FieldElement {
    pub fn field(&self) -> GaloisField {
        self.field
    }

    pub fn coords(&self) -> [u64; 2] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c == [0, 0]
    }

    pub fn is_one(&self) -> bool {
        self.c == [1, 0]
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.field.one();
        let mut b = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.field.size() - 2))
        }
    }

    /// The unique `p`-th root, via the inverse Frobenius `c ↦ c^{p^{e−1}}`.
    pub fn pth_root(&self) -> Self {
        match self.field.degree {
            1 => *self,
            _ => self.pow(self.field.p),
        }
    }

    /// Multiplicative order; `None` for zero.
    pub fn order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut ord = self.field.size() - 1;
        for q in prime_factors(ord) {
            while ord.is_multiple_of(q) && self.pow(ord / q).is_one() {
                ord /= q;
            }
        }
        Some(ord)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field, other.field, "field mismatch");
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.check(&o);
        let p = self.field.p;
        Self { field: self.field, c: [(self.c[0] + o.c[0]) % p, (self.c[1] + o.c[1]) % p] }
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        let p = self.field.p;
        Self { field: self.field, c: [(p - self.c[0]) % p, (p - self.c[1]) % p] }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.check(&o);
        let p = self.field.p;
        let [a, b] = self.c;
        let [c, d] = o.c;
        let n = self.field.nonresidue;
        // (a + bs)(c + ds) = (ac + n·bd) + (ad + bc)s
        let re = (a * c % p + n * (b * d % p)) % p;
        let im = (a * d % p + b * c % p) % p;
        Self { field: self.field, c: [re, im] }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree == 1 {
            write!(f, "{}", self.c[0])
        } else {
            write!(f, "{}+{}s", self.c[0], self.c[1])
        }
    }
}
