use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactmath::{FieldElement, GaloisField};
use crate::groups::FiniteGroup;

/// 2×2 matrix `[[a, b], [c, d]]` over a finite field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    pub fn identity(f: GaloisField) -> Self {
        Self { a: f.one(), b: f.zero(), c: f.zero(), d: f.one() }
    }

    pub fn diag(x: FieldElement, y: FieldElement) -> Self {
        let z = x.field().zero();
        Self { a: x, b: z, c: z, d: y }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn neg(&self) -> Self {
        Self { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn det(&self) -> FieldElement {
        self.a * self.d - self.b * self.c
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::identity(self.a.field());
        let mut b = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.a.field())
    }

    pub fn is_minus_identity(&self) -> bool {
        *self == Self::identity(self.a.field()).neg()
    }
}

/// PSL₂(ℓ) = SL₂(𝔽_ℓ)/{±1} with a precomputed Cayley table.
///
/// Each coset `{M, −M}` is represented by whichever of the two has the
/// lexicographically smaller entry tuple.
pub struct Psl2 {
    ell: u64,
    reps: Vec<[u64; 4]>,
    table: Vec<u32>,
    inverse: Vec<u32>,
    identity: usize,
}

impl Psl2 {
    pub fn new(ell: u64, budget: usize) -> Result<Self> {
        GaloisField::prime(ell)?;
        if ell == 2 {
            return Err(Error::Unsupported("PSL2(2)".into()));
        }
        let order = (ell * (ell * ell - 1) / 2) as usize;
        if order > budget {
            return Err(Error::Refused(format!("|PSL2({ell})| = {order} exceeds the subgroup budget {budget}")));
        }
        let l = ell;
        let canon = |m: [u64; 4]| {
            let neg = m.map(|x| (l - x) % l);
            m.min(neg)
        };
        let mut reps = Vec::with_capacity(order);
        let mut index = HashMap::with_capacity(order);
        for a in 0..l {
            for b in 0..l {
                for c in 0..l {
                    for d in 0..l {
                        if (a * d + l * l - b * c % l) % l != 1 {
                            continue;
                        }
                        let m = canon([a, b, c, d]);
                        if let std::collections::hash_map::Entry::Vacant(e) = index.entry(m) {
                            e.insert(reps.len());
                            reps.push(m);
                        }
                    }
                }
            }
        }
        debug_assert_eq!(reps.len(), order);
        let mul = |x: &[u64; 4], y: &[u64; 4]| {
            canon([
                (x[0] * y[0] + x[1] * y[2]) % l,
                (x[0] * y[1] + x[1] * y[3]) % l,
                (x[2] * y[0] + x[3] * y[2]) % l,
                (x[2] * y[1] + x[3] * y[3]) % l,
            ])
        };
        let mut table = vec![0u32; order * order];
        for (i, x) in reps.iter().enumerate() {
            for (j, y) in reps.iter().enumerate() {
                table[i * order + j] = index[&mul(x, y)] as u32;
            }
        }
        let identity = index[&canon([1, 0, 0, 1])];
        let mut inverse = vec![0u32; order];
        for i in 0..order {
            let j = (0..order).find(|&j| table[i * order + j] as usize == identity).unwrap();
            inverse[i] = j as u32;
        }
        Ok(Self { ell, reps, table, inverse, identity })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// The matrix entries `[a, b, c, d]` of the chosen coset representative.
    pub fn matrix(&self, x: usize) -> [u64; 4] {
        self.reps[x]
    }
}

impl FiniteGroup for Psl2 {
    fn order(&self) -> usize {
        self.reps.len()
    }
    fn identity(&self) -> usize {
        self.identity
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.reps.len() + b] as usize
    }
    fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psl2_orders() {
        assert_eq!(Psl2::new(5, 2000).unwrap().order(), 60);
        assert_eq!(Psl2::new(7, 2000).unwrap().order(), 168);
    }

    #[test]
    fn budget_guard() {
        assert!(matches!(Psl2::new(17, 2000), Err(Error::Refused(_))));
    }

    #[test]
    fn inverses() {
        let g = Psl2::new(7, 2000).unwrap();
        for x in 0..g.order() {
            assert_eq!(g.mul(x, g.inv(x)), g.identity());
        }
    }

    #[test]
    fn matrix_power() {
        let f = GaloisField::prime(13).unwrap();
        let z = f.primitive_element();
        let m = Mat2::diag(z, z.inverse().unwrap());
        assert!(m.pow(6).is_minus_identity());
        assert!(m.pow(12).is_identity());
        assert!(m.det().is_one());
    }
}
