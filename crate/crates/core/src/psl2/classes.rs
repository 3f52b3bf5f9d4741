use std::fmt;

use serde::{Serialize, Serializer};

use super::matrix::Mat2;
use super::{check_odd_prime, group_params};
use crate::error::{Error, Result};
use crate::exactmath::{gcd_u64, vp_u64, FieldElement, GaloisField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    /// Eigenvalues `ζ^{±i}` in 𝔽_ℓ (split torus, order dividing ℓ − 1).
    Split,
    /// Eigenvalues `ζ̃^{±i}` in 𝔽_{ℓ²} of norm 1 (nonsplit torus, order dividing ℓ + 1).
    Nonsplit,
}

/// A semisimple conjugacy class of SL₂(ℓ), `C(i)` or `C̃(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjClass {
    pub kind: ClassKind,
    pub index: u64,
}

impl ConjClass {
    pub fn split(index: u64) -> Self {
        Self { kind: ClassKind::Split, index }
    }

    pub fn nonsplit(index: u64) -> Self {
        Self { kind: ClassKind::Nonsplit, index }
    }

    /// `ℓ − 1` or `ℓ + 1`: the order of the torus the class lives in.
    pub fn torus_order(&self, ell: u64) -> u64 {
        match self.kind {
            ClassKind::Split => ell - 1,
            ClassKind::Nonsplit => ell + 1,
        }
    }

    pub fn validate(&self, ell: u64) -> Result<()> {
        let bound = self.torus_order(ell) / 2;
        if self.index == 0 || self.index >= bound {
            return Err(Error::Argument(format!(
                "class index {} outside 0 < i < {bound} for {self} at l = {ell}",
                self.index
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ConjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ClassKind::Split => write!(f, "C({})", self.index),
            ClassKind::Nonsplit => write!(f, "C~({})", self.index),
        }
    }
}

impl Serialize for ConjClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Fixed generators `ζ ∈ 𝔽_ℓ` of order ℓ − 1 and `ζ̃ ∈ 𝔽_{ℓ²}` of order ℓ + 1.
///
/// `ζ` is the least primitive root mod ℓ; `ζ̃ = ω^{ℓ−1}` for the least
/// primitive element `ω` of 𝔽_ℓ[s]/(s² − n).
#[derive(Debug, Clone, Copy)]
pub struct RootsOfUnity {
    pub ell: u64,
    pub zeta: FieldElement,
    pub zeta_tilde: FieldElement,
}

impl RootsOfUnity {
    pub fn new(ell: u64) -> Result<Self> {
        check_odd_prime(ell, "l")?;
        let f1 = GaloisField::prime(ell)?;
        let f2 = GaloisField::quadratic(ell)?;
        let zeta = f1.primitive_element();
        let zeta_tilde = f2.primitive_element().pow(ell - 1);
        Ok(Self { ell, zeta, zeta_tilde })
    }

    /// Standard representative in SL₂(𝔽_ℓ): `diag(ζ^i, ζ^{−i})` for split
    /// classes, multiplication by `ζ̃^i` on 𝔽_{ℓ²} = 𝔽_ℓ·1 ⊕ 𝔽_ℓ·s for
    /// nonsplit ones.
    pub fn representative(&self, cls: ConjClass) -> Mat2 {
        match cls.kind {
            ClassKind::Split => {
                let x = self.zeta.pow(cls.index);
                Mat2::diag(x, x.inverse().expect("unit"))
            }
            ClassKind::Nonsplit => {
                let f = GaloisField::prime(self.ell).expect("prime");
                let [a, b] = self.zeta_tilde.pow(cls.index).coords();
                let n = self.zeta_tilde.field().nonresidue();
                Mat2 { a: f.element(a, 0), b: f.element(n * b % self.ell, 0), c: f.element(b, 0), d: f.element(a, 0) }
            }
        }
    }

    /// The class as a diagonal matrix over 𝔽_{ℓ²}, where both tori split.
    pub fn diagonal_form(&self, cls: ConjClass) -> Mat2 {
        let f2 = self.zeta_tilde.field();
        let x = match cls.kind {
            ClassKind::Split => {
                let [a, _] = self.zeta.pow(cls.index).coords();
                f2.element(a, 0)
            }
            ClassKind::Nonsplit => self.zeta_tilde.pow(cls.index),
        };
        Mat2::diag(x, x.inverse().expect("unit"))
    }
}

/// Orders of an element of a class in SL₂(ℓ) and in PSL₂(ℓ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassOrder {
    pub sl2_order: u64,
    pub vp_order: u32,
    pub psl2_order: u64,
}

/// `(ℓ ∓ 1)/gcd(ℓ ∓ 1, i)`, its `p`-valuation, and the projective order.
///
/// The valuation is cross-checked against `max(0, v_p(ℓ ∓ 1) − v_p(i))`.
/// The projective order is halved exactly when `x^{e/2} = −1` on the
/// standard representative.
pub fn class_order(ell: u64, cls: ConjClass, p: u64) -> Result<ClassOrder> {
    check_odd_prime(ell, "l")?;
    check_odd_prime(p, "p")?;
    cls.validate(ell)?;
    let n = cls.torus_order(ell);
    let order = n / gcd_u64(n, cls.index);
    let vp_order = vp_u64(order, p)?;
    let predicted = vp_u64(n, p)?.saturating_sub(vp_u64(cls.index, p)?);
    if predicted != vp_order {
        return Err(Error::Invariant(format!(
            "v_p(ord) = {vp_order} but max(0, v_p({n}) - v_p({})) = {predicted}",
            cls.index
        )));
    }
    let roots = RootsOfUnity::new(ell)?;
    let rep = roots.representative(cls);
    let psl2_order = if order.is_multiple_of(2) && rep.pow(order / 2).is_minus_identity() { order / 2 } else { order };
    Ok(ClassOrder { sl2_order: order, vp_order, psl2_order })
}

/// Which torus carries the `p`-Sylow subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriplePattern {
    /// `v_p(ℓ − 1) = a`.
    SplitSylow,
    /// `v_p(ℓ + 1) = a`.
    NonsplitSylow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassTriple {
    pub classes: [ConjClass; 3],
    pub pattern: TriplePattern,
    /// Element orders in SL₂(ℓ): `e_i'`.
    pub sl2_indices: [u64; 3],
    /// Element orders in PSL₂(ℓ): `e_i`, each `e_i'` or `e_i'/2`.
    pub psl2_indices: [u64; 3],
    pub vp_chain: [u32; 3],
}

/// The class triple with `p`-valuations `(0, a − 1, a)` on its projective
/// element orders, for `a = v_p(ℓ² − 1) ≥ 2`.
pub fn select_triple(p: u64, ell: u64) -> Result<ClassTriple> {
    let gp = group_params(p, ell)?;
    let a = gp.a;
    if a < 2 {
        return Err(Error::Precondition(format!("v_p(l^2 - 1) = {a} < 2 for p = {p}, l = {ell}")));
    }
    if 2 * p + 4 >= ell - 1 {
        return Err(Error::Hypothesis(format!("2p + 4 < l - 1 fails: {} >= {}", 2 * p + 4, ell - 1)));
    }
    let (half_minus, half_plus) = ((ell - 1) / 2, ell.div_ceil(2));
    let (pattern, classes) = if vp_u64(ell - 1, p)? == a {
        (
            TriplePattern::SplitSylow,
            [ConjClass::nonsplit(half_plus - 1), ConjClass::split(half_minus - p), ConjClass::split(half_minus - 1)],
        )
    } else {
        (
            TriplePattern::NonsplitSylow,
            [ConjClass::split(half_minus - 1), ConjClass::nonsplit(half_plus - p), ConjClass::nonsplit(half_plus - 1)],
        )
    };
    let mut sl2_indices = [0; 3];
    let mut psl2_indices = [0; 3];
    let mut vp_chain = [0; 3];
    for (k, cls) in classes.iter().enumerate() {
        let o = class_order(ell, *cls, p)?;
        sl2_indices[k] = o.sl2_order;
        psl2_indices[k] = o.psl2_order;
        vp_chain[k] = vp_u64(o.psl2_order, p)?;
    }
    if vp_chain != [0, a - 1, a] {
        return Err(Error::Invariant(format!(
            "class triple {classes:?} has v_p chain {vp_chain:?}, expected [0, {}, {a}]",
            a - 1
        )));
    }
    Ok(ClassTriple { classes, pattern, sl2_indices, psl2_indices, vp_chain })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        let o = class_order(97, ConjClass::nonsplit(42), 7).unwrap();
        assert_eq!((o.sl2_order, o.vp_order), (7, 1));
        let o = class_order(97, ConjClass::nonsplit(48), 7).unwrap();
        assert_eq!((o.sl2_order, o.vp_order), (49, 2));
        let o = class_order(97, ConjClass::split(47), 7).unwrap();
        assert_eq!((o.sl2_order, o.vp_order, o.psl2_order), (96, 0, 48));
    }

    #[test]
    fn index_bounds() {
        assert!(class_order(97, ConjClass::split(48), 7).is_err());
        assert!(class_order(97, ConjClass::nonsplit(49), 7).is_err());
        assert!(class_order(97, ConjClass::split(0), 7).is_err());
    }

    #[test]
    fn triple_7_97() {
        let t = select_triple(7, 97).unwrap();
        assert_eq!(t.classes, [ConjClass::split(47), ConjClass::nonsplit(42), ConjClass::nonsplit(48)]);
        assert_eq!(t.psl2_indices, [48, 7, 49]);
        assert_eq!(t.sl2_indices, [96, 7, 49]);
        assert_eq!(t.vp_chain, [0, 1, 2]);
        assert_eq!(t.pattern, TriplePattern::NonsplitSylow);
    }

    #[test]
    fn triple_3_17() {
        // v_3(16) = 0 and v_3(18) = 2: the nonsplit torus carries the Sylow.
        let t = select_triple(3, 17).unwrap();
        assert_eq!(t.classes, [ConjClass::split(7), ConjClass::nonsplit(6), ConjClass::nonsplit(8)]);
        assert_eq!(t.psl2_indices, [8, 3, 9]);
        assert_eq!(t.vp_chain, [0, 1, 2]);
    }

    #[test]
    fn triple_needs_a_at_least_two() {
        assert!(matches!(select_triple(7, 13), Err(Error::Precondition(_))));
    }

    #[test]
    fn representatives_lie_in_sl2() {
        let roots = RootsOfUnity::new(13).unwrap();
        for i in 1..7 {
            assert!(roots.representative(ConjClass::nonsplit(i)).det().is_one());
        }
        assert_eq!(roots.zeta_tilde.order(), Some(14));
        assert_eq!(roots.zeta.order(), Some(12));
    }
}
