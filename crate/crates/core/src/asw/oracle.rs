//! Conductor computation for towers of length ≤ 2, directly from the
//! Artin–Schreier–Witt equations over `K' = k((1/x))`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;

use super::TowerSpec;
use crate::error::{Error, Result};
use crate::exactmath::{mod_pow, FpPolynomial};
use crate::psl2::InertiaType;
use crate::ramification::{upper_from_lower, JumpSequence};

/// The length-2 Witt addition carry
/// `C(a, b) = (a^p + b^p − (a + b)^p)/p = Σ_{k=1}^{p−1} c_k·a^k·b^{p−k}`,
/// reduced mod `p`. The second equation of the tower is
/// `y_2^p − y_2 = x_2 + C(y_1, x_1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WittCarry {
    pub p: u64,
    /// `c_1, …, c_{p−1}`.
    pub coeffs: Vec<u64>,
}

impl WittCarry {
    pub fn new(p: u64) -> Self {
        let pb = BigInt::from(p);
        let coeffs = (1..p)
            .map(|k| {
                let c: BigInt = -(binomial(pb.clone(), BigInt::from(k)) / &pb);
                let r: BigInt = ((c % &pb) + &pb) % &pb;
                u64::try_from(r).expect("residue fits")
            })
            .collect();
        Self { p, coeffs }
    }

    /// Evaluates `C(a, b)` on polynomials.
    pub fn eval(&self, a: &FpPolynomial, b: &FpPolynomial) -> FpPolynomial {
        let p = self.p as u32;
        let mut acc = FpPolynomial::zero(self.p);
        for (k, &c) in (1..p).zip(&self.coeffs) {
            acc = &acc + &(&a.pow(k) * &b.pow(p - k)).scale(c);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleJumps {
    /// Lower jumps over `k((x))`, which equal those over `k((u))`.
    pub lower: JumpSequence,
    pub upper: JumpSequence,
}

/// Upper jumps of a tower with `r ≤ 2`, computed from valuations alone.
///
/// Accepts right-hand sides that are not yet reduced (degrees divisible by
/// `p`, constants); the reduction is part of the computation.
pub fn oracle_jumps(tower: &TowerSpec) -> Result<JumpSequence> {
    oracle_detail(tower).map(|o| o.upper)
}

pub fn oracle_detail(tower: &TowerSpec) -> Result<OracleJumps> {
    let (p, m) = (tower.p(), tower.m());
    if tower.r() > 2 {
        return Err(Error::Unsupported(format!("oracle covers r <= 2, got r = {}", tower.r())));
    }
    if m % p == 0 {
        return Err(Error::Precondition(format!("m = {m} is divisible by p = {p}")));
    }
    let (x1, w) = reduce_with_shift(&tower.polys()[0]);
    let d = match x1.degree() {
        Some(d) if d > 0 => d,
        _ => return Err(Error::Precondition("first layer is unramified after reduction".into())),
    };
    let mut lower = vec![d as i64];
    if tower.r() == 2 {
        let h2 = second_layer_conductor(p, &tower.polys()[0], &x1, &w, &tower.polys()[1])?;
        lower.push(h2);
    }
    let lower = JumpSequence::from_integers(lower)?;
    let inertia = InertiaType::new(p, tower.r() as u32, m, 1)?;
    let upper = upper_from_lower(&inertia, &lower)?;
    Ok(OracleJumps { lower, upper })
}

/// Writes `g = g' + w^p − w` with `g'` free of monomials `x^{kp}`, `k ≥ 1`.
fn reduce_with_shift(g: &FpPolynomial) -> (FpPolynomial, FpPolynomial) {
    let p = g.characteristic();
    let mut g = g.clone();
    let mut w = FpPolynomial::zero(p);
    let Some(top) = g.degree() else { return (g, w) };
    for k in (1..=top).rev().filter(|k| k % p as usize == 0) {
        let c = g.coeff(k);
        if c != 0 {
            let s = FpPolynomial::monomial(p, c, k / p as usize);
            g = &g - &s.wp();
            w = &w + &s;
        }
    }
    (g, w)
}

/// Elements of `M = K'(y)`, `y^p − y = x_1'`, as `Σ_j g_j(x)·y^j`
/// with Laurent polynomials `g_j`, `0 ≤ j < p`.
struct LayerElement {
    p: u64,
    d: i64,
    terms: Vec<BTreeMap<i64, u64>>,
}

impl LayerElement {
    fn new(p: u64, d: i64) -> Self {
        Self { p, d, terms: vec![BTreeMap::new(); p as usize] }
    }

    fn add_term(&mut self, i: i64, j: usize, c: u64) {
        let p = self.p;
        let slot = self.terms[j].entry(i).or_insert(0);
        *slot = (*slot + c) % p;
        if *slot == 0 {
            self.terms[j].remove(&i);
        }
    }

    fn add_poly(&mut self, shift: i64, j: usize, g: &FpPolynomial, c: u64) {
        for k in g.support() {
            self.add_term(shift + k as i64, j, g.coeff(k) * c % self.p);
        }
    }

    /// Pole order of `x^i·y^j` is `p·i + d·j`.
    fn leading(&self) -> Option<(i64, i64, usize, u64)> {
        let p = self.p as i64;
        self.terms
            .iter()
            .enumerate()
            .flat_map(|(j, g)| g.iter().map(move |(&i, &c)| (i, j, c)))
            .map(|(i, j, c)| (p * i + self.d * j as i64, i, j, c))
            .max_by_key(|t| t.0)
    }
}

/// Conductor of `y_2^p − y_2 = x_2 + C(y_1, x_1)` over `M`, in `M`'s
/// valuation, after killing every leading pole of order divisible by `p`.
fn second_layer_conductor(
    p: u64,
    x1_raw: &FpPolynomial,
    x1: &FpPolynomial,
    w: &FpPolynomial,
    x2: &FpPolynomial,
) -> Result<i64> {
    let d = x1.degree().expect("ramified first layer") as i64;
    let pu = p as usize;
    let carry = WittCarry::new(p);
    let mut f = LayerElement::new(p, d);
    f.add_poly(0, 0, x2, 1);

    // y_1 = y + w, so y_1^k = Σ_t binom(k, t)·y^t·w^{k−t}.
    let binom = |n: usize, k: usize| -> u64 {
        let b: BigInt = binomial(BigInt::from(n), BigInt::from(k)) % BigInt::from(p);
        u64::try_from(b).expect("residue")
    };
    for (k, &c) in (1..pu).zip(&carry.coeffs) {
        let xpow = x1_raw.pow((pu - k) as u32);
        for t in 0..=k {
            let coeff = c * binom(k, t) % p;
            if coeff != 0 {
                f.add_poly(0, t, &(&xpow * &w.pow((k - t) as u32)), coeff);
            }
        }
    }

    let lc = x1.leading_coeff();
    let x1_pows: Vec<FpPolynomial> = (0..pu).map(|e| x1.pow(e as u32)).collect();
    let d_inv = mod_pow(d.rem_euclid(p as i64) as u64, p - 2, p);
    loop {
        let Some((n, i, j, c)) = f.leading() else {
            return Err(Error::Precondition("second layer is unramified".into()));
        };
        if n <= 0 {
            return Err(Error::Precondition("second layer is unramified".into()));
        }
        if n % p as i64 != 0 {
            return Ok(n);
        }
        debug_assert_eq!(j, 0);
        // Find z = α·x^a·y^b with pole order n/p = i and subtract z^p − z.
        let b = (i.rem_euclid(p as i64) as u64 * d_inv % p) as usize;
        let a = (i - d * b as i64) / p as i64;
        let alpha = c * mod_pow(mod_pow(lc, b as u64, p), p - 2, p) % p;
        // z^p = α·x^{pa}·(y + x_1')^b
        for t in 0..=b {
            let coeff = alpha * binom(b, t) % p;
            if coeff != 0 {
                f.add_poly(p as i64 * a, t, &x1_pows[b - t], p - coeff);
            }
        }
        f.add_term(a, b, alpha);
    }
}
