use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::gcd_u64;
use crate::groups::{closure, cyclic_subgroups, FiniteGroup};
use crate::psl2::InertiaType;

/// Largest group these exhaustive searches accept.
pub const MAX_CONCRETE_ORDER: u64 = 10_000;

/// Tuples examined by [`branch_cycle_feasible`] before it refuses.
const BRANCH_SEARCH_CAP: u64 = 50_000_000;

/// `ℤ/pʳ ⋊ ℤ/m` on pairs `(a, b)`, index `a·m + b`, with
/// `(a, b)·(a', b') = (a + t^b·a', b + b')` for the unit `t`.
#[derive(Debug, Clone, Serialize)]
pub struct SemidirectGroup {
    pub inertia: InertiaType,
    /// Smallest unit of multiplicative order `m_I` modulo `pʳ`.
    pub unit: u64,
    #[serde(skip)]
    modulus: u64,
    #[serde(skip)]
    unit_powers: Vec<u64>,
}

impl SemidirectGroup {
    pub fn new(inertia: &InertiaType) -> Result<Self> {
        let order = inertia.order();
        if order > MAX_CONCRETE_ORDER {
            return Err(Error::Refused(format!(
                "group order {order} exceeds the exhaustive-search limit {MAX_CONCRETE_ORDER}"
            )));
        }
        let modulus = inertia.p_part();
        let unit = (1..modulus.max(2))
            .find(|&t| gcd_u64(t, modulus) == 1 && mult_order(t, modulus) == inertia.m_i)
            .ok_or_else(|| Error::Invariant(format!("no unit of order {} mod {modulus}", inertia.m_i)))?;
        let unit_powers = (0..inertia.m)
            .scan(1u64, |acc, _| {
                let cur = *acc;
                *acc = *acc * unit % modulus;
                Some(cur)
            })
            .collect();
        Ok(Self { inertia: *inertia, unit, modulus, unit_powers })
    }

    pub fn element(&self, a: u64, b: u64) -> usize {
        ((a % self.modulus) * self.inertia.m + b % self.inertia.m) as usize
    }

    fn split(&self, x: usize) -> (u64, u64) {
        let x = x as u64;
        (x / self.inertia.m, x % self.inertia.m)
    }
}

fn mult_order(t: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut k = 1;
    let mut x = t % n;
    while x != 1 {
        x = x * t % n;
        k += 1;
    }
    k
}

impl FiniteGroup for SemidirectGroup {
    fn order(&self) -> usize {
        (self.modulus * self.inertia.m) as usize
    }

    fn identity(&self) -> usize {
        0
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let (a, b) = self.split(x);
        let (c, d) = self.split(y);
        self.element(a + self.unit_powers[b as usize] * c, b + d)
    }

    fn inv(&self, x: usize) -> usize {
        let (a, b) = self.split(x);
        let m = self.inertia.m;
        let b_inv = (m - b) % m;
        let a_inv = (self.modulus - self.unit_powers[b_inv as usize] * a % self.modulus) % self.modulus;
        self.element(a_inv, b_inv)
    }
}

/// Whether `ℤ/pʳ ⋊ ℤ/m` fails to be generated by a `p`-element of order
/// dividing `p^{vp_gen}` together with an element of order prime to `p`.
pub fn generation_obstruction(inertia: &InertiaType, vp_gen: u32) -> Result<bool> {
    if vp_gen > inertia.r {
        return Err(Error::Precondition(format!("vp_gen = {vp_gen} exceeds r = {}", inertia.r)));
    }
    let g = SemidirectGroup::new(inertia)?;
    let p = inertia.p;
    let n = g.order();
    let cyclics = cyclic_subgroups(&g);
    // Cyclic p-subgroups of ℤ/pʳ are determined by their order.
    let p_gens: Vec<usize> = (0..=vp_gen).map(|k| g.element(p.pow(inertia.r - k), 0)).collect();
    let tame_gens: Vec<usize> =
        cyclics.iter().filter(|c| !(c.len() as u64).is_multiple_of(p)).map(|c| c.generators()[0]).collect();
    let generated = p_gens.iter().any(|&x| tame_gens.iter().any(|&h| closure(&g, &[x, h]).len() == n));
    Ok(!generated)
}

/// Whether the group has a generating tuple `g_1, …, g_s` with
/// `ord(g_i) = e_i` and `g_1⋯g_s = 1`.
pub fn branch_cycle_feasible(group: &SemidirectGroup, orders: &[u64]) -> Result<bool> {
    let n = group.order();
    let Some((&last, init)) = orders.split_last() else {
        return Err(Error::Argument("need at least one branch order".into()));
    };
    let by_order = |e: u64| -> Vec<usize> { (0..n).filter(|&x| group.element_order(x) as u64 == e).collect() };
    let pools: Vec<Vec<usize>> = init.iter().map(|&e| by_order(e)).collect();
    let space = pools.iter().try_fold(1u64, |acc, pool| acc.checked_mul(pool.len() as u64));
    match space {
        Some(s) if s <= BRANCH_SEARCH_CAP => {}
        _ => return Err(Error::Refused(format!("branch-cycle search space exceeds {BRANCH_SEARCH_CAP} tuples"))),
    }
    let mut chosen = Vec::with_capacity(orders.len());
    Ok(search(group, &pools, last as usize, group.identity(), &mut chosen))
}

fn search<G: FiniteGroup>(g: &G, pools: &[Vec<usize>], last: usize, prod: usize, chosen: &mut Vec<usize>) -> bool {
    let Some((pool, rest)) = pools.split_first() else {
        let closing = g.inv(prod);
        if g.element_order(closing) != last {
            return false;
        }
        chosen.push(closing);
        let found = closure(g, chosen).len() == g.order();
        chosen.pop();
        return found;
    };
    for &x in pool {
        chosen.push(x);
        let found = search(g, rest, last, g.mul(prod, x), chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}
