//! Finite groups on element indices `0..order`, with brute-force closure
//! and subgroup enumeration.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

/// A finite group whose elements are the indices `0..order()`.
pub trait FiniteGroup: Sync {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;

    fn element_order(&self, a: usize) -> usize {
        let e = self.identity();
        let mut x = a;
        let mut k = 1;
        while x != e {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn pow(&self, a: usize, mut k: usize) -> usize {
        let mut acc = self.identity();
        let mut b = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        acc
    }
}

/// A subgroup stored as a bitset over element indices, plus the generators
/// it was built from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    bits: Vec<u64>,
    len: usize,
    gens: Vec<usize>,
}

impl Subgroup {
    fn from_elements(n: usize, elems: &[usize], gens: Vec<usize>) -> Self {
        let mut bits = vec![0u64; n.div_ceil(64)];
        for &x in elems {
            bits[x / 64] |= 1 << (x % 64);
        }
        Self { bits, len: elems.len(), gens }
    }

    pub fn whole<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        let all: Vec<usize> = (0..g.order()).collect();
        Self::from_elements(g.order(), &all, Vec::new())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b))
    }

    /// Same element set, ignoring generators.
    pub fn same_set(&self, other: &Self) -> bool {
        self.bits == other.bits
    }

    pub fn is_abelian<G: FiniteGroup + ?Sized>(&self, g: &G) -> bool {
        self.gens.iter().all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    /// Closed under products and inverses. Used as a self-check of [`closure`].
    pub fn is_closed<G: FiniteGroup + ?Sized>(&self, g: &G) -> bool {
        let elems: Vec<usize> = self.elements().collect();
        self.contains(g.identity())
            && elems.iter().all(|&a| self.contains(g.inv(a)))
            && elems.iter().all(|&a| elems.iter().all(|&b| self.contains(g.mul(a, b))))
    }

    /// Isomorphism-type fingerprint: order and the multiset of element orders.
    pub fn order_profile<G: FiniteGroup + ?Sized>(&self, g: &G) -> (usize, Vec<(usize, usize)>) {
        let mut counts = BTreeMap::new();
        for x in self.elements() {
            *counts.entry(g.element_order(x)).or_insert(0) += 1;
        }
        (self.len, counts.into_iter().collect())
    }
}

/// The subgroup generated by `gens`.
///
/// A subgroup with more than half the elements is the whole group
/// (Lagrange), so the search stops as soon as that size is passed.
pub fn closure<G: FiniteGroup + ?Sized>(g: &G, gens: &[usize]) -> Subgroup {
    let n = g.order();
    let mut bits = vec![0u64; n.div_ceil(64)];
    let e = g.identity();
    bits[e / 64] |= 1 << (e % 64);
    let mut elems = vec![e];
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &s in gens {
            let y = g.mul(x, s);
            if bits[y / 64] >> (y % 64) & 1 == 0 {
                bits[y / 64] |= 1 << (y % 64);
                elems.push(y);
                if 2 * elems.len() > n {
                    let mut whole = Subgroup::whole(g);
                    whole.gens = gens.to_vec();
                    return whole;
                }
            }
        }
        i += 1;
    }
    Subgroup { bits, len: elems.len(), gens: gens.to_vec() }
}

/// All cyclic subgroups, each with one generator, ordered by element set.
pub fn cyclic_subgroups<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Subgroup> {
    let mut seen: BTreeSet<Subgroup> = BTreeSet::new();
    let mut covered = vec![false; g.order()];
    for x in 0..g.order() {
        if covered[x] {
            continue;
        }
        let c = closure(g, &[x]);
        // Other generators of ⟨x⟩ give the same subgroup.
        let ord = c.len();
        for k in 1..=ord {
            if num_integer::gcd(k, ord) == 1 {
                covered[g.pow(x, k)] = true;
            }
        }
        seen.insert(c);
    }
    dedup_sets(seen)
}

fn dedup_sets(set: BTreeSet<Subgroup>) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::with_capacity(set.len());
    for s in set {
        if out.last().is_none_or(|l| !l.same_set(&s)) {
            out.push(s);
        }
    }
    out
}

/// Every subgroup generated by at most two elements, deduplicated by element
/// set and ordered by it. Pairs are drawn from cyclic subgroups, since
/// `⟨a, b⟩` only depends on `⟨a⟩` and `⟨b⟩`.
pub fn two_generated_subgroups<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Subgroup> {
    let cyclic = cyclic_subgroups(g);
    let found: BTreeSet<Subgroup> = (0..cyclic.len())
        .into_par_iter()
        .map(|i| {
            let mut local = BTreeSet::new();
            let a = &cyclic[i];
            for b in &cyclic[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    continue;
                }
                let h = closure(g, &[a.gens[0], b.gens[0]]);
                local.insert(h);
            }
            local
        })
        .reduce(BTreeSet::new, |mut x, y| {
            x.extend(y);
            x
        });
    let mut all: BTreeSet<Subgroup> = found;
    all.extend(cyclic);
    dedup_sets(all)
}

/// The subgroup generated by the elements of `h` whose order is a power of `p`.
pub fn p_core_generated<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, p: usize) -> Subgroup {
    let gens: Vec<usize> = h
        .elements()
        .filter(|&x| {
            let mut o = g.element_order(x);
            while o % p == 0 {
                o /= p;
            }
            o == 1
        })
        .collect();
    closure(g, &gens)
}

/// `a = p^k` for some `k ≥ 0`.
pub fn is_power_of(mut a: usize, p: usize) -> bool {
    while a.is_multiple_of(p) {
        a /= p;
    }
    a == 1
}
