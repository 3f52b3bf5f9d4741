use std::collections::BTreeSet;

use wildram::exactmath::{rat, Rational};
use wildram::groups::{closure, FiniteGroup};
use wildram::psl2::InertiaType;
use wildram::vancycles::{
    branch_cycle_feasible, generation_obstruction, infer_inertia, solve_tail_configs, SemidirectGroup, TailKind,
};

/// Sorted `(kind, m_G·σ)` lists from the full product grid.
fn naive(m_g: i64, n_prim: usize, n_new: usize) -> BTreeSet<Vec<(TailKind, i64)>> {
    let new_grid: Vec<i64> = (m_g + 1..=2 * m_g).collect();
    let prim_grid: Vec<i64> = (1..=2 * m_g).collect();
    let mut choices: Vec<(TailKind, &Vec<i64>)> = vec![(TailKind::New, &new_grid); n_new];
    choices.extend(vec![(TailKind::Primitive, &prim_grid); n_prim]);
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let pick: Vec<(TailKind, i64)> = choices.iter().zip(&idx).map(|((k, g), &i)| (*k, g[i])).collect();
        let total: i64 = pick.iter().map(|&(k, s)| if k == TailKind::New { s - m_g } else { s }).sum();
        if total == m_g {
            let mut sorted = pick;
            sorted.sort();
            out.insert(sorted);
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].1.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[test]
fn tail_solver_matches_product_grid() {
    for m_g in 1..=4i64 {
        for n_prim in 0..=3 {
            for n_new in 0..=3 {
                if n_prim + n_new == 0 {
                    continue;
                }
                let got: BTreeSet<Vec<(TailKind, i64)>> =
                    solve_tail_configs(m_g as u64, n_prim, n_new..=n_new, &rat(2, 1))
                        .unwrap()
                        .iter()
                        .map(|c| {
                            c.tails()
                                .iter()
                                .map(|t| {
                                    (
                                        t.kind,
                                        (&t.sigma * Rational::from_integer(m_g.into()))
                                            .to_integer()
                                            .try_into()
                                            .unwrap(),
                                    )
                                })
                                .collect()
                        })
                        .collect();
                assert_eq!(got, naive(m_g, n_prim, n_new), "m_G = {m_g}, {n_prim} primitive, {n_new} new");
            }
        }
    }
}

#[test]
fn new_tail_forces_r_one_for_large_p() {
    for config in solve_tail_configs(2, 1, 1..=usize::MAX, &rat(2, 1)).unwrap() {
        for tail in config.tails().iter().filter(|t| t.kind == TailKind::New) {
            for p in [7u64, 11, 13] {
                let inf = infer_inertia(&tail.sigma, p, 2).unwrap();
                assert_eq!(inf.allowed_r, [1]);
                assert!(!inf.abelian_possible);
            }
        }
    }
}

fn small_inertia() -> Vec<InertiaType> {
    let mut out = Vec::new();
    for p in [3u64, 5, 7] {
        for r in 1..=3 {
            for m in 1..=6u64 {
                for m_i in 1..=m {
                    if let Ok(i) = InertiaType::new(p, r, m, m_i) {
                        if i.order() <= 2_000 {
                            out.push(i);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Direct search over element pairs.
fn generated_by_pair(i: &InertiaType, vp_gen: u32) -> bool {
    let g = SemidirectGroup::new(i).unwrap();
    let n = g.order();
    let p = i.p as usize;
    let max_p = p.pow(vp_gen);
    let p_elems: Vec<usize> = (0..n).filter(|&x| max_p.is_multiple_of(g.element_order(x))).collect();
    let tame: Vec<usize> = (0..n).filter(|&x| g.element_order(x) % p != 0).collect();
    p_elems.iter().any(|&x| tame.iter().any(|&h| closure(&g, &[x, h]).len() == n))
}

#[test]
fn obstruction_matches_pair_search_and_is_monotone() {
    for i in small_inertia().into_iter().filter(|i| i.order() <= 300) {
        let mut prev = true;
        for vp_gen in 0..=i.r {
            let obstructed = generation_obstruction(&i, vp_gen).unwrap();
            assert_eq!(obstructed, !generated_by_pair(&i, vp_gen), "{i}, vp_gen = {vp_gen}");
            assert!(prev || !obstructed, "{i}: obstruction appears at vp_gen = {vp_gen}");
            prev = obstructed;
        }
        // The whole p-Sylow subgroup always suffices.
        assert!(!generation_obstruction(&i, i.r).unwrap(), "{i}");
    }
}

#[test]
fn two_branch_points_need_a_cyclic_group() {
    for i in small_inertia().into_iter().filter(|i| i.order() <= 400) {
        let g = SemidirectGroup::new(&i).unwrap();
        let n = g.order() as u64;
        let orders: BTreeSet<u64> = (0..g.order()).map(|x| g.element_order(x) as u64).collect();
        let cyclic = orders.contains(&n);
        for &a in &orders {
            for &b in &orders {
                let feasible = branch_cycle_feasible(&g, &[a, b]).unwrap();
                assert_eq!(feasible, cyclic && a == n && b == n, "{i}, orders ({a}, {b})");
            }
        }
    }
}

#[test]
fn dihedral_branch_cycles() {
    let d9 = SemidirectGroup::new(&InertiaType::dihedral(3, 2).unwrap()).unwrap();
    assert!(!branch_cycle_feasible(&d9, &[2, 3]).unwrap());
    assert!(!branch_cycle_feasible(&d9, &[3, 2]).unwrap());
    let d7 = SemidirectGroup::new(&InertiaType::dihedral(7, 1).unwrap()).unwrap();
    assert!(branch_cycle_feasible(&d7, &[2, 2, 7]).unwrap());
    assert!(!branch_cycle_feasible(&d7, &[2, 7]).unwrap());
}
