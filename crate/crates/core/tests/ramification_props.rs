use num_bigint::BigInt;
use proptest::prelude::*;
use wildram::exactmath::{rat, Rational};
use wildram::psl2::InertiaType;
use wildram::ramification::{
    divisor_degree, enumerate_admissible, genus, is_admissible, leq, lower_from_upper, tame_base_change,
    upper_from_lower, HerbrandFunction, JumpSequence,
};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Admissibility restated on `n_i = m·u_i`, written independently of the
/// library.
fn admissible_by_hand(i: &InertiaType, n: &[i64]) -> bool {
    let (p, m, m_i) = (i.p as i64, i.m as i64, i.m_i as i64);
    if n[0] % p == 0 || gcd(m, n[0]) != m / m_i {
        return false;
    }
    n.windows(2).all(|w| w[1] == p * w[0] || (w[1] > p * w[0] && w[1] % p != 0))
        && n.iter().all(|x| (x - n[0]).rem_euclid(m) == 0)
}

/// All strictly increasing `n_1 < … < n_r ≤ top`, filtered by hand.
fn grid_filter(i: &InertiaType, top: i64) -> Vec<Vec<i64>> {
    fn go(i: &InertiaType, top: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == i.r as usize {
            if admissible_by_hand(i, prefix) {
                out.push(prefix.clone());
            }
            return;
        }
        let start = prefix.last().map_or(1, |x| x + 1);
        for x in start..=top {
            prefix.push(x);
            go(i, top, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(i, top, &mut Vec::new(), &mut out);
    out
}

fn inertia_strategy(max_r: u32) -> impl Strategy<Value = InertiaType> {
    (prop::sample::select(vec![3u64, 5, 7]), 1..=max_r, 1u64..=6, any::<prop::sample::Index>()).prop_filter_map(
        "m divisible by p",
        |(p, r, m, pick)| {
            let g = gcd(m as i64, p as i64 - 1) as u64;
            let divisors: Vec<u64> = (1..=g).filter(|d| g.is_multiple_of(*d)).collect();
            InertiaType::new(p, r, m, *pick.get(&divisors)).ok()
        },
    )
}

/// Admissible sequences built from the integers `n_i`.
fn filtration_strategy() -> impl Strategy<Value = (InertiaType, JumpSequence)> {
    (inertia_strategy(3), 1i64..40, prop::collection::vec((any::<bool>(), 1i64..4), 2)).prop_filter_map(
        "inadmissible",
        |(i, n1, steps)| {
            let (p, m) = (i.p as i64, i.m as i64);
            let mut n = vec![n1];
            for &(stay, k) in steps.iter().take(i.r as usize - 1) {
                let prev = *n.last().unwrap();
                n.push(if stay { p * prev } else { p * prev + m * k });
            }
            if !admissible_by_hand(&i, &n) {
                return None;
            }
            let jumps = JumpSequence::new(n.iter().map(|&x| rat(x, m)).collect()).ok()?;
            Some((i, jumps))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn library_agrees_with_hand_conditions(i in inertia_strategy(3), n in prop::collection::vec(1i64..60, 3)) {
        let mut n: Vec<i64> = n.into_iter().take(i.r as usize).collect();
        n.sort();
        n.dedup();
        prop_assume!(n.len() == i.r as usize);
        let jumps = JumpSequence::new(n.iter().map(|&x| rat(x, i.m as i64)).collect()).unwrap();
        prop_assert_eq!(is_admissible(&i, &jumps).unwrap().admissible, admissible_by_hand(&i, &n));
    }

    #[test]
    fn enumeration_matches_grid(i in inertia_strategy(2), bound in 1i64..=12) {
        let top = bound * i.m as i64;
        let want = grid_filter(&i, top);
        let got: Vec<Vec<i64>> = enumerate_admissible(&i, &rat(bound, 1))
            .iter()
            .map(|j| j.integer_multiples(i.m).unwrap().iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn herbrand_round_trip((i, upper) in filtration_strategy()) {
        let lower = lower_from_upper(&i, &upper).unwrap();
        prop_assert!(lower.jumps().iter().all(|h| h.is_integer()));
        prop_assert_eq!(&upper_from_lower(&i, &lower).unwrap(), &upper);
        let phi = HerbrandFunction::new(&i, &lower).unwrap();
        for v in [rat(1, 7), rat(5, 2), upper.last().clone(), upper.last() + rat(3, 1)] {
            prop_assert_eq!(phi.phi(&phi.psi(&v)), v);
        }
    }

    #[test]
    fn divisor_degree_and_genus_are_integral((i, upper) in filtration_strategy(), k in 1u64..5) {
        let deg = divisor_degree(&i, &upper).unwrap();
        // With |G| = 2k·|I| the genus is 1 − |G| + k·deg R.
        let order = BigInt::from(2 * i.order() * k);
        let g = genus(&order, &i, &upper).unwrap();
        prop_assert_eq!(&g.divisor_degree, &deg);
        prop_assert!(g.as_integer().is_some(), "genus {} for {} {}", g.value, i, upper);
    }

    #[test]
    fn genus_grows_with_jumps((i, upper) in filtration_strategy(), bumps in prop::collection::vec(0i64..4, 3)) {
        // Adding multiples of p to m·u_i keeps residues mod p and mod m.
        let (p, m) = (i.p as i64, i.m as i64);
        let n: Vec<i64> = upper.integer_multiples(i.m).unwrap().iter()
            .zip(&bumps)
            .map(|(x, b)| i64::try_from(x).unwrap() + b * p * m)
            .collect();
        prop_assume!(admissible_by_hand(&i, &n) && n.windows(2).all(|w| w[0] < w[1]));
        let higher = JumpSequence::new(n.iter().map(|&x| rat(x, m)).collect()).unwrap();
        prop_assert!(leq(&upper, &higher).unwrap());
        let order = BigInt::from(i.order());
        prop_assert!(genus(&order, &i, &upper).unwrap().value <= genus(&order, &i, &higher).unwrap().value);
    }

    #[test]
    fn tame_base_change_composes((i, upper) in filtration_strategy()) {
        let m = i.m;
        for m1 in (1..=m).filter(|d| m % d == 0) {
            let (i1, u1) = tame_base_change(&i, &upper, m1).unwrap();
            prop_assert!(is_admissible(&i1, &u1).unwrap().admissible);
            for m2 in (1..=m1).filter(|d| m1 % d == 0) {
                let direct = tame_base_change(&i, &upper, m2).unwrap();
                prop_assert_eq!(tame_base_change(&i1, &u1, m2).unwrap(), direct);
            }
        }
    }
}

#[test]
fn golden_genera() {
    let d7 = InertiaType::dihedral(7, 1).unwrap();
    let g = genus(&BigInt::from(1092), &d7, &JumpSequence::new(vec![rat(3, 2)]).unwrap()).unwrap();
    // 1 - 1092 + 1092·31/28 computed by hand: 1092/28 = 39, 39·31 = 1209.
    assert_eq!(g.value, Rational::from_integer((1 - 1092 + 1209).into()));
}
