use proptest::prelude::*;
use wildram::asw::{deform, oracle_jumps, predicted_jumps, validate_spec, verify_deformation, TowerSpec};
use wildram::exactmath::{gcd_u64, FpPolynomial, Rational};
use wildram::ramification::{deformation_compatible, is_admissible, tame_base_change, JumpSequence};

/// `(p, m, residue_class)` triples whose action order divides `p − 1`.
fn settings() -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for p in [3u64, 5, 7] {
        for m in [1u64, 2, 3] {
            if m % p == 0 {
                continue;
            }
            for j in 0..m {
                let m_i = m / gcd_u64(m, j);
                if (p - 1) % m_i == 0 && (m == 1 || j != 0) {
                    out.push((p, m, j));
                }
            }
        }
    }
    out
}

fn degrees(p: u64, m: u64, j: u64, max: u64) -> Vec<usize> {
    (1..=max).filter(|k| k % p != 0 && k % m == j).map(|k| k as usize).collect()
}

fn check(t: &TowerSpec) {
    assert!(validate_spec(t).valid, "{}", t.format());
    let predicted = predicted_jumps(t).unwrap();
    let oracle = oracle_jumps(t).unwrap();
    assert_eq!(oracle, predicted, "tower\n{}", t.format());
    let verdict = is_admissible(&t.inertia().unwrap(), &predicted).unwrap();
    assert!(verdict.admissible, "{predicted}: {}", verdict.summary());
}

#[test]
fn exhaustive_small_sweep() {
    let mut count = 0;
    for (p, m, j) in settings() {
        let degs = degrees(p, m, j, 40);
        for &a in &degs {
            let x1 = FpPolynomial::monomial(p, 1, a);
            check(&TowerSpec::new(p, m, j, vec![x1.clone()]).unwrap());
            count += 1;
            let mut seconds = vec![FpPolynomial::zero(p)];
            seconds.extend(degs.iter().map(|&b| FpPolynomial::monomial(p, p - 1, b)));
            for x2 in seconds {
                check(&TowerSpec::new(p, m, j, vec![x1.clone(), x2]).unwrap());
                count += 1;
            }
        }
    }
    assert!(count >= 500, "only {count} towers");
}

fn random_poly(p: u64, degs: &[usize], picks: &[(usize, u64)]) -> FpPolynomial {
    let mut coeffs = vec![0i64; degs.iter().max().map_or(1, |d| d + 1)];
    for &(i, c) in picks {
        coeffs[degs[i % degs.len()]] = (c % p) as i64;
    }
    FpPolynomial::new(p, coeffs).unwrap()
}

fn tower_strategy() -> impl Strategy<Value = TowerSpec> {
    (
        0..settings().len(),
        1usize..=2,
        prop::collection::vec((0usize..64, 1u64..7), 1..5),
        prop::collection::vec((0usize..64, 0u64..7), 0..5),
    )
        .prop_filter_map("first layer vanished", |(s, r, a, b)| {
            let (p, m, j) = settings()[s];
            let degs = degrees(p, m, j, 40);
            let x1 = random_poly(p, &degs, &a);
            if x1.is_zero() {
                return None;
            }
            let mut polys = vec![x1];
            if r == 2 {
                polys.push(random_poly(p, &degs, &b));
            }
            TowerSpec::new(p, m, j, polys).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_towers_agree(t in tower_strategy()) {
        check(&t);
    }

    #[test]
    fn adding_wp_to_first_layer_is_invisible(t in tower_strategy(), shift in prop::collection::vec(0i64..7, 0..6)) {
        let p = t.p();
        let w = FpPolynomial::new(p, shift).unwrap();
        // Only the first layer: shifting x_1 alone also moves the Witt carry.
        let first = TowerSpec::new(p, t.m(), t.residue_class(), vec![t.polys()[0].clone()]).unwrap();
        let shifted = TowerSpec::new(p, t.m(), t.residue_class(), vec![&t.polys()[0] + &w.wp()]).unwrap();
        prop_assert_eq!(oracle_jumps(&shifted).unwrap(), oracle_jumps(&first).unwrap());
    }

    #[test]
    fn tame_substitution(t in tower_strategy()) {
        // Over k((x)) the same equations define a tower with m = 1.
        let over_x = TowerSpec::new(t.p(), 1, 0, t.polys().to_vec()).unwrap();
        let base = predicted_jumps(&t).unwrap();
        let expected = tame_base_change(&t.inertia().unwrap(), &base, 1).unwrap();
        prop_assert_eq!(oracle_jumps(&over_x).unwrap(), expected.1);
    }

    #[test]
    fn deformation_never_lowers(t in tower_strategy(), bumps in prop::collection::vec(0u64..4, 2), scale in 1u64..7) {
        prop_assume!(scale % t.p() != 0);
        let current = predicted_jumps(&t).unwrap();
        let inertia = t.inertia().unwrap();
        let target: Vec<Rational> = current.jumps().iter().zip(&bumps)
            .map(|(u, &b)| u + Rational::from_integer((b * t.p()).into()))
            .collect();
        let target = JumpSequence::new(target);
        prop_assume!(target.is_ok());
        let target = target.unwrap();
        prop_assume!(deformation_compatible(&inertia, &current, &target).unwrap_or(false));
        let d = deform(&t, &target, scale).unwrap();
        let after = predicted_jumps(&d).unwrap();
        for (i, (old, new)) in current.jumps().iter().zip(after.jumps()).enumerate() {
            prop_assert!(new >= old);
            let prev = if i == 0 { Rational::from_integer(0.into()) } else { target.jumps()[i - 1].clone() * Rational::from_integer(t.p().into()) };
            let fired = target.jumps()[i] > prev && &target.jumps()[i] > old;
            prop_assert_eq!(fired, d.polys()[i] != t.polys()[i]);
        }
        prop_assert!(verify_deformation(&t, &target, scale).unwrap().passed);
    }
}
