//! The acceptance checks, shared by `wildram check-all` and the test suite.
//!
//! Every check is deterministic: randomized parts draw from a fixed-seed
//! ChaCha stream.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::asw::{oracle_jumps, predicted_jumps, validate_spec, verify_deformation, TowerSpec};
use crate::error::Result;
use crate::exactmath::{gcd_u64, rat, FpPolynomial, Rational};
use crate::psl2::{
    group_params, inertia_candidates, select_triple, verify_subgroup_claims, ClassTriple, InertiaType, RootsOfUnity,
    DEFAULT_SUBGROUP_BUDGET,
};
use crate::ramification::{
    deformation_compatible, enumerate_admissible, genus, is_admissible, lower_from_upper, tame_base_change,
    upper_from_lower, GenusStatus, JumpSequence,
};
use crate::vancycles::{branch_cycle_feasible, generation_obstruction, solve_tail_configs, SemidirectGroup, TailKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub criterion: u32,
    pub name: &'static str,
    pub status: Status,
    /// What was checked, or the first counterexample.
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Largest group order the subgroup verification may enumerate.
    pub subgroup_budget: usize,
    /// Extra towers added to the oracle comparison.
    pub fixtures: Vec<TowerSpec>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { subgroup_budget: DEFAULT_SUBGROUP_BUDGET, fixtures: Vec::new() }
    }
}

pub const CRITERIA: [(u32, &str); 11] = [
    (1, "admissibility of the base filtrations"),
    (2, "uniqueness of the tail configuration"),
    (3, "conductor oracle agrees with the jump recurrence"),
    (4, "deformations reach their target jumps"),
    (5, "genus arithmetic"),
    (6, "class triple and element orders"),
    (7, "subgroup claims in PSL2(13)"),
    (8, "tame base change"),
    (9, "enumeration completeness"),
    (10, "Herbrand round trip"),
    (11, "generation obstruction in D_9"),
];

pub fn run(criterion: u32, config: &SuiteConfig) -> Outcome {
    let result = match criterion {
        1 => base_filtrations(),
        2 => tail_uniqueness(),
        3 => oracle_equivalence(&config.fixtures),
        4 => deformation_targets(),
        5 => genus_arithmetic(),
        6 => class_triple(),
        7 => subgroup_claims(config.subgroup_budget),
        8 => tame_change(),
        9 => enumeration(),
        10 => herbrand_round_trip(),
        11 => obstruction(),
        _ => Ok(Check::Fail(format!("no criterion {criterion}"))),
    };
    let name = CRITERIA.iter().find(|c| c.0 == criterion).map_or("unknown", |c| c.1);
    let (status, detail) = match result {
        Ok(Check::Pass(d)) => (Status::Pass, d),
        Ok(Check::Fail(d)) => (Status::Fail, d),
        Ok(Check::Skipped(d)) => (Status::Skipped, d),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    Outcome { criterion, name, status, detail }
}

pub fn run_all(config: &SuiteConfig) -> Vec<Outcome> {
    CRITERIA.iter().map(|&(c, _)| run(c, config)).collect()
}

enum Check {
    Pass(String),
    Fail(String),
    Skipped(String),
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Ok(Check::Fail(format!($($fmt)+)));
        }
    };
}

fn base_filtrations() -> Result<Check> {
    for p in [7u64, 11, 13] {
        let cases = [
            (InertiaType::dihedral(p, 1)?, JumpSequence::new(vec![rat(3, 2)])?),
            (InertiaType::cyclic(p, 1)?, JumpSequence::from_integers([3])?),
            (InertiaType::cyclic(p, 1)?, JumpSequence::from_integers([2])?),
        ];
        for (inertia, jumps) in cases {
            let v = is_admissible(&inertia, &jumps)?;
            ensure!(v.admissible, "{jumps} rejected for {inertia}: {}", v.summary());
        }
    }
    Ok(Check::Pass("(3/2) for D_p, (3) and (2) for Z/p, p in {7, 11, 13}".into()))
}

fn tail_uniqueness() -> Result<Check> {
    let configs = solve_tail_configs(2, 1, 1..=usize::MAX, &rat(2, 1))?;
    ensure!(configs.len() == 1, "expected one configuration, found {}", configs.len());
    let tails = configs[0].tails();
    let got: Vec<(TailKind, Rational)> = tails.iter().map(|t| (t.kind, t.sigma.clone())).collect();
    ensure!(got == [(TailKind::New, rat(3, 2)), (TailKind::Primitive, rat(1, 2))], "unexpected configuration {got:?}");
    Ok(Check::Pass("unique configuration {new: 3/2, primitive: 1/2}".into()))
}

/// `(p, m, j)` with `p ∈ {3, 5, 7}`, `m ∈ {1, 2}` and a valid action.
fn tower_settings(primes: &[u64]) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for &p in primes {
        for m in [1u64, 2] {
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

fn allowed_degrees(p: u64, m: u64, j: u64, max: u64) -> Vec<usize> {
    (1..=max).filter(|k| k % p != 0 && k % m == j).map(|k| k as usize).collect()
}

fn random_layer(rng: &mut ChaCha8Rng, p: u64, degs: &[usize], nonzero: bool) -> FpPolynomial {
    loop {
        let terms = rng.gen_range(if nonzero { 1 } else { 0 }..=4);
        let mut x = FpPolynomial::zero(p);
        for _ in 0..terms {
            let k = *degs.choose(rng).expect("nonempty degree list");
            x = &x + &FpPolynomial::monomial(p, rng.gen_range(1..p), k);
        }
        if !nonzero || !x.is_zero() {
            return x;
        }
    }
}

fn random_tower(rng: &mut ChaCha8Rng, settings: &[(u64, u64, u64)]) -> Result<TowerSpec> {
    let &(p, m, j) = settings.choose(rng).expect("nonempty settings");
    let degs = allowed_degrees(p, m, j, 40);
    let mut polys = vec![random_layer(rng, p, &degs, true)];
    if rng.gen_bool(0.5) {
        polys.push(random_layer(rng, p, &degs, false));
    }
    TowerSpec::new(p, m, j, polys)
}

fn compare(t: &TowerSpec) -> Result<Option<String>> {
    let predicted = predicted_jumps(t)?;
    let oracle = oracle_jumps(t)?;
    Ok((predicted != oracle).then(|| format!("recurrence {predicted} vs oracle {oracle} for\n{}", t.format())))
}

fn oracle_equivalence(fixtures: &[TowerSpec]) -> Result<Check> {
    let settings = tower_settings(&[3, 5, 7]);
    let mut exhaustive = 0;
    for &(p, m, j) in &settings {
        let degs = allowed_degrees(p, m, j, 40);
        for &a in &degs {
            let x1 = FpPolynomial::monomial(p, 1, a);
            let mut seconds = vec![None, Some(FpPolynomial::zero(p))];
            seconds.extend(degs.iter().map(|&b| Some(FpPolynomial::monomial(p, 1, b))));
            for x2 in seconds {
                let polys = std::iter::once(x1.clone()).chain(x2).collect();
                let t = TowerSpec::new(p, m, j, polys)?;
                if let Some(diff) = compare(&t)? {
                    return Ok(Check::Fail(diff));
                }
                exhaustive += 1;
            }
        }
    }
    ensure!(exhaustive >= 500, "only {exhaustive} exhaustive towers");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let t = random_tower(&mut rng, &settings)?;
        if let Some(diff) = compare(&t)? {
            return Ok(Check::Fail(diff));
        }
    }
    for t in fixtures {
        ensure!(validate_spec(t).valid, "fixture tower is invalid:\n{}", t.format());
        if t.r() <= 2 {
            if let Some(diff) = compare(t)? {
                return Ok(Check::Fail(diff));
            }
        }
    }
    Ok(Check::Pass(format!(
        "{exhaustive} exhaustive + 200 random towers{}",
        if fixtures.is_empty() { String::new() } else { format!(" + {} fixtures", fixtures.len()) }
    )))
}

fn deformation_targets() -> Result<Check> {
    let settings = tower_settings(&[3, 5]);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut done = 0;
    let mut raised = 0;
    let mut attempts = 0;
    while done < 50 {
        attempts += 1;
        ensure!(attempts < 100_000, "could not draw 50 compatible pairs");
        let t = random_tower(&mut rng, &settings)?;
        let current = predicted_jumps(&t)?;
        let p = Rational::from_integer(t.p().into());
        let mut target: Vec<Rational> = Vec::new();
        for u in current.jumps() {
            let next = match target.last() {
                Some(prev) if rng.gen_bool(0.3) => prev * &p,
                _ => u + Rational::from_integer(rng.gen_range(0..4u64).into()) * &p,
            };
            target.push(next);
        }
        let Ok(target) = JumpSequence::new(target) else { continue };
        if !deformation_compatible(&t.inertia()?, &current, &target)? {
            continue;
        }
        let scale = rng.gen_range(1..t.p());
        let v = verify_deformation(&t, &target, scale)?;
        ensure!(
            v.passed,
            "target {target}: recurrence {} oracle {:?} for\n{}",
            v.predicted,
            v.oracle.map(|o| o.to_string()),
            t.format()
        );
        raised += usize::from(target != current);
        done += 1;
    }
    Ok(Check::Pass(format!("50 compatible pairs ({raised} with raised jumps)")))
}

fn genus_arithmetic() -> Result<Check> {
    let d7 = InertiaType::dihedral(7, 1)?;
    let g = genus(&BigInt::from(1092), &d7, &JumpSequence::new(vec![rat(3, 2)])?)?;
    ensure!(g.divisor_degree == BigInt::from(31), "divisor degree {} != 31", g.divisor_degree);
    ensure!(g.as_integer() == Some(BigInt::from(118)), "genus {} != 118", g.value);
    let mut checked = 0;
    for ell in [13u64, 97] {
        let gp = group_params(7, ell)?;
        for inertia in inertia_candidates(&gp) {
            for jumps in enumerate_admissible(&inertia, &rat(10, 1)) {
                let g = genus(&gp.order, &inertia, &jumps)?;
                ensure!(g.status != GenusStatus::NonIntegral, "genus {} for {inertia}, {jumps} at l = {ell}", g.value);
                checked += 1;
            }
        }
    }
    Ok(Check::Pass(format!("118 and 31 at (1092, D_7, (3/2)); {checked} integral genera")))
}

fn brute_orders(roots: &RootsOfUnity, triple: &ClassTriple) -> Vec<(u64, u64)> {
    triple
        .classes
        .iter()
        .map(|&cls| {
            let x = roots.diagonal_form(cls);
            let mut y = x;
            let mut k = 1u64;
            let mut projective = None;
            while !y.is_identity() {
                if projective.is_none() && y.is_minus_identity() {
                    projective = Some(k);
                }
                y = y.mul(&x);
                k += 1;
            }
            (k, projective.unwrap_or(k))
        })
        .collect()
}

fn class_triple() -> Result<Check> {
    let t = select_triple(7, 97)?;
    let names: Vec<String> = t.classes.iter().map(|c| c.to_string()).collect();
    ensure!(names == ["C(47)", "C~(42)", "C~(48)"], "triple {names:?}");
    ensure!(t.vp_chain == [0, 1, 2], "valuations {:?}", t.vp_chain);
    let roots = RootsOfUnity::new(97)?;
    for ((cls, (sl2, psl2)), (&e_sl, &e)) in
        t.classes.iter().zip(brute_orders(&roots, &t)).zip(t.sl2_indices.iter().zip(&t.psl2_indices))
    {
        ensure!(sl2 == e_sl && psl2 == e, "{cls}: powers give ({sl2}, {psl2}), recipe ({e_sl}, {e})");
        let rep = roots.representative(*cls);
        ensure!(rep.pow(sl2).is_identity(), "{cls}: representative has the wrong order");
    }
    Ok(Check::Pass(format!("{} with PSL2 orders {:?}", names.join(", "), t.psl2_indices)))
}

fn subgroup_claims(budget: usize) -> Result<Check> {
    if budget < 1092 {
        return Ok(Check::Skipped(format!("|PSL2(13)| = 1092 exceeds the budget {budget}")));
    }
    let report = verify_subgroup_claims(7, 13, budget)?;
    if let Some(c) = report.claims.iter().find(|c| c.status != crate::psl2::ClaimStatus::Pass) {
        return Ok(Check::Fail(format!("{} fails: {}", c.id, c.witness.clone().unwrap_or_default())));
    }
    ensure!(report.all_pass(), "a third generator produced new subgroup types");
    Ok(Check::Pass(format!("{} subgroups, all three claims hold", report.subgroups)))
}

fn tame_change() -> Result<Check> {
    let (inertia, jumps) = tame_base_change(&InertiaType::dihedral(7, 1)?, &JumpSequence::new(vec![rat(3, 2)])?, 1)?;
    ensure!(inertia == InertiaType::cyclic(7, 1)?, "pulled back to {inertia}");
    ensure!(jumps == JumpSequence::from_integers([3])?, "pulled back jumps {jumps}");
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let dihedral: Vec<(u64, u64, u64)> = [3u64, 5, 7].iter().map(|&p| (p, 2, 1)).collect();
    for _ in 0..20 {
        let t = random_tower(&mut rng, &dihedral)?;
        let over_x = TowerSpec::new(t.p(), 1, 0, t.polys().to_vec())?;
        let (_, expected) = tame_base_change(&t.inertia()?, &predicted_jumps(&t)?, 1)?;
        let got = oracle_jumps(&over_x)?;
        ensure!(got == expected, "scaling gives {expected}, oracle {got} for\n{}", t.format());
    }
    Ok(Check::Pass("(D_7, (3/2)) -> (Z/7, (3)); 20 dihedral towers".into()))
}

/// Every strictly increasing sequence on the grid `(1/m)ℤ ∩ (0, bound]`
/// that passes the admissibility test.
pub fn naive_admissible(inertia: &InertiaType, bound: &Rational) -> Result<Vec<JumpSequence>> {
    let m = inertia.m as i64;
    let top = (bound * Rational::from_integer(m.into())).floor().to_integer();
    let top = i64::try_from(top).unwrap_or(i64::MAX);
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = (1..=top).map(|a| vec![a]).collect();
    while let Some(seq) = stack.pop() {
        if seq.len() == inertia.r as usize {
            let jumps = JumpSequence::new(seq.iter().map(|&a| rat(a, m)).collect())?;
            if is_admissible(inertia, &jumps)?.admissible {
                out.push(jumps);
            }
            continue;
        }
        let last = *seq.last().expect("nonempty");
        for a in last + 1..=top {
            let mut next = seq.clone();
            next.push(a);
            stack.push(next);
        }
    }
    out.sort();
    Ok(out)
}

fn enumeration() -> Result<Check> {
    let bound = rat(15, 1);
    let mut total = 0;
    for inertia in [
        InertiaType::cyclic(7, 1)?,
        InertiaType::cyclic(7, 2)?,
        InertiaType::dihedral(7, 1)?,
        InertiaType::dihedral(7, 2)?,
    ] {
        let mut fast = enumerate_admissible(&inertia, &bound);
        fast.sort();
        let naive = naive_admissible(&inertia, &bound)?;
        ensure!(fast == naive, "{inertia}: {} enumerated vs {} by grid filter", fast.len(), naive.len());
        total += fast.len();
    }
    Ok(Check::Pass(format!("{total} sequences for Z/7, Z/49, D_7, D_49 up to 15")))
}

fn random_inertia(rng: &mut ChaCha8Rng) -> Result<InertiaType> {
    let p = *[3u64, 5, 7].choose(rng).expect("primes");
    let r = rng.gen_range(1..=3);
    let ms: Vec<u64> = (1..=6).filter(|m| m % p != 0).collect();
    let m = *ms.choose(rng).expect("some m");
    let m_is: Vec<u64> = (1..=m).filter(|d| gcd_u64(m, p - 1).is_multiple_of(*d)).collect();
    InertiaType::new(p, r, m, *m_is.choose(rng).expect("m_I = 1 divides"))
}

fn herbrand_round_trip() -> Result<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut done = 0;
    let mut attempts = 0;
    while done < 200 {
        attempts += 1;
        ensure!(attempts < 1_000_000, "could not draw 200 admissible filtrations");
        let inertia = random_inertia(&mut rng)?;
        let (p, m) = (inertia.p as i64, inertia.m as i64);
        let mut scaled = vec![rng.gen_range(1..=4 * m)];
        for _ in 1..inertia.r {
            let prev = *scaled.last().expect("nonempty");
            let next = if rng.gen_bool(0.4) { p * prev } else { p * prev + m * rng.gen_range(1..=3) };
            scaled.push(next);
        }
        let upper = JumpSequence::new(scaled.iter().map(|&a| rat(a, m)).collect())?;
        if !is_admissible(&inertia, &upper)?.admissible {
            continue;
        }
        let lower = lower_from_upper(&inertia, &upper)?;
        let back = upper_from_lower(&inertia, &lower)?;
        ensure!(back == upper, "{inertia}: {upper} -> {lower} -> {back}");
        ensure!(lower_from_upper(&inertia, &back)? == lower, "{inertia}: lower jumps {lower} not recovered");
        done += 1;
    }
    Ok(Check::Pass("200 random admissible filtrations, r <= 3, m <= 6".into()))
}

fn obstruction() -> Result<Check> {
    let d9 = InertiaType::dihedral(3, 2)?;
    ensure!(generation_obstruction(&d9, 1)?, "D_9 is generated by an element of order 3 and one of order 2");
    let group = SemidirectGroup::new(&d9)?;
    ensure!(!branch_cycle_feasible(&group, &[2, 3])?, "D_9 has a branch cycle of type (2, 3)");
    Ok(Check::Pass("D_9 needs an element of order 9; no (2, 3) branch cycle".into()))
}
