use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TailKind {
    New,
    Primitive,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TailDatum {
    pub kind: TailKind,
    #[serde(serialize_with = "crate::serde_util::rational")]
    pub sigma: Rational,
}

impl TailDatum {
    /// `σ ∈ (1/m_G)ℤ`, at least `1 + 1/m_G` for new tails and `1/m_G` for
    /// primitive ones.
    pub fn new(kind: TailKind, sigma: Rational, m_g: u64) -> Result<Self> {
        let m = Rational::from_integer(m_g.into());
        if !(&sigma * &m).is_integer() {
            return Err(Error::Argument(format!("sigma = {sigma} is not in (1/{m_g})Z")));
        }
        let floor = match kind {
            TailKind::New => Rational::from_integer(1.into()) + m.recip(),
            TailKind::Primitive => m.recip(),
        };
        if sigma < floor {
            return Err(Error::Argument(format!("{kind:?} tail needs sigma >= {floor}, got {sigma}")));
        }
        Ok(Self { kind, sigma })
    }

    fn contribution(&self) -> Rational {
        match self.kind {
            TailKind::New => &self.sigma - Rational::from_integer(1.into()),
            TailKind::Primitive => self.sigma.clone(),
        }
    }
}

/// A multiset of tails satisfying `Σ_new (σ_b − 1) + Σ_prim σ_b = 1`,
/// stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct TailConfig {
    tails: Vec<TailDatum>,
}

impl TailConfig {
    pub fn new(mut tails: Vec<TailDatum>) -> Result<Self> {
        let total: Rational = tails.iter().map(TailDatum::contribution).sum();
        if total != Rational::from_integer(1.into()) {
            return Err(Error::Invariant(format!("tail contributions sum to {total}, not 1")));
        }
        tails.sort();
        Ok(Self { tails })
    }

    pub fn tails(&self) -> &[TailDatum] {
        &self.tails
    }

    pub fn count(&self, kind: TailKind) -> usize {
        self.tails.iter().filter(|t| t.kind == kind).count()
    }
}

/// Every configuration with exactly `n_prim` primitive tails, a number of
/// new tails in `n_new`, and all `σ_b ≤ sigma_bound`.
///
/// With `σ_b ∈ (1/m_G)ℤ` each tail contributes at least `1/m_G` to a total
/// of 1, so no configuration has more than `m_G` tails; the search
/// enumerates contributions as partitions of `m_G` and is therefore
/// complete for any `n_new` range.
pub fn solve_tail_configs(
    m_g: u64,
    n_prim: usize,
    n_new: RangeInclusive<usize>,
    sigma_bound: &Rational,
) -> Result<Vec<TailConfig>> {
    if m_g == 0 {
        return Err(Error::Argument("m_G must be positive".into()));
    }
    let total = m_g as usize;
    let m = Rational::from_integer(m_g.into());
    let mut out = Vec::new();
    for k_new in 0..=total {
        let k_prim = total - k_new;
        for n in n_new.clone().take_while(|&n| n <= total) {
            for new_parts in partitions(k_new, n) {
                for prim_parts in partitions(k_prim, n_prim) {
                    let mut tails = Vec::with_capacity(n + n_prim);
                    for c in &new_parts {
                        let sigma = Rational::from_integer((c + total).into()) / &m;
                        tails.push(TailDatum::new(TailKind::New, sigma, m_g)?);
                    }
                    for c in &prim_parts {
                        let sigma = Rational::from_integer((*c).into()) / &m;
                        tails.push(TailDatum::new(TailKind::Primitive, sigma, m_g)?);
                    }
                    if tails.iter().all(|t| t.sigma <= *sigma_bound) {
                        out.push(TailConfig::new(tails)?);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Non-increasing sequences of exactly `parts` positive integers summing to `n`.
fn partitions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if n == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if n < parts {
            return;
        }
        for first in (1..=max.min(n - (parts - 1))).rev() {
            prefix.push(first);
            go(n - first, parts - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, parts, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn sigmas(c: &TailConfig) -> Vec<(TailKind, Rational)> {
        c.tails().iter().map(|t| (t.kind, t.sigma.clone())).collect()
    }

    #[test]
    fn one_primitive_tail_forces_three_halves() {
        let configs = solve_tail_configs(2, 1, 1..=usize::MAX, &rat(100, 1)).unwrap();
        assert_eq!(configs.len(), 1);
        assert_eq!(sigmas(&configs[0]), [(TailKind::New, rat(3, 2)), (TailKind::Primitive, rat(1, 2))]);
    }

    #[test]
    fn other_examples() {
        let c = solve_tail_configs(2, 2, 0..=0, &rat(100, 1)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(sigmas(&c[0]), [(TailKind::Primitive, rat(1, 2)), (TailKind::Primitive, rat(1, 2))]);
        let c = solve_tail_configs(2, 0, 2..=2, &rat(100, 1)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(sigmas(&c[0]), [(TailKind::New, rat(3, 2)), (TailKind::New, rat(3, 2))]);
    }

    #[test]
    fn no_config_exceeds_m_g_tails() {
        for m_g in 1..=6 {
            for n_prim in 0..=m_g as usize + 1 {
                let all = solve_tail_configs(m_g, n_prim, 0..=usize::MAX, &rat(100, 1)).unwrap();
                assert!(all.iter().all(|c| c.tails().len() <= m_g as usize));
            }
            // m_G + 1 primitive tails of the minimal size 1/m_G already overshoot.
            assert!(solve_tail_configs(m_g, m_g as usize + 1, 0..=0, &rat(100, 1)).unwrap().is_empty());
        }
    }

    #[test]
    fn bound_filters() {
        let c = solve_tail_configs(2, 0, 1..=1, &rat(100, 1)).unwrap();
        assert_eq!(sigmas(&c[0]), [(TailKind::New, rat(2, 1))]);
        assert!(solve_tail_configs(2, 0, 1..=1, &rat(3, 2)).unwrap().is_empty());
    }

    #[test]
    fn datum_validation() {
        assert!(TailDatum::new(TailKind::New, rat(1, 1), 2).is_err());
        assert!(TailDatum::new(TailKind::Primitive, rat(1, 3), 2).is_err());
        assert!(TailConfig::new(vec![TailDatum::new(TailKind::Primitive, rat(1, 2), 2).unwrap()]).is_err());
    }

    #[test]
    fn serializes_as_array() {
        let c = &solve_tail_configs(2, 1, 1..=5, &rat(2, 1)).unwrap()[0];
        assert_eq!(
            serde_json::to_string(c).unwrap(),
            r#"[{"kind":"new","sigma":"3/2"},{"kind":"primitive","sigma":"1/2"}]"#
        );
    }
}
