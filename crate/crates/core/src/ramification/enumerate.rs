use num_bigint::BigInt;
use num_integer::Integer;

use super::JumpSequence;
use crate::exactmath::Rational;
use crate::psl2::InertiaType;

/// Every `I`-admissible sequence with `u_r ≤ bound`, in lexicographic order
/// of `(m·u_1, …, m·u_r)`.
///
/// Works on the integers `n_i = m·u_i ≤ ⌊m·bound⌋`: `n_1` is prime to `p`
/// with `gcd(m, n_1) = m/m_I`, and each later `n_i` is either `p·n_{i−1}`
/// or a larger value prime to `p`, always with `n_i ≡ n_1 (mod m)`.
pub fn enumerate_admissible(inertia: &InertiaType, bound: &Rational) -> Vec<JumpSequence> {
    let (p, m, m_i) = (inertia.p, inertia.m, inertia.m_i);
    let top = (bound * Rational::from_integer(m.into())).floor().to_integer();
    let Ok(top) = u64::try_from(top) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(inertia.r as usize);
    for n1 in 1..=top {
        if n1 % p == 0 || m.gcd(&n1) != m / m_i {
            continue;
        }
        stack.push(n1);
        extend(inertia, top, &mut stack, &mut out);
        stack.pop();
    }
    out
}

fn extend(inertia: &InertiaType, top: u64, stack: &mut Vec<u64>, out: &mut Vec<JumpSequence>) {
    let (p, m) = (inertia.p, inertia.m);
    if stack.len() == inertia.r as usize {
        let jumps = stack.iter().map(|&n| Rational::new(BigInt::from(n), BigInt::from(m))).collect();
        out.push(JumpSequence::new(jumps).expect("increasing positive"));
        return;
    }
    let n1 = stack[0];
    let base = p * stack[stack.len() - 1];
    for n in base..=top {
        let allowed = (n == base || n % p != 0) && n % m == n1 % m;
        if allowed {
            stack.push(n);
            extend(inertia, top, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn show(v: &[JumpSequence]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn small_examples() {
        let z7 = InertiaType::cyclic(7, 1).unwrap();
        assert_eq!(show(&enumerate_admissible(&z7, &rat(3, 1))), ["(1)", "(2)", "(3)"]);
        let d7 = InertiaType::dihedral(7, 1).unwrap();
        assert_eq!(show(&enumerate_admissible(&d7, &rat(2, 1))), ["(1/2)", "(3/2)"]);
    }

    #[test]
    fn two_jumps_start() {
        let z49 = InertiaType::cyclic(7, 2).unwrap();
        let all = enumerate_admissible(&z49, &rat(10, 1));
        assert_eq!(show(&all[..4]), ["(1, 7)", "(1, 8)", "(1, 9)", "(1, 10)"]);
        assert!(all.iter().all(|s| s.jumps()[0] == rat(1, 1)));
    }

    #[test]
    fn bound_below_first_jump() {
        let d7 = InertiaType::dihedral(7, 1).unwrap();
        assert!(enumerate_admissible(&d7, &rat(1, 4)).is_empty());
    }
}
