use wildram::exactmath::{is_prime, vp_u64};
use wildram::psl2::{class_order, ConjClass, Mat2, RootsOfUnity};

/// `(k, k')`: least `k` with `x^k = 1` and least `k'` with `x^{k'} = ±1`.
fn power_orders(x: &Mat2) -> (u64, u64) {
    let mut y = *x;
    let mut k = 1;
    let mut projective = None;
    while !y.is_identity() {
        if projective.is_none() && y.is_minus_identity() {
            projective = Some(k);
        }
        y = y.mul(x);
        k += 1;
    }
    (k, projective.unwrap_or(k))
}

fn classes(ell: u64) -> impl Iterator<Item = ConjClass> {
    let split = (1..(ell - 1) / 2).map(ConjClass::split);
    let nonsplit = (1..ell.div_ceil(2)).map(ConjClass::nonsplit);
    split.chain(nonsplit)
}

#[test]
fn class_orders_match_matrix_powers() {
    let mut checked = 0;
    for ell in (3..=101u64).filter(|&l| is_prime(l)) {
        let roots = RootsOfUnity::new(ell).unwrap();
        for cls in classes(ell) {
            let rep = roots.representative(cls);
            assert!(rep.det().is_one(), "det of {cls} at l = {ell}");
            let (sl2, psl2) = power_orders(&rep);
            let diag = roots.diagonal_form(cls);
            assert_eq!(power_orders(&diag), (sl2, psl2), "{cls} at l = {ell}");
            for p in [3u64, 5, 7].into_iter().filter(|&p| p != ell) {
                let o = class_order(ell, cls, p).unwrap();
                assert_eq!((o.sl2_order, o.psl2_order), (sl2, psl2), "{cls} at l = {ell}");
                assert_eq!(o.vp_order, vp_u64(sl2, p).unwrap());
                checked += 1;
            }
        }
    }
    assert!(checked > 3000, "{checked}");
}

#[test]
fn representatives_and_diagonal_forms_share_traces() {
    for ell in (3..=101u64).filter(|&l| is_prime(l)) {
        let roots = RootsOfUnity::new(ell).unwrap();
        for cls in classes(ell) {
            let rep = roots.representative(cls);
            let diag = roots.diagonal_form(cls);
            let t_rep = (rep.a + rep.d).coords();
            let t_diag = (diag.a + diag.d).coords();
            assert_eq!(t_diag[1], 0, "trace of {cls} leaves F_l at l = {ell}");
            assert_eq!(t_rep[0], t_diag[0], "{cls} at l = {ell}");
        }
    }
}

#[test]
fn distinct_classes_have_distinct_traces() {
    // Semisimple classes of SL2 are determined by their trace.
    for ell in (5..=101u64).filter(|&l| is_prime(l)) {
        let roots = RootsOfUnity::new(ell).unwrap();
        let mut traces: Vec<u64> = classes(ell)
            .map(|c| {
                let r = roots.representative(c);
                (r.a + r.d).coords()[0]
            })
            .collect();
        let n = traces.len();
        traces.sort();
        traces.dedup();
        assert_eq!(traces.len(), n, "l = {ell}");
    }
}
