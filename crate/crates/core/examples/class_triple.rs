//! Group data of `PSL₂(ℓ)` at `p`: order, Sylow exponent, inertia
//! candidates, and the class triple with valuations `(0, a − 1, a)`.
//!
//! ```text
//! cargo run --example class_triple -- 7 97
//! ```

use wildram::psl2::{class_order, group_params, inertia_candidates, select_triple};
use wildram::ramification::{base_sigma, BaseSigma};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (p, ell) = match args.as_slice() {
        [p, ell] => (*p, *ell),
        _ => (7, 97),
    };
    let gp = group_params(p, ell)?;
    println!("|PSL2({ell})| = {}, a = v_{p}(l^2 - 1) = {}, m_G = {}", gp.order, gp.a, gp.m_g);
    for inertia in inertia_candidates(&gp) {
        match base_sigma(&inertia, ell) {
            Ok(BaseSigma::Known(s)) => println!("  candidate {inertia}: realized above {s}"),
            Ok(BaseSigma::Unknown) => println!("  candidate {inertia}: no explicit base sequence"),
            Err(_) => println!("  candidate {inertia}"),
        }
    }
    let triple = select_triple(p, ell)?;
    println!("triple ({:?}):", triple.pattern);
    for cls in triple.classes {
        let o = class_order(ell, cls, p)?;
        println!("  {cls}: order {} in SL2, {} in PSL2, v_{p} = {}", o.sl2_order, o.psl2_order, o.vp_order);
    }
    Ok(())
}
