//! Solutions of the vanishing-cycles equation and what they imply for
//! inertia.
//!
//! ```text
//! cargo run --example tail_configs -- 2 1
//! ```
//! Arguments: `m_G n_prim`.

use wildram::exactmath::rat;
use wildram::vancycles::{infer_inertia, solve_tail_configs, TailKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (m_g, n_prim) = match args.as_slice() {
        [m, n] => (*m as u64, *n),
        _ => (2, 1),
    };
    let configs = solve_tail_configs(m_g, n_prim, 0..=usize::MAX, &rat(2, 1))?;
    println!("m_G = {m_g}, {n_prim} primitive tail(s): {} configuration(s)", configs.len());
    for c in &configs {
        let parts: Vec<String> = c.tails().iter().map(|t| format!("{:?} {}", t.kind, t.sigma)).collect();
        println!("  {{{}}}", parts.join(", "));
        for t in c.tails().iter().filter(|t| t.kind == TailKind::New) {
            for p in [3u64, 7] {
                let inf = infer_inertia(&t.sigma, p, m_g)?;
                println!(
                    "    p = {p}: r in {:?}, abelian inertia {}{}",
                    inf.allowed_r,
                    if inf.abelian_possible { "possible" } else { "excluded" },
                    if inf.extrapolated { " (bound extrapolated)" } else { "" }
                );
            }
        }
    }
    Ok(())
}
