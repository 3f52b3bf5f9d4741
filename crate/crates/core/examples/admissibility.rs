//! Which upper jump sequences can occur for a given inertia group.
//!
//! ```text
//! cargo run --example admissibility -- 7 2 2 3/2
//! cargo run --example admissibility -- 7 1 1 1,7
//! ```
//! Arguments: `p m m_I jumps`.

use wildram::psl2::InertiaType;
use wildram::ramification::{is_admissible, JumpSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (p, m, m_i, jumps) = match args.as_slice() {
        [p, m, m_i, j] => (p.parse()?, m.parse()?, m_i.parse()?, JumpSequence::parse(j)?),
        _ => (7, 2, 2, JumpSequence::parse("3/2")?),
    };
    let inertia = InertiaType::new(p, jumps.len() as u32, m, m_i)?;
    let verdict = is_admissible(&inertia, &jumps)?;
    println!("{inertia}, jumps {jumps}: {}", if verdict.admissible { "admissible" } else { "not admissible" });
    for c in &verdict.conditions {
        let mark = if c.holds { "ok" } else { "FAILS" };
        match &c.witness {
            Some(w) => println!("  ({}) {mark}: {w}", c.condition.label()),
            None => println!("  ({}) {mark}", c.condition.label()),
        }
    }
    Ok(())
}
