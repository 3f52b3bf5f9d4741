//! Genus of a one-point cover from its group order, inertia and jumps.
//!
//! ```text
//! cargo run --example genus -- 1092 7 2 2 3/2
//! ```
//! Arguments: `|G| p m m_I jumps`.

use num_bigint::BigInt;
use wildram::psl2::InertiaType;
use wildram::ramification::{genus, JumpSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (order, p, m, m_i, jumps) = match args.as_slice() {
        [g, p, m, m_i, j] => (g.parse::<BigInt>()?, p.parse()?, m.parse()?, m_i.parse()?, JumpSequence::parse(j)?),
        _ => (BigInt::from(1092), 7, 2, 2, JumpSequence::parse("3/2")?),
    };
    let inertia = InertiaType::new(p, jumps.len() as u32, m, m_i)?;
    let g = genus(&order, &inertia, &jumps)?;
    println!("|G| = {order}, I = {inertia}, jumps {jumps}");
    println!("  deg R = {}", g.divisor_degree);
    println!("  genus = {} ({:?})", g.value, g.status);
    Ok(())
}
