//! Converting between upper and lower jumps with Herbrand's functions.
//!
//! ```text
//! cargo run --example herbrand -- 7 2 2 1/2,7/2
//! ```
//! Arguments: `p m m_I upper_jumps`.

use wildram::exactmath::rat;
use wildram::psl2::InertiaType;
use wildram::ramification::{lower_from_upper, upper_from_lower, HerbrandFunction, JumpSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (p, m, m_i, upper) = match args.as_slice() {
        [p, m, m_i, j] => (p.parse()?, m.parse()?, m_i.parse()?, JumpSequence::parse(j)?),
        _ => (7, 2, 2, JumpSequence::parse("1/2,7/2")?),
    };
    let inertia = InertiaType::new(p, upper.len() as u32, m, m_i)?;
    let lower = lower_from_upper(&inertia, &upper)?;
    println!("{inertia}: upper {upper} <-> lower {lower}");
    assert_eq!(upper_from_lower(&inertia, &lower)?, upper);

    let phi = HerbrandFunction::new(&inertia, &lower)?;
    for h in lower.jumps() {
        println!("  phi({h}) = {}", phi.phi(h));
    }
    let beyond = lower.last() + rat(10, 1);
    println!("  phi({beyond}) = {}", phi.phi(&beyond));
    println!("  psi(1) = {}", phi.psi(&rat(1, 1)));
    Ok(())
}
