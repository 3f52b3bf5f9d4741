//! Lists every admissible upper jump sequence below a bound.
//!
//! ```text
//! cargo run --example enumerate -- 7 2 2 2 15
//! ```
//! Arguments: `p r m m_I bound`.

use wildram::exactmath::parse_rational;
use wildram::psl2::InertiaType;
use wildram::ramification::enumerate_admissible;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (inertia, bound) = match args.as_slice() {
        [p, r, m, m_i, b] => (InertiaType::new(p.parse()?, r.parse()?, m.parse()?, m_i.parse()?)?, parse_rational(b)?),
        _ => (InertiaType::dihedral(7, 2)?, parse_rational("15")?),
    };
    let all = enumerate_admissible(&inertia, &bound);
    println!("{} admissible sequences for {inertia} with u_r <= {bound}", all.len());
    for jumps in &all {
        println!("  {jumps}");
    }
    Ok(())
}
