//! Raising the jumps of a tower by adding one dominant monomial per layer.
//!
//! ```text
//! cargo run --example deformation
//! ```

use wildram::asw::{deform, verify_deformation, TowerSpec};
use wildram::exactmath::FpPolynomial;
use wildram::ramification::JumpSequence;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (TowerSpec::new(7, 2, 1, vec![FpPolynomial::monomial(7, 1, 3)])?, "5/2"),
        (TowerSpec::new(3, 1, 0, vec![FpPolynomial::monomial(3, 1, 2), FpPolynomial::monomial(3, 1, 5)])?, "2,7"),
        (TowerSpec::new(3, 1, 0, vec![FpPolynomial::monomial(3, 1, 2), FpPolynomial::monomial(3, 1, 5)])?, "4,12"),
    ];
    for (tower, target) in cases {
        let target = JumpSequence::parse(target)?;
        let deformed = deform(&tower, &target, 1)?;
        let verdict = verify_deformation(&tower, &target, 1)?;
        println!("target {target}:");
        for (i, (old, new)) in tower.polys().iter().zip(deformed.polys()).enumerate() {
            println!("  x_{} = {old}  ->  {new}", i + 1);
        }
        println!(
            "  recurrence {}, oracle {}: {}",
            verdict.predicted,
            verdict.oracle.map_or("n/a".into(), |o| o.to_string()),
            if verdict.passed { "reached" } else { "MISSED" }
        );
    }
    Ok(())
}
