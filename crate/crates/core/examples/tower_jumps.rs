//! Upper jumps of an explicit Artin-Schreier-Witt tower, from the degree
//! recurrence and, for two layers or fewer, from the conductor computation.
//!
//! ```text
//! cargo run --example tower_jumps
//! cargo run --example tower_jumps -- path/to/tower.txt
//! ```

use wildram::asw::{oracle_detail, predicted_jumps, validate_spec, TowerSpec};
use wildram::exactmath::FpPolynomial;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let towers = match std::env::args().nth(1) {
        Some(path) => vec![TowerSpec::parse(&std::fs::read_to_string(path)?)?],
        None => vec![
            TowerSpec::new(7, 2, 1, vec![FpPolynomial::monomial(7, 1, 3)])?,
            TowerSpec::new(3, 1, 0, vec![FpPolynomial::monomial(3, 1, 2), FpPolynomial::monomial(3, 1, 5)])?,
            TowerSpec::new(3, 1, 0, vec![FpPolynomial::monomial(3, 1, 2), FpPolynomial::monomial(3, 1, 7)])?,
            TowerSpec::new(5, 1, 0, vec![FpPolynomial::new(5, vec![0, 0, 0, 1, 0, 1])?])?,
        ],
    };
    for t in towers {
        print!("{}", t.format());
        let verdict = validate_spec(&t);
        if verdict.valid {
            println!("  recurrence: {}", predicted_jumps(&t)?);
        } else {
            println!("  not in normal form: {}", verdict.violations.join("; "));
        }
        if t.r() <= 2 {
            let o = oracle_detail(&t)?;
            println!("  oracle:     {} (lower {})", o.upper, o.lower);
        }
    }
    Ok(())
}
