//! Exhaustively certifies the subgroup facts behind the dihedral one-point
//! cover for small `PSL₂(ℓ)`.
//!
//! ```text
//! cargo run --release --example subgroup_claims -- 7 13
//! ```

use wildram::psl2::{verify_subgroup_claims, DEFAULT_SUBGROUP_BUDGET};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (p, ell) = match args.as_slice() {
        [p, ell] => (*p, *ell),
        _ => (7, 13),
    };
    let report = verify_subgroup_claims(p, ell, DEFAULT_SUBGROUP_BUDGET)?;
    println!("PSL2({ell}), |G| = {}, p = {p}", report.group_order);
    println!("  subgroups (1- and 2-generated): {}", report.subgroups);
    println!(
        "  new from a third generator: {} sets, {} isomorphism fingerprints",
        report.new_from_three_generators, report.new_types_from_three_generators
    );
    for claim in &report.claims {
        println!("  [{:?}] {}", claim.status, claim.statement);
        if let Some(w) = &claim.witness {
            println!("         witness: {w}");
        }
    }
    Ok(())
}
