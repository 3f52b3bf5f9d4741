//! Generation and branch-cycle checks in small groups `ℤ/pʳ ⋊ ℤ/m`.
//!
//! ```text
//! cargo run --example obstruction
//! ```

use wildram::psl2::InertiaType;
use wildram::vancycles::{branch_cycle_feasible, generation_obstruction, SemidirectGroup};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for inertia in [InertiaType::dihedral(3, 2)?, InertiaType::dihedral(7, 1)?, InertiaType::new(7, 1, 6, 3)?] {
        let group = SemidirectGroup::new(&inertia)?;
        println!("{inertia} (unit {}):", group.unit);
        for vp in 0..=inertia.r {
            let blocked = generation_obstruction(&inertia, vp)?;
            println!(
                "  p-element of order | {}^{vp} plus a tame element {} generate",
                inertia.p,
                if blocked { "cannot" } else { "can" }
            );
        }
        for orders in [vec![2, inertia.p], vec![2, 2, inertia.p_part()], vec![inertia.order(), inertia.order()]] {
            println!("  branch cycle {orders:?}: {}", branch_cycle_feasible(&group, &orders)?);
        }
    }
    Ok(())
}
