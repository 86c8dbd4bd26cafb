//! Explicit monoids from text files: subgroups, solvability and division.
//!
//! Run from `crates/core` with `cargo run --example monoid_files`.

use regalg::constructions::{divides, DivisionBudget};
use regalg::monoid::{is_solvable, maximal_subgroups, parse_monoid_text, Monoid};
use regalg::varieties::{check_variety, VarietyId};

fn main() -> regalg::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let read = |name: &str| std::fs::read_to_string(format!("{dir}/{name}")).expect("fixture file");
    let s3 = parse_monoid_text(&read("s3.monoid"))?.monoid;
    let z2 = parse_monoid_text(&read("z2.monoid"))?.monoid;

    let group = &maximal_subgroups(&s3)[0];
    let series: Vec<usize> = group.derived_series(&s3).iter().map(|g| g.order()).collect();
    println!(
        "S3 derived series orders {series:?}, solvable {}",
        is_solvable(group, &s3)
    );
    for v in [VarietyId::G, VarietyId::Ab, VarietyId::GSol] {
        println!("S3 in {v}: {}", check_variety(&s3, v)?.member);
    }
    println!("Z2 divides S3: {:?}", divides(&z2, &s3, DivisionBudget::default()));

    // S5 generated by a transposition and a 5-cycle is not solvable.
    let s5 = Monoid::from_transformations(5, &[('s', vec![1, 0, 2, 3, 4]), ('c', vec![1, 2, 3, 4, 0])], 1000)?;
    let verdict = check_variety(&s5, VarietyId::MSol)?;
    println!("S5 in M_sol: {}", verdict.member);
    if let Some(w) = verdict.witness {
        println!("  {}", w.describe(&s5));
    }
    Ok(())
}
