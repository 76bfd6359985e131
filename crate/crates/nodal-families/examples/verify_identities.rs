//! Run the full identity suite and print one line per check.
//!
//! Run with: cargo run --example verify_identities

use nodal_families::identities::run_suite;

fn main() {
    let reports = run_suite("all").expect("the default suite exists");
    let mut failures = 0;
    for r in &reports {
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!("{status}  {:<28} {}", r.name, r.anchor);
        if !r.pass {
            println!("      witness: {}", r.witness);
            failures += 1;
        }
    }
    println!("\n{} checks, {} failures", reports.len(), failures);
    std::process::exit(if failures == 0 { 0 } else { 1 });
}
