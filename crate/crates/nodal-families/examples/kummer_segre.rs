//! The cubic/quartic dual pair and the Kummer family chart: the
//! parametrizations, their defining identities, and the reducible-fibre
//! specialization.
//!
//! Run with: cargo run --example kummer_segre

use nodal_families::families::{
    igusa_parametrization, kummer_family, segre_parametrization, KummerParams,
};
use nodal_families::identities::verify_segre_igusa;
use nodal_families::poly::MultiPoly;
use nodal_families::scalar::{frac, int};

fn main() {
    let segre = segre_parametrization();
    println!("cubic parametrization basis:");
    for key in ["x", "y", "z", "xp", "yp", "zp"] {
        println!("  {key:>2} = {}", segre[key]);
    }
    let igusa = igusa_parametrization();
    println!("\ndual quartic parametrization (a and a' shown; rest cyclic):");
    println!("   a = {}", igusa["a"]);
    println!("  a' = {}", igusa["ap"]);

    println!("\nidentity checks:");
    for r in verify_segre_igusa() {
        println!("  {}  {}", if r.pass { "PASS" } else { "FAIL" }, r.name);
    }

    // a generic chart instance of the Kummer family
    let params = KummerParams {
        a0: int(1),
        a1: int(2),
        b0: int(3),
        b1: int(5),
        alpha1: frac(1, 7),
        alpha2: frac(1, 11),
    };
    let fam = kummer_family(&params).unwrap();
    println!("\nKummer chart equations (c'' eliminated):");
    println!("  eq1 terms: {}", fam.eq1.num_terms());
    println!("  eq2 terms: {}", fam.eq2.num_terms());
    println!("  linear relation: {}", fam.eq3);
    println!("  branch form terms: {}", fam.branch.num_terms());

    // on the reducible-fibre locus the c-coefficient vanishes and the
    // elimination guard fires
    let degenerate = KummerParams {
        a0: int(2),
        a1: int(2),
        b0: int(3),
        b1: int(5),
        alpha1: frac(1, 10),
        alpha2: int(1),
    };
    println!(
        "\nreducible-fibre parameters rejected: {:?}",
        kummer_family(&degenerate).err().unwrap()
    );

    // alpha = 0 limit: branch degenerates to (a a' - b b')^2
    let flat = KummerParams {
        alpha1: int(0),
        alpha2: int(0),
        ..params
    };
    let fam0 = kummer_family(&flat).unwrap();
    let v = |n: &str| MultiPoly::var(&nodal_families::families::KUMMER_Y_VARS, n);
    let d = (&v("a") * &v("ap")).sub(&(&v("b") * &v("bp")));
    println!(
        "alpha -> 0 branch is the double quadric (a a' - b b')^2: {}",
        fam0.branch == (&d * &d)
    );
}
