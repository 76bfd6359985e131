//! The 14-nodal quartic family: tropes, the modified quadric, the census
//! of all fourteen nodes and the tangent-product identity.
//!
//! Run with: cargo run --release --example fourteen_nodal

use nodal_families::families::{fourteen_nodal_family, FourteenNodalParams, X_VARS};
use nodal_families::numeric::{censuses_agree, numeric_singular_search, SearchConfig};
use nodal_families::poly::MultiPoly;
use nodal_families::scalar::{frac, int};
use nodal_families::singular::{distinct_points, structural_nodes_fourteen, NodeClass};

fn xp(s: &str) -> MultiPoly {
    MultiPoly::parse(&X_VARS, s).unwrap()
}

fn main() {
    let params = FourteenNodalParams {
        lambda: int(-1),
        mu: int(-2),
        a: (int(1), int(-3)),
        b: (int(1), int(2)),
        k1: xp("2*x0 + x1 + x2"),
        k2: xp("2*x0 + 2*x1 + x2"),
        alpha1: frac(1, 10),
        alpha2: frac(1, 10),
    };
    let fam = fourteen_nodal_family(&params).unwrap();
    println!("tangent planes:");
    for (name, l) in [("L0", &fam.l0), ("L1", &fam.l1), ("L2", &fam.l2), ("L3", &fam.l3)] {
        println!("  {name} = {l}");
    }
    println!("genericity factor:  {}", fam.factor);
    println!("modified quadric Q: {}", fam.q);
    println!("branch quartic has {} terms", fam.branch.num_terms());
    // L0 L3 - L1 L2 is the stated multiple of the standard quadric
    let lhs = (&fam.l0.mul(&fam.l3)).sub(&fam.l1.mul(&fam.l2));
    let rhs = xp("x0*x3 - x1*x2").scale(&fam.factor);
    println!("L0 L3 - L1 L2 == factor * (x0 x3 - x1 x2): {}", lhs == rhs);

    let aa_c2 = &(&params.alpha1 * &params.alpha2) * &(&fam.factor * &fam.factor);
    let census = structural_nodes_fourteen(
        (&fam.k1.scale(&aa_c2), &fam.k2),
        (&fam.l0, &fam.l3),
        (&fam.l1, &fam.l2),
    )
    .unwrap();
    let nodes = distinct_points(&census.records, 1e-8);
    let a1 = census
        .records
        .iter()
        .filter(|r| r.classification == NodeClass::A1Node)
        .count();
    println!("census: {nodes} distinct nodes, {a1} ordinary double points");

    let cfg = SearchConfig {
        starts_per_chart: 2000,
        seed: 3,
        ..Default::default()
    };
    let numeric = numeric_singular_search(&census.quartic, &cfg);
    println!(
        "numeric oracle: {} clusters, exclusive agreement: {}",
        numeric.len(),
        censuses_agree(&census.records, &numeric, 1e-8, true)
    );
}
