//! Census of the structural nodes of a tetrahedral branch quartic, the
//! 13th node from the gradient construction, and the numeric cross-check.
//!
//! Run with: cargo run --release --example node_census

use nodal_families::families::{l_from_point, QuadricContext, X_VARS};
use nodal_families::numeric::{censuses_agree, numeric_singular_search, SearchConfig};
use nodal_families::poly::MultiPoly;
use nodal_families::scalar::{frac, int, Scalar};
use nodal_families::singular::{
    distinct_points, structural_nodes_tetrahedral, verify_singular, PointCoords,
};

fn xp(s: &str) -> MultiPoly {
    MultiPoly::parse(&X_VARS, s).unwrap()
}

fn main() {
    let ctx = QuadricContext::new();
    let planes = [
        xp("x0 + 2*x1 + x2 + 2*x3"),
        xp("-2*x0 + x1 + x2"),
        xp("-x0 - 2*x2"),
        xp("-2*x0 + x2 + 2*x3"),
    ];

    // 12 structural nodes over the tetrahedron edges
    let census = structural_nodes_tetrahedral(&ctx.q, &planes, &int(1)).unwrap();
    println!("tetrahedral quartic: Q^2 - L1 L2 L3 L4");
    println!("structural nodes:    {}", census.records.len());
    for r in &census.records {
        if let PointCoords::Exact(p) = &r.point {
            let txt: Vec<String> = p.iter().map(Scalar::to_string).collect();
            println!("  ({})  rank {}  {:?}", txt.join(" : "), r.hessian_rank, r.classification);
        }
    }

    // add the 13th node at a chosen point near the degeneration locus
    let k = planes[0].mul(&planes[1]).mul(&planes[2]);
    let p = [int(1), int(-1), int(2), frac(-199, 100)];
    let aa = ctx.q.evaluate(&p).unwrap()
        / (Scalar::from_integer(2.into()) * k.evaluate(&p).unwrap());
    println!("\n13th node point P = (1 : -1 : 2 : -199/100), alpha product = {aa}");
    let l4 = l_from_point(&ctx.q, &k, &aa, &p).unwrap();
    println!("derived plane L4:    {l4}");
    let factor = &aa * Scalar::from_integer(4.into());
    let census13 = structural_nodes_tetrahedral(
        &ctx.q,
        &[planes[0].clone(), planes[1].clone(), planes[2].clone(), l4],
        &factor,
    )
    .unwrap();
    let mut records = census13.records.clone();
    records.push(verify_singular(&census13.quartic, &p));
    println!("node count:          {}", distinct_points(&records, 1e-8));

    // numeric oracle agreement
    let cfg = SearchConfig {
        starts_per_chart: 2000,
        seed: 1,
        ..Default::default()
    };
    let numeric = numeric_singular_search(&census13.quartic, &cfg);
    println!(
        "numeric oracle:      {} clusters, exclusive agreement: {}",
        numeric.len(),
        censuses_agree(&records, &numeric, 1e-8, true)
    );
}
