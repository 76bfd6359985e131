//! Singular points of discriminant curves on the quadric and the singular
//! locus of a structured family fibre.
//!
//! Run with: cargo run --example discriminant_curve

use nodal_families::families::{deformation_family, tangent_plane, ST_VARS, X_VARS};
use nodal_families::poly::MultiPoly;
use nodal_families::scalar::int;
use nodal_families::singular::{
    discriminant_curve_nodes, family_singular_locus, DiscriminantInput, FiberPointKind,
};

fn sp(s: &str) -> MultiPoly {
    MultiPoly::parse(&ST_VARS, s).unwrap()
}

fn main() {
    // generic split (3,3)-curve: three conics in general position
    let generic = DiscriminantInput::Split(vec![
        sp("s0*t0 - s1*t1"),
        sp("2*s0*t0 + s0*t1 - 3*s1*t0"),
        sp("s0*t1 + s1*t0 + s1*t1"),
    ]);
    let r = discriminant_curve_nodes(&generic, 1).unwrap();
    println!(
        "generic split (3,3): delta = {}, {} distinct nodes, exact = {}",
        r.delta, r.distinct, r.exact
    );

    // the torus-case (4,4)-curve: a degenerate conic and three concentric
    // ones; the nodes concentrate in two corank-3 points plus one node
    let torus = DiscriminantInput::Split(vec![
        sp("s0*t0"),
        sp("s0*t0 - s1*t1"),
        sp("2*s0*t0 - 3*s1*t1"),
        sp("5*s0*t0 - s1*t1"),
    ]);
    let r = discriminant_curve_nodes(&torus, 1).unwrap();
    println!(
        "torus (4,4):        delta = {}, {} distinct support points",
        r.delta, r.distinct
    );

    // a smooth (2,2)-curve through the numeric fallback: no nodes
    let smooth = MultiPoly::parse(
        &ST_VARS,
        "s0^2*t0^2 + s1^2*t1^2 + s0*s1*t0*t1 + s0^2*t1^2 + s1^2*t0^2",
    )
    .unwrap();
    let r = discriminant_curve_nodes(&DiscriminantInput::General(smooth), 7).unwrap();
    println!("smooth (2,2):       {} nodes found numerically", r.points.len());

    // singular locus of a family fibre over alpha1 = 0
    let xp = |s: &str| MultiPoly::parse(&X_VARS, s).unwrap();
    let k1 = xp("x0 + 2*x1 + x2 + 2*x3");
    let k2 = xp("-2*x0 + x1 + x2");
    let k3 = xp("-x0 - 2*x2");
    let l = tangent_plane(&(int(1), int(2)), &(int(1), int(3))).unwrap();
    let spec = deformation_family(&k1.mul(&k2).mul(&k3), &l, int(0), int(1)).unwrap();
    let report = family_singular_locus(&spec, &[k1, k2, k3]).unwrap();
    println!("\nfibre over alpha1 = 0, alpha2 = 1:");
    for c in &report.nonisolated {
        println!("  non-isolated: {} (verified: {})", c.description, c.verified);
    }
    let pairs = report
        .isolated
        .iter()
        .filter(|p| p.kind == FiberPointKind::PairIntersection)
        .count();
    let tangencies = report
        .isolated
        .iter()
        .filter(|p| p.kind == FiberPointKind::Tangency)
        .count();
    println!("  isolated: {pairs} pair intersections, {tangencies} tangency points");
    println!(
        "  local normal form around a node: {} terms",
        report.normal_form.map(|p| p.num_terms()).unwrap_or(0)
    );
}
