//! The torus-action worked instance: the degeneration locus curve, its
//! cusps and its double points.
//!
//! Run with: cargo run --example torus_locus

use nodal_families::dualcurve::{
    dual_curve_param, dual_quartic_param, example_a, find_cusps, find_double_points, torus_locus,
};
use nodal_families::scalar::{frac, int};

fn main() {
    let a = example_a();
    println!("K(t, 1) = 1 + 7/2 t + 7/2 t^2 + t^3  (factors (t+1)(t+2)(t+1/2))\n");

    let curve = torus_locus(&a).unwrap();
    println!(
        "s(t)            = ({}) / ({})",
        curve.s.numerator().to_string_in("t"),
        curve.s.denominator().to_string_in("t")
    );
    println!(
        "alpha1 alpha2(t) = ({}) / ({})",
        curve.alpha_product.numerator().to_string_in("t"),
        curve.alpha_product.denominator().to_string_in("t")
    );

    let cusps = find_cusps(&curve, (-5.0, 5.0), 1e-9);
    println!("\nreal cusps in [-5, 5]: {:?}", cusps.real_cusps);
    println!("complex critical count: {}", cusps.complex_count);

    let dps = find_double_points(&curve, 1e-9);
    println!("\ndouble points:");
    for d in &dps {
        println!(
            "  t1 = {:+.9}, t2 = {:+.9}  ->  (s, alpha1 alpha2) = ({:.9}, {:.9})",
            d.t1, d.t2, d.s, d.alpha_product
        );
    }

    // evaluate the exact parametrizations at a rational parameter
    let t = frac(1, 3);
    let psi = dual_quartic_param(&a).unwrap();
    let dual = dual_curve_param(&a).unwrap();
    let img = dual.eval(&t, &int(1));
    println!("\nat t = 1/3:");
    println!(
        "  dual quartic point (x0^2 x3^2 : x0 K : x3 K) = ({} : {} : {})",
        psi.eval(&t, &int(1))[0],
        psi.eval(&t, &int(1))[1],
        psi.eval(&t, &int(1))[2]
    );
    println!("  dual curve point (beta : s : 1)-chart = ({} : {} : {})", img[0], img[1], img[2]);
    println!(
        "  locus: s = {}, alpha1 alpha2 = {}",
        curve.s.eval(&t).unwrap(),
        curve.alpha_product.eval(&t).unwrap()
    );
}
