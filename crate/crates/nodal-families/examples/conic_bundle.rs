//! Build conic bundles over the quadric and the two-equation deformation
//! family, and print their defining polynomials.
//!
//! Run with: cargo run --example conic_bundle

use nodal_families::families::{
    branch_quartic, conic_bundle, deformation_family, QuadricContext, Sign, ST_VARS, X_VARS,
};
use nodal_families::poly::MultiPoly;
use nodal_families::scalar::frac;

fn main() {
    // n = 1: the smallest bundle
    let phi = MultiPoly::parse(&ST_VARS, "s0*t0").unwrap();
    let cb = conic_bundle(1, &phi, Sign::Minus).unwrap();
    println!("n = 1 bundle:        {} = 0", cb.equation);

    // n = 3 with a product of three (1,1)-forms, the torus-action shape
    let factors = ["s0*t0 + s1*t1", "s0*t0 + 2*s1*t1", "2*s0*t0 + s1*t1"];
    let mut phi3 = MultiPoly::parse(&ST_VARS, "1").unwrap();
    for f in factors {
        phi3 = phi3.mul(&MultiPoly::parse(&ST_VARS, f).unwrap());
    }
    let cb3 = conic_bundle(3, &phi3, Sign::Plus).unwrap();
    println!("n = 3 torus bundle:  {} terms in the equation", cb3.equation.num_terms());

    // rejecting a form of the wrong bidegree
    let bad = MultiPoly::parse(&ST_VARS, "s0^2*t0^3").unwrap();
    println!("bidegree guard:      {:?}", conic_bundle(2, &bad, Sign::Minus).err().unwrap());

    // the deformation family with K a cubic, L a linear form
    let k = MultiPoly::parse(&X_VARS, "x0^3").unwrap();
    let l = MultiPoly::parse(&X_VARS, "x3").unwrap();
    let spec = deformation_family(&k, &l, frac(1, 2), frac(1, 2)).unwrap();
    let (eq1, eq2) = spec.equations();
    println!("family equation 1:   {eq1} = 0");
    println!("family equation 2:   {eq2} = 0");

    // its branch quartic
    let ctx = QuadricContext::new();
    let b = branch_quartic(&k.mul(&l), &spec.alpha_product(), &ctx.q, Sign::Minus);
    println!("branch quartic:      {b} = 0");
}
