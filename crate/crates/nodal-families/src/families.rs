//! Constructors for the explicit families: conic bundles over the quadric,
//! the two-equation deformation family, branch quartics, the torus-action
//! instance, the 14-nodal quartic family and the Kummer family, plus the
//! Segre and Igusa parametrizations.
//!
//! Variables are namespaced per space (`w*` fibre coordinates over ruling
//! coordinates `s*`/`t*`, `y*` fibre coordinates over `x*`, `z*` for the
//! parametrization source) so substitutions cannot capture accidentally.

use crate::poly::MultiPoly;
use crate::scalar::{serde_scalar, Scalar};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const X_VARS: [&str; 4] = ["x0", "x1", "x2", "x3"];
pub const ST_VARS: [&str; 4] = ["s0", "s1", "t0", "t1"];
pub const W_VARS: [&str; 7] = ["s0", "s1", "t0", "t1", "w0", "w1", "w2"];
pub const Y_VARS: [&str; 7] = ["x0", "x1", "x2", "x3", "y0", "y1", "y2"];
pub const Z_VARS: [&str; 4] = ["z0", "z1", "z2", "z3"];

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum FamilyError {
    #[error("phi must be bihomogeneous of type ({0},{0})")]
    WrongBidegree(u32),
    #[error("expected degree {expected} in the x variables, got {got}")]
    WrongDegree { expected: u32, got: u32 },
    #[error("point must not be a coordinate zero pair")]
    ZeroRulingPoint,
    #[error("the formula breaks down: {0} vanishes")]
    DegenerateFactor(String),
    #[error("constraint Q(P) - 2*alpha1*alpha2*K(P) = 0 violated (value {0})")]
    PointOffBlowup(String),
    #[error("the formula does not work: P lies on K = 0")]
    PointOnCubic,
    #[error("coefficient of c vanishes; c cannot be eliminated")]
    CannotEliminateC,
}

/// Sign slot for the quartic term of a family equation. Both forms appear
/// verbatim in different displayed equations, so constructors never flip
/// silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(&self, p: &MultiPoly) -> MultiPoly {
        match self {
            Sign::Plus => p.clone(),
            Sign::Minus => p.neg(),
        }
    }
}

/// The standard quadric x0*x3 - x1*x2 = 0 together with its ruling
/// parametrization (x0, x1, x2, x3) = (s0t0, s0t1, s1t0, s1t1).
pub struct QuadricContext {
    pub q: MultiPoly,
    pub segre: BTreeMap<String, MultiPoly>,
}

impl QuadricContext {
    pub fn new() -> Self {
        let q = MultiPoly::parse(&X_VARS, "x0*x3 - x1*x2").unwrap();
        let mut segre = BTreeMap::new();
        for (x, st) in [
            ("x0", "s0*t0"),
            ("x1", "s0*t1"),
            ("x2", "s1*t0"),
            ("x3", "s1*t1"),
        ] {
            segre.insert(x.to_string(), MultiPoly::parse(&ST_VARS, st).unwrap());
        }
        QuadricContext { q, segre }
    }

    /// Restriction of a polynomial in the x variables to the quadric, in
    /// ruling coordinates.
    pub fn restrict(&self, p: &MultiPoly) -> MultiPoly {
        p.substitute(&self.segre)
    }

    /// Embed a ruling point (a0:a1 ; b0:b1) as a point of projective
    /// 3-space on the quadric.
    pub fn embed(&self, a: &(Scalar, Scalar), b: &(Scalar, Scalar)) -> [Scalar; 4] {
        [
            &a.0 * &b.0,
            &a.0 * &b.1,
            &a.1 * &b.0,
            &a.1 * &b.1,
        ]
    }

    pub fn gradient_at(&self, p: &[Scalar]) -> Vec<Scalar> {
        self.q
            .gradient()
            .iter()
            .map(|g| g.evaluate(p).expect("point length"))
            .collect()
    }
}

impl Default for QuadricContext {
    fn default() -> Self {
        Self::new()
    }
}

/// Conic bundle w1 w2 - phi w0^2 = 0 (or + phi with the explicit sign slot)
/// over the quadric, phi bihomogeneous of type (n, n).
pub struct ConicBundleSpec {
    pub n: u32,
    pub phi: MultiPoly,
    pub sign: Sign,
    pub equation: MultiPoly,
}

/// Check that `phi` (in the ruling variables) is bihomogeneous of type
/// (n, n).
pub fn bidegree(phi: &MultiPoly) -> Option<(i64, i64)> {
    let graded = phi.clone().with_grading(vec![
        st_weights(phi, &["s0", "s1"]),
        st_weights(phi, &["t0", "t1"]),
    ]);
    graded.multidegree().map(|d| (d[0], d[1]))
}

fn st_weights(p: &MultiPoly, names: &[&str]) -> Vec<i64> {
    p.vars()
        .iter()
        .map(|v| if names.contains(&v.as_str()) { 1 } else { 0 })
        .collect()
}

pub fn conic_bundle(n: u32, phi: &MultiPoly, sign: Sign) -> Result<ConicBundleSpec, FamilyError> {
    match bidegree(phi) {
        Some((a, b)) if a == n as i64 && b == n as i64 && !phi.is_zero() => {}
        _ => return Err(FamilyError::WrongBidegree(n)),
    }
    let w0 = MultiPoly::var(&W_VARS, "w0");
    let w1 = MultiPoly::var(&W_VARS, "w1");
    let w2 = MultiPoly::var(&W_VARS, "w2");
    let equation = (&w1 * &w2).add(&sign.apply(&(&(&w0 * &w0) * phi)));
    // weight vectors of the three-torus action on the bundle: the equation
    // must be homogeneous of weight (n, n, 2)
    let m = n as i64;
    let weight = |s: i64, t: i64, w0: i64, w1: i64, w2: i64| {
        equation
            .vars()
            .iter()
            .map(|v| match v.as_str() {
                "s0" | "s1" => s,
                "t0" | "t1" => t,
                "w0" => w0,
                "w1" => w1,
                _ => w2,
            })
            .collect::<Vec<i64>>()
    };
    let graded = equation.clone().with_grading(vec![
        weight(1, 0, 0, m - 1, 1),
        weight(0, 1, 0, 1, m - 1),
        weight(0, 0, 1, 1, 1),
    ]);
    assert!(
        graded.is_homogeneous(),
        "bundle equation lost weighted homogeneity"
    );
    Ok(ConicBundleSpec {
        n,
        phi: phi.clone(),
        sign,
        equation,
    })
}

/// The two-equation deformation family
///   y1 y2 +- K L y0^2 = 0,
///   alpha2 y1 + alpha1 y2 - Q y0 = 0
/// with K a cubic and L a linear form in the x variables.
#[derive(Clone, Debug)]
pub struct DeformationSpec {
    pub k: MultiPoly,
    pub l: MultiPoly,
    pub alpha1: Scalar,
    pub alpha2: Scalar,
    pub sign: Sign,
}

impl DeformationSpec {
    /// The displayed pair of equations in the y-bundle variables.
    pub fn equations(&self) -> (MultiPoly, MultiPoly) {
        let y0 = MultiPoly::var(&Y_VARS, "y0");
        let y1 = MultiPoly::var(&Y_VARS, "y1");
        let y2 = MultiPoly::var(&Y_VARS, "y2");
        let q = QuadricContext::new().q;
        let kl = self.k.mul(&self.l);
        let first = (&y1 * &y2).add(&self.sign.apply(&(&(&y0 * &y0) * &kl)));
        let second = &(&y1.scale(&self.alpha2) + &y2.scale(&self.alpha1)) - &(&q * &y0);
        (first, second)
    }

    /// Product alpha1 * alpha2 (only the product enters the branch locus).
    pub fn alpha_product(&self) -> Scalar {
        &self.alpha1 * &self.alpha2
    }

    /// Branch quartic of the double cover obtained by eliminating y1:
    /// Q^2 -+ 4 alpha1 alpha2 K L (sign slot matching the family).
    pub fn branch(&self) -> MultiPoly {
        branch_quartic(
            &self.k.mul(&self.l),
            &self.alpha_product(),
            &QuadricContext::new().q,
            self.sign,
        )
    }
}

pub fn deformation_family(
    k: &MultiPoly,
    l: &MultiPoly,
    alpha1: Scalar,
    alpha2: Scalar,
) -> Result<DeformationSpec, FamilyError> {
    for (p, expected) in [(k, 3u32), (l, 1u32)] {
        let got = p.total_degree();
        if got != expected || !p.is_homogeneous() || p.is_zero() {
            return Err(FamilyError::WrongDegree { expected, got });
        }
    }
    Ok(DeformationSpec {
        k: k.clone(),
        l: l.clone(),
        alpha1,
        alpha2,
        sign: Sign::Minus,
    })
}

/// Branch quartic Q^2 - 4 aa * Phi (sign slot: Minus gives the minus form,
/// Plus gives Q^2 + 4 aa * Phi as in the torus-action instance). `phi` is
/// the degree-4 product K*L; only the product alpha1*alpha2 matters.
pub fn branch_quartic(phi: &MultiPoly, aa: &Scalar, q: &MultiPoly, sign: Sign) -> MultiPoly {
    let four_aa = aa * Scalar::from_integer(4.into());
    (q * q).add(&sign.apply(&phi.scale(&four_aa)))
}

/// Tangent plane of the quadric at the ruling point (a0:a1 ; b0:b1):
/// a1 b1 x0 - a1 b0 x1 - a0 b1 x2 + a0 b0 x3.
pub fn tangent_plane(a: &(Scalar, Scalar), b: &(Scalar, Scalar)) -> Result<MultiPoly, FamilyError> {
    if (a.0.is_zero() && a.1.is_zero()) || (b.0.is_zero() && b.1.is_zero()) {
        return Err(FamilyError::ZeroRulingPoint);
    }
    Ok(MultiPoly::linear_form(
        &X_VARS,
        &[
            &a.1 * &b.1,
            -(&a.1 * &b.0),
            -(&a.0 * &b.1),
            &a.0 * &b.0,
        ],
    ))
}

/// Parameters of the 14-nodal family: the tangency points (1:lambda ; 1:mu)
/// and (a0:a1 ; b0:b1), two further linear forms K1, K2 and the deformation
/// parameters.
#[derive(Clone, Debug)]
pub struct FourteenNodalParams {
    pub lambda: Scalar,
    pub mu: Scalar,
    pub a: (Scalar, Scalar),
    pub b: (Scalar, Scalar),
    pub k1: MultiPoly,
    pub k2: MultiPoly,
    pub alpha1: Scalar,
    pub alpha2: Scalar,
}

/// The assembled 14-nodal family: the six tropes, the modified quadric and
/// the branch quartic Q^2 - 4 alpha1 alpha2 K1 K2 L0 L3.
#[derive(Clone, Debug)]
pub struct FourteenNodalFamily {
    pub spec: DeformationSpec,
    pub q: MultiPoly,
    pub k1: MultiPoly,
    pub k2: MultiPoly,
    pub l0: MultiPoly,
    pub l1: MultiPoly,
    pub l2: MultiPoly,
    pub l3: MultiPoly,
    /// The genericity factor (a1 - lambda a0)(b1 - mu b0).
    pub factor: Scalar,
    pub branch: MultiPoly,
}

pub fn fourteen_nodal_family(p: &FourteenNodalParams) -> Result<FourteenNodalFamily, FamilyError> {
    let fa = &p.a.1 - &(&p.lambda * &p.a.0);
    let fb = &p.b.1 - &(&p.mu * &p.b.0);
    if fa.is_zero() {
        return Err(FamilyError::DegenerateFactor("a1 - lambda*a0".into()));
    }
    if fb.is_zero() {
        return Err(FamilyError::DegenerateFactor("b1 - mu*b0".into()));
    }
    for f in [&p.k1, &p.k2] {
        if f.total_degree() != 1 || f.is_zero() {
            return Err(FamilyError::WrongDegree {
                expected: 1,
                got: f.total_degree(),
            });
        }
    }
    let one = Scalar::one();
    let l0 = tangent_plane(&(one.clone(), p.lambda.clone()), &(one.clone(), p.mu.clone()))?;
    let l3 = tangent_plane(&p.a, &p.b)?;
    let l1 = tangent_plane(&(one.clone(), p.lambda.clone()), &p.b)?;
    let l2 = tangent_plane(&p.a, &(one, p.mu.clone()))?;
    let factor = &fa * &fb;
    let aa = &p.alpha1 * &p.alpha2;
    let q0 = QuadricContext::new().q;
    let q = q0.add(&p.k1.mul(&p.k2).scale(&(&factor * &aa)));
    let branch = {
        let phi = p.k1.mul(&p.k2).mul(&l0).mul(&l3);
        (&q * &q).sub(&phi.scale(&(&aa * Scalar::from_integer(4.into()))))
    };
    let spec = DeformationSpec {
        k: p.k1.mul(&p.k2).mul(&l0),
        l: l3.clone(),
        alpha1: p.alpha1.clone(),
        alpha2: p.alpha2.clone(),
        sign: Sign::Minus,
    };
    Ok(FourteenNodalFamily {
        spec,
        q,
        k1: p.k1.clone(),
        k2: p.k2.clone(),
        l0,
        l1,
        l2,
        l3,
        factor,
        branch,
    })
}

/// Torus-action instance: K is a product of three factors a_i x0 + b_i x3
/// and the fourth factor is x0 + s x3; the quartic term carries a plus
/// sign.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TorusParams {
    #[serde(with = "serde_scalar_pairs")]
    pub factors: Vec<(Scalar, Scalar)>,
    #[serde(with = "serde_scalar")]
    pub s: Scalar,
    #[serde(with = "serde_scalar")]
    pub alpha1: Scalar,
    #[serde(with = "serde_scalar")]
    pub alpha2: Scalar,
}

impl TorusParams {
    /// Coefficients (A0, A1, A2, A3) of K(t, 1) = A0 + A1 t + A2 t^2 + A3 t^3
    /// built as the displayed symmetric functions of the factors.
    pub fn a_coefficients(&self) -> [Scalar; 4] {
        assert_eq!(self.factors.len(), 3, "the torus instance has three factors");
        let (a1, b1) = &self.factors[0];
        let (a2, b2) = &self.factors[1];
        let (a3, b3) = &self.factors[2];
        [
            b1 * b2 * b3.clone(),
            a1 * b2 * b3.clone() + b1 * a2 * b3.clone() + b1 * b2 * a3.clone(),
            a1 * a2 * b3.clone() + a1 * b2 * a3.clone() + b1 * a2 * a3.clone(),
            a1 * a2 * a3.clone(),
        ]
    }
}

pub fn torus_family(p: &TorusParams) -> Result<DeformationSpec, FamilyError> {
    if p.factors.len() != 3 {
        return Err(FamilyError::WrongDegree {
            expected: 3,
            got: p.factors.len() as u32,
        });
    }
    let x0 = MultiPoly::var(&X_VARS, "x0");
    let x3 = MultiPoly::var(&X_VARS, "x3");
    let mut k = MultiPoly::constant(&X_VARS, Scalar::one());
    for (a, b) in &p.factors {
        k = k.mul(&(&x0.scale(a) + &x3.scale(b)));
    }
    let l = &x0 + &x3.scale(&p.s);
    if k.total_degree() != 3 || k.is_zero() {
        return Err(FamilyError::WrongDegree {
            expected: 3,
            got: k.total_degree(),
        });
    }
    Ok(DeformationSpec {
        k,
        l,
        alpha1: p.alpha1.clone(),
        alpha2: p.alpha2.clone(),
        sign: Sign::Plus,
    })
}

/// Linear form making P a node of the branch quartic Q^2 - 4 aa K L: its
/// coefficient vector is grad Q(P) - aa * grad K(P), unnormalized (any
/// rescaling of a linear form keeps its zero plane).
pub fn l_from_point(
    q: &MultiPoly,
    k: &MultiPoly,
    aa: &Scalar,
    p: &[Scalar],
) -> Result<MultiPoly, FamilyError> {
    let qp = q.evaluate(p).expect("point length");
    let kp = k.evaluate(p).expect("point length");
    let two = Scalar::from_integer(2.into());
    let residual = &qp - &(&two * aa * &kp);
    if !residual.is_zero() {
        return Err(FamilyError::PointOffBlowup(residual.to_string()));
    }
    if !aa.is_zero() && kp.is_zero() {
        return Err(FamilyError::PointOnCubic);
    }
    let dq: Vec<Scalar> = q.gradient().iter().map(|g| g.evaluate(p).unwrap()).collect();
    let dk: Vec<Scalar> = k.gradient().iter().map(|g| g.evaluate(p).unwrap()).collect();
    let coeffs: Vec<Scalar> = dq.iter().zip(&dk).map(|(a, b)| a - &(aa * b)).collect();
    Ok(MultiPoly::linear_form(&X_VARS, &coeffs))
}

/// Basis of the linear system of quadrics through the five base points,
/// parametrizing the Segre cubic: substitution map from the six plane
/// coordinates (x, y, z, x', y', z') to polynomials in z0..z3.
pub fn segre_parametrization() -> BTreeMap<String, MultiPoly> {
    let p = |s: &str| MultiPoly::parse(&Z_VARS, s).unwrap();
    let mut m = BTreeMap::new();
    m.insert("x".to_string(), p("z1*z0 - z1*z2"));
    m.insert("y".to_string(), p("z2*z0 - z2*z3"));
    m.insert("z".to_string(), p("z3*z0 - z3*z1"));
    m.insert("xp".to_string(), p("z2*z1 - z2*z0"));
    m.insert("yp".to_string(), p("z3*z2 - z3*z0"));
    m.insert("zp".to_string(), p("z1*z3 - z1*z0"));
    m
}

/// Parametrization of the dual quartic in the coordinates
/// (a, b, c, a', b', c'): a = (z3-z1) z2 (z0-z1)(z0-z3),
/// a' = (z1-z3) z1 z3 (z0-z2), the rest by the cyclic permutation
/// z1 -> z2 -> z3 -> z1.
pub fn igusa_parametrization() -> BTreeMap<String, MultiPoly> {
    let z: Vec<MultiPoly> = (0..4)
        .map(|i| MultiPoly::var(&Z_VARS, &format!("z{i}")))
        .collect();
    // indices (i, j, k) run through the cyclic images of (1, 2, 3)
    let build = |i: usize, j: usize, k: usize| {
        let a = (&z[k] - &z[i]).mul(&z[j]).mul(&(&z[0] - &z[i])).mul(&(&z[0] - &z[k]));
        let ap = (&z[i] - &z[k]).mul(&z[i]).mul(&z[k]).mul(&(&z[0] - &z[j]));
        (a, ap)
    };
    let mut m = BTreeMap::new();
    let (a, ap) = build(1, 2, 3);
    m.insert("a".to_string(), a);
    m.insert("ap".to_string(), ap);
    let (b, bp) = build(2, 3, 1);
    m.insert("b".to_string(), b);
    m.insert("bp".to_string(), bp);
    let (c, cp) = build(3, 1, 2);
    m.insert("c".to_string(), c);
    m.insert("cp".to_string(), cp);
    m
}

pub const KUMMER_VARS: [&str; 5] = ["a", "b", "c", "ap", "bp"];
pub const KUMMER_Y_VARS: [&str; 8] = ["a", "b", "c", "ap", "bp", "y0", "y1", "y2"];

/// Parameters of the Kummer family chart: the blow-up coordinates
/// (a0:a1 ; b0:b1) and the deformation parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct KummerParams {
    #[serde(with = "serde_scalar")]
    pub a0: Scalar,
    #[serde(with = "serde_scalar")]
    pub a1: Scalar,
    #[serde(with = "serde_scalar")]
    pub b0: Scalar,
    #[serde(with = "serde_scalar")]
    pub b1: Scalar,
    #[serde(with = "serde_scalar")]
    pub alpha1: Scalar,
    #[serde(with = "serde_scalar")]
    pub alpha2: Scalar,
}

/// The Kummer family equations in the chart coordinates
/// (a, b, c, a', b'; y0:y1:y2), with c'' eliminated to an explicit
/// polynomial.
#[derive(Clone, Debug)]
pub struct KummerFamily {
    /// y1 y2 + a a' c c'' y0^2
    pub eq1: MultiPoly,
    /// alpha2 y1 + alpha1 y2 - (-alpha1 alpha2 c c'' + a a' - b b') y0
    pub eq2: MultiPoly,
    /// a + b + c + a' + b' - alpha1 alpha2 c''
    pub eq3: MultiPoly,
    /// The explicit expression for c''.
    pub c_dd: MultiPoly,
    /// Rational branch form (-alpha1 alpha2 c c'' + a a' - b b')^2
    /// + 4 alpha1 alpha2 a a' c c''.
    pub branch: MultiPoly,
}

/// c'' as the displayed polynomial in (a, b, c, a', b') with coefficients
/// in the blow-up coordinates.
pub fn kummer_c_dd(p: &KummerParams) -> MultiPoly {
    let aa = &p.alpha1 * &p.alpha2;
    let v = |n: &str| MultiPoly::var(&KUMMER_VARS, n);
    let ab = |x: &Scalar, y: &Scalar| x * y;
    let a1b0 = ab(&p.a1, &p.b0);
    let a1b1 = ab(&p.a1, &p.b1);
    let a0b0 = ab(&p.a0, &p.b0);
    let a0b1 = ab(&p.a0, &p.b1);
    let quad = &aa * &(&p.a0 * &p.a1) * &(&p.b0 * &p.b1);
    v("a").scale(&a1b0)
        .add(&v("b").scale(&a1b1))
        .add(&v("c").scale(&(&(&a1b0 + &a1b1) - &quad)))
        .add(&v("ap").scale(&(&(&a0b0 + &a1b1) - &quad)))
        .add(&v("bp").scale(&(&(&a0b1 + &a1b0) - &quad)))
}

pub fn kummer_family(p: &KummerParams) -> Result<KummerFamily, FamilyError> {
    let aa = &p.alpha1 * &p.alpha2;
    // coefficient of c in the linear relation:
    // (1 - aa a1 b0)(1 - aa a1 b1)
    let one = Scalar::one();
    let c_coeff = (&one - &(&aa * &(&p.a1 * &p.b0))) * (&one - &(&aa * &(&p.a1 * &p.b1)));
    if c_coeff.is_zero() {
        return Err(FamilyError::CannotEliminateC);
    }
    let c_dd = kummer_c_dd(p);
    let v = |n: &str| MultiPoly::var(&KUMMER_Y_VARS, n);
    let cc_dd = &v("c") * &c_dd;
    let aap = &v("a") * &v("ap");
    let bbp = &v("b") * &v("bp");
    let q_slot = &(&aap - &bbp) - &cc_dd.scale(&aa);
    let eq1 = (&v("y1") * &v("y2")).add(&(&(&v("y0") * &v("y0")) * &(&aap * &cc_dd)));
    let eq2 = (&v("y1").scale(&p.alpha2) + &v("y2").scale(&p.alpha1)).sub(&(&q_slot * &v("y0")));
    let eq3 = v("a")
        .add(&v("b"))
        .add(&v("c"))
        .add(&v("ap"))
        .add(&v("bp"))
        .sub(&c_dd.scale(&aa));
    let branch = {
        let four_aa = &aa * Scalar::from_integer(4.into());
        (&q_slot * &q_slot).add(&(&aap * &cc_dd).scale(&four_aa))
    };
    Ok(KummerFamily {
        eq1,
        eq2,
        eq3,
        c_dd,
        branch,
    })
}

mod serde_scalar_pairs {
    use super::Scalar;
    use crate::scalar::parse_scalar;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[(Scalar, Scalar)], s: S) -> Result<S::Ok, S::Error> {
        let raw: Vec<[String; 2]> = v
            .iter()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect();
        raw.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(Scalar, Scalar)>, D::Error> {
        let raw: Vec<[String; 2]> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|[a, b]| {
                Ok((
                    parse_scalar(&a).map_err(serde::de::Error::custom)?,
                    parse_scalar(&b).map_err(serde::de::Error::custom)?,
                ))
            })
            .collect()
    }
}

/// Wire format for family parameter files: {"family": "...", "params": ...}
/// with scalars as "p/q" strings and polynomials in the canonical text
/// serialization. Round-trips bit-exactly.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "kebab-case")]
pub enum FamilySpecJson {
    ConicBundle {
        n: u32,
        phi: String,
        sign: Sign,
    },
    Deformation {
        k: String,
        l: String,
        alpha1: String,
        alpha2: String,
    },
    Tetrahedral {
        planes: [String; 4],
        #[serde(default)]
        factor: Option<String>,
    },
    TetrahedralThirteen {
        planes: [String; 3],
        point: [String; 4],
    },
    FourteenNodal {
        lambda: String,
        mu: String,
        a: [String; 2],
        b: [String; 2],
        k1: String,
        k2: String,
        alpha1: String,
        alpha2: String,
    },
    Torus(TorusParams),
    Kummer(KummerParams),
}

impl FamilySpecJson {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family spec serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
