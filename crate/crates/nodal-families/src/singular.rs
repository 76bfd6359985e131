//! Singular points of branch quartics and family fibres: exact structural
//! censuses on the families' distinguished loci, classification by Hessian
//! rank, and exact certificates for conjugate (irrational) node pairs.
//!
//! For a homogeneous quartic F the operational definition of an ordinary
//! double point is: gradient zero and Hessian rank exactly 3. The Euler
//! relation forces the point itself into the Hessian kernel, so rank 3 is
//! the maximum at a singular point.

use crate::families::{DeformationSpec, QuadricContext, X_VARS, Y_VARS};
use crate::linalg;
use crate::poly::MultiPoly;
use crate::scalar::{to_f64, Scalar};
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum SingularError {
    #[error("planes {0} and {1} are proportional")]
    CoincidentPlanes(usize, usize),
    #[error("edge {0}/{1} lies in the quadric (non-isolated intersection)")]
    EdgeInQuadric(usize, usize),
    #[error("planes do not meet in a single point")]
    DegenerateTriple,
    #[error("factors {0} and {1} share a component")]
    SharedComponent(usize, usize),
    #[error("input is not square-free")]
    NotSquareFree,
    #[error("product of the supplied factors differs from the cubic of the family")]
    FactorMismatch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeClass {
    A1Node,
    HigherOrDegenerate,
    Nonsingular,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PointCoords {
    Exact(Vec<Scalar>),
    Numeric(Vec<f64>),
    /// Complex conjugate pair member, stored as (re, im) per coordinate.
    Complex(Vec<(f64, f64)>),
}

impl PointCoords {
    pub fn as_f64(&self) -> Option<Vec<f64>> {
        match self {
            PointCoords::Exact(v) => Some(v.iter().map(to_f64).collect()),
            PointCoords::Numeric(v) => Some(v.clone()),
            PointCoords::Complex(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, PointCoords::Exact(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Structural,
    Numeric,
}

#[derive(Debug, Clone)]
pub struct SingularPointRecord {
    pub point: PointCoords,
    /// Max-norm of the gradient at the point; identically zero for exact
    /// records.
    pub gradient_residual: f64,
    pub hessian_rank: usize,
    pub classification: NodeClass,
    pub conjugate_pair: bool,
    pub provenance: Provenance,
}

/// Canonical projective representative: first nonzero coordinate scaled
/// to 1.
pub fn normalize_projective(p: &[Scalar]) -> Vec<Scalar> {
    let nz = p.iter().find(|c| !c.is_zero()).expect("nonzero point");
    p.iter().map(|c| c / nz).collect()
}

pub fn hessian(f: &MultiPoly) -> Vec<Vec<MultiPoly>> {
    let vars: Vec<String> = f.vars().to_vec();
    let grads = f.gradient();
    grads
        .iter()
        .map(|g| {
            vars.iter()
                .map(|v| g.differentiate(v).expect("registry variable"))
                .collect()
        })
        .collect()
}

fn hessian_rank_at(hess: &[Vec<MultiPoly>], p: &[Scalar]) -> usize {
    let m: Vec<Vec<Scalar>> = hess
        .iter()
        .map(|row| row.iter().map(|h| h.evaluate(p).unwrap()).collect())
        .collect();
    linalg::rank(&m)
}

/// Exact singularity check of a homogeneous form at an exact projective
/// point: evaluates all partials and the Hessian rank.
pub fn verify_singular(f: &MultiPoly, p: &[Scalar]) -> SingularPointRecord {
    assert!(p.iter().any(|c| !c.is_zero()), "projective point must be nonzero");
    let grad_zero = f.gradient().iter().all(|g| g.evaluate(p).unwrap().is_zero());
    let hess = hessian(f);
    let rank = hessian_rank_at(&hess, p);
    let classification = if !grad_zero {
        NodeClass::Nonsingular
    } else if rank == 3 {
        NodeClass::A1Node
    } else {
        NodeClass::HigherOrDegenerate
    };
    SingularPointRecord {
        point: PointCoords::Exact(normalize_projective(p)),
        gradient_residual: 0.0,
        hessian_rank: rank,
        classification,
        conjugate_pair: false,
        provenance: Provenance::Structural,
    }
}

/// Coefficient row of a linear form, aligned with its registry.
fn linear_coeffs(l: &MultiPoly) -> Vec<Scalar> {
    assert!(l.total_degree() <= 1 && l.constant_term().is_zero());
    l.gradient()
        .iter()
        .map(|g| {
            assert!(g.is_constant(), "not a linear form");
            g.constant_term()
        })
        .collect()
}

/// The projective line cut out by two independent planes, as a basis pair.
fn line_basis(
    pi: &MultiPoly,
    pj: &MultiPoly,
    idx: (usize, usize),
) -> Result<(Vec<Scalar>, Vec<Scalar>), SingularError> {
    let rows = vec![linear_coeffs(pi), linear_coeffs(pj)];
    let ns = linalg::nullspace(&rows);
    if ns.len() != 2 {
        return Err(SingularError::CoincidentPlanes(idx.0, idx.1));
    }
    Ok((ns[0].clone(), ns[1].clone()))
}

/// Restriction of a polynomial to the line u*b0 + v*b1 as coefficients of
/// u^(d-k) v^k, degree d = total degree of `f` (zero rows allowed).
fn restrict_to_line(f: &MultiPoly, b0: &[Scalar], b1: &[Scalar]) -> Vec<Scalar> {
    let uv = ["u", "v"];
    let u = MultiPoly::var(&uv, "u");
    let v = MultiPoly::var(&uv, "v");
    let mut map = BTreeMap::new();
    for (i, name) in f.vars().iter().enumerate() {
        map.insert(name.clone(), (&u.scale(&b0[i])) + (&v.scale(&b1[i])));
    }
    let r = f.substitute(&map);
    let d = f.total_degree() as usize;
    let mut coeffs = vec![Scalar::zero(); d + 1];
    if r.is_zero() {
        return coeffs;
    }
    let vars = r.vars().to_vec();
    let vi = vars.iter().position(|n| n == "v").unwrap();
    for (e, c) in r.terms() {
        coeffs[e[vi] as usize] = c.clone();
    }
    coeffs
}

/// Arithmetic in the quadratic field Q[t]/(c20 t^2 + c11 t + c02) with
/// irreducible modulus: elements a + b t.
#[derive(Clone, Debug)]
struct QuadField {
    // t^2 = p t + q
    p: Scalar,
    q: Scalar,
}

#[derive(Clone, Debug, PartialEq)]
struct QuadElem {
    a: Scalar,
    b: Scalar,
}

impl QuadField {
    fn new(c20: &Scalar, c11: &Scalar, c02: &Scalar) -> Self {
        QuadField {
            p: -(c11 / c20),
            q: -(c02 / c20),
        }
    }

    fn zero(&self) -> QuadElem {
        QuadElem {
            a: Scalar::zero(),
            b: Scalar::zero(),
        }
    }

    fn from_poly(&self, coeffs: &[Scalar]) -> QuadElem {
        // reduce sum coeffs[k] t^k mod (t^2 - p t - q), ascending coeffs
        let mut a = Scalar::zero();
        let mut b = Scalar::zero();
        // t^k = alpha_k + beta_k t
        let mut alpha = Scalar::one();
        let mut beta = Scalar::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if k > 0 {
                // (alpha + beta t) * t = beta q + (alpha + beta p) t
                let na = &beta * &self.q;
                let nb = &alpha + &(&beta * &self.p);
                alpha = na;
                beta = nb;
            }
            a += c * &alpha;
            b += c * &beta;
        }
        QuadElem { a, b }
    }

    fn is_zero(&self, x: &QuadElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }

    fn mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        // (a1 + b1 t)(a2 + b2 t) = a1a2 + b1b2 q + (a1b2 + a2b1 + b1b2 p) t
        let bb = &x.b * &y.b;
        QuadElem {
            a: &(&x.a * &y.a) + &(&bb * &self.q),
            b: &(&x.a * &y.b) + &(&x.b * &y.a) + (&bb * &self.p),
        }
    }

    fn sub(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem {
            a: &x.a - &y.a,
            b: &x.b - &y.b,
        }
    }

    fn inv(&self, x: &QuadElem) -> QuadElem {
        // (a + bt)^-1: conjugate trick with t' = p - t (the other root):
        // (a + bt)(a + b(p - t)) = a^2 + abp - b^2 q  (rational)
        let n = &(&x.a * &x.a) + &(&(&x.a * &x.b) * &self.p) - &(&(&x.b * &x.b) * &self.q);
        assert!(!n.is_zero(), "inverting zero in quadratic field");
        QuadElem {
            a: (&x.a + &(&x.b * &self.p)) / &n,
            b: -(&x.b / &n),
        }
    }
}

/// Rank of a matrix over the quadratic field, by Gaussian elimination.
fn rank_quadfield(field: &QuadField, mut m: Vec<Vec<QuadElem>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = field.inv(&m[r][c].clone());
        for j in 0..cols {
            m[r][j] = field.mul(&m[r][j], &inv);
        }
        for i in 0..rows {
            if i != r && !field.is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = field.mul(&m[r][j], &f);
                    m[i][j] = field.sub(&m[i][j], &t);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Outcome of intersecting a projective line with a quadric.
enum LineQuadric {
    /// Two distinct rational points.
    Rational(Vec<Scalar>, Vec<Scalar>),
    /// Tangency: one doubled rational point.
    Tangent(Vec<Scalar>),
    /// Irrational or complex conjugate pair; c20 != 0 is guaranteed.
    Conjugate {
        c20: Scalar,
        c11: Scalar,
        c02: Scalar,
    },
    /// The whole line lies on the quadric.
    Contained,
}

fn intersect_line_quadric(quad: &MultiPoly, b0: &[Scalar], b1: &[Scalar]) -> LineQuadric {
    let r = restrict_to_line(quad, b0, b1);
    debug_assert_eq!(r.len(), 3);
    let (c20, c11, c02) = (r[0].clone(), r[1].clone(), r[2].clone());
    if c20.is_zero() && c11.is_zero() && c02.is_zero() {
        return LineQuadric::Contained;
    }
    let point_at = |u: &Scalar, v: &Scalar| -> Vec<Scalar> {
        b0.iter()
            .zip(b1)
            .map(|(x, y)| &(x * u) + &(y * v))
            .collect()
    };
    let disc = &(&c11 * &c11) - &(&(&c20 * &c02) * Scalar::from_integer(4.into()));
    if disc.is_zero() {
        // doubled root
        if c20.is_zero() {
            // c11 = 0 too, double root at v = 0
            return LineQuadric::Tangent(b0.to_vec());
        }
        let u = -(&c11 / &(&c20 * Scalar::from_integer(2.into())));
        return LineQuadric::Tangent(point_at(&u, &Scalar::one()));
    }
    if c20.is_zero() {
        // one root at infinity (v = 0), one affine root
        let u = -(&c02 / &c11);
        return LineQuadric::Rational(b0.to_vec(), point_at(&u, &Scalar::one()));
    }
    match crate::scalar::sqrt_exact(&disc) {
        Some(s) => {
            let two_a = &c20 * Scalar::from_integer(2.into());
            let u1 = &(&s - &c11) / &two_a;
            let u2 = &(-&s - &c11) / &two_a;
            LineQuadric::Rational(point_at(&u1, &Scalar::one()), point_at(&u2, &Scalar::one()))
        }
        None => LineQuadric::Conjugate { c20, c11, c02 },
    }
}

/// Exact certificate for a conjugate pair on a line: every gradient
/// component of `f` restricted to the line must be divisible by the
/// quadratic, and the Hessian rank over the quadratic field is computed
/// exactly. Returns (rank, classification) valid for both pair members.
fn conjugate_pair_certificate(
    f: &MultiPoly,
    b0: &[Scalar],
    b1: &[Scalar],
    c20: &Scalar,
    c11: &Scalar,
    c02: &Scalar,
) -> (usize, NodeClass) {
    let field = QuadField::new(c20, c11, c02);
    // gradient divisibility: restricted component reduces to 0 mod q
    let mut grad_zero = true;
    for g in f.gradient() {
        let coeffs = restrict_to_line(&g, b0, b1);
        // ascending in t = u/v: coefficient of u^(d-k) v^k at index k means
        // t-degree d-k; reverse for ascending t order
        let asc: Vec<Scalar> = coeffs.iter().rev().cloned().collect();
        if !field.is_zero(&field.from_poly(&asc)) {
            grad_zero = false;
            break;
        }
    }
    let hess = hessian(f);
    let m: Vec<Vec<QuadElem>> = hess
        .iter()
        .map(|row| {
            row.iter()
                .map(|h| {
                    if h.is_zero() {
                        field.zero()
                    } else {
                        let coeffs = restrict_to_line(h, b0, b1);
                        let asc: Vec<Scalar> = coeffs.iter().rev().cloned().collect();
                        field.from_poly(&asc)
                    }
                })
                .collect()
        })
        .collect();
    let rank = rank_quadfield(&field, m);
    let class = if !grad_zero {
        NodeClass::Nonsingular
    } else if rank == 3 {
        NodeClass::A1Node
    } else {
        NodeClass::HigherOrDegenerate
    };
    (rank, class)
}

/// Numeric coordinates of the two conjugate points (complex when the
/// discriminant is negative).
fn conjugate_pair_points(
    b0: &[Scalar],
    b1: &[Scalar],
    c20: &Scalar,
    c11: &Scalar,
    c02: &Scalar,
) -> Vec<PointCoords> {
    let (a, b, c) = (to_f64(c20), to_f64(c11), to_f64(c02));
    let disc = b * b - 4.0 * a * c;
    let b0f: Vec<f64> = b0.iter().map(to_f64).collect();
    let b1f: Vec<f64> = b1.iter().map(to_f64).collect();
    if disc >= 0.0 {
        let r = disc.sqrt();
        [(-b + r) / (2.0 * a), (-b - r) / (2.0 * a)]
            .iter()
            .map(|u| {
                PointCoords::Numeric(
                    b0f.iter().zip(&b1f).map(|(x, y)| x * u + y).collect(),
                )
            })
            .collect()
    } else {
        let re = -b / (2.0 * a);
        let im = (-disc).sqrt() / (2.0 * a);
        [im, -im]
            .iter()
            .map(|&imag| {
                PointCoords::Complex(
                    b0f.iter()
                        .zip(&b1f)
                        .map(|(x, y)| (x * re + y, x * imag))
                        .collect(),
                )
            })
            .collect()
    }
}

fn residual_f64(f: &MultiPoly, point: &PointCoords) -> f64 {
    match point.as_f64() {
        Some(p) => f
            .gradient()
            .iter()
            .map(|g| eval_f64(g, &p).abs())
            .fold(0.0, f64::max),
        None => 0.0,
    }
}

pub(crate) fn eval_f64(f: &MultiPoly, p: &[f64]) -> f64 {
    let mut acc = 0.0;
    for (e, c) in f.terms() {
        let mut t = to_f64(c);
        for (x, &k) in p.iter().zip(e) {
            t *= x.powi(k as i32);
        }
        acc += t;
    }
    acc
}

/// Records for a pair of points cut out on a line by a quadratic; shared by
/// the tetrahedral and 14-nodal censuses.
fn line_pair_records(
    f: &MultiPoly,
    quad_on_line: &MultiPoly,
    b0: &[Scalar],
    b1: &[Scalar],
    idx: (usize, usize),
) -> Result<Vec<SingularPointRecord>, SingularError> {
    match intersect_line_quadric(quad_on_line, b0, b1) {
        LineQuadric::Contained => Err(SingularError::EdgeInQuadric(idx.0, idx.1)),
        LineQuadric::Rational(p1, p2) => Ok(vec![verify_singular(f, &p1), verify_singular(f, &p2)]),
        LineQuadric::Tangent(p) => Ok(vec![verify_singular(f, &p)]),
        LineQuadric::Conjugate { c20, c11, c02 } => {
            let (rank, class) = conjugate_pair_certificate(f, b0, b1, &c20, &c11, &c02);
            Ok(conjugate_pair_points(b0, b1, &c20, &c11, &c02)
                .into_iter()
                .map(|pt| {
                    let residual = residual_f64(f, &pt);
                    SingularPointRecord {
                        point: pt,
                        gradient_residual: residual,
                        hessian_rank: rank,
                        classification: class,
                        conjugate_pair: true,
                        provenance: Provenance::Structural,
                    }
                })
                .collect())
        }
    }
}

/// Census of the structural nodes of Q^2 - factor * L1 L2 L3 L4: two per
/// edge of the plane tetrahedron, located exactly on Q.
pub struct TetrahedralCensus {
    pub quartic: MultiPoly,
    pub records: Vec<SingularPointRecord>,
}

pub fn structural_nodes_tetrahedral(
    q: &MultiPoly,
    planes: &[MultiPoly; 4],
    factor: &Scalar,
) -> Result<TetrahedralCensus, SingularError> {
    let product = planes[0]
        .mul(&planes[1])
        .mul(&planes[2])
        .mul(&planes[3])
        .scale(factor);
    let f = (q * q).sub(&product);
    let mut records = vec![];
    for i in 0..4 {
        for j in i + 1..4 {
            let (b0, b1) = line_basis(&planes[i], &planes[j], (i, j))?;
            records.extend(line_pair_records(&f, q, &b0, &b1, (i, j))?);
        }
    }
    Ok(TetrahedralCensus {
        quartic: f,
        records,
    })
}

/// Census of the 14 structural nodes of (u + v - w)^2 - 4uv where
/// u = x1 x2, v = y1 y2, w = z1 z2 are the three split quadratic factors:
/// 8 triple plane intersections and 6 points of pair-plus-quadric type.
pub struct FourteenCensus {
    pub quartic: MultiPoly,
    pub records: Vec<SingularPointRecord>,
}

pub fn structural_nodes_fourteen(
    x_pair: (&MultiPoly, &MultiPoly),
    y_pair: (&MultiPoly, &MultiPoly),
    z_pair: (&MultiPoly, &MultiPoly),
) -> Result<FourteenCensus, SingularError> {
    let u = x_pair.0.mul(x_pair.1);
    let v = y_pair.0.mul(y_pair.1);
    let w = z_pair.0.mul(z_pair.1);
    let t = u.add(&v).sub(&w);
    let f = (&t * &t).sub(&u.mul(&v).scale(&Scalar::from_integer(4.into())));
    let mut records = vec![];
    // 8 points: one plane from each pair
    for a in [x_pair.0, x_pair.1] {
        for b in [y_pair.0, y_pair.1] {
            for c in [z_pair.0, z_pair.1] {
                let rows = vec![linear_coeffs(a), linear_coeffs(b), linear_coeffs(c)];
                let ns = linalg::nullspace(&rows);
                if ns.len() != 1 {
                    return Err(SingularError::DegenerateTriple);
                }
                records.push(verify_singular(&f, &ns[0]));
            }
        }
    }
    // 6 points: a pair line against the difference of the other two
    // products
    let combos: [((&MultiPoly, &MultiPoly), MultiPoly); 3] = [
        (x_pair, v.sub(&w)),
        (y_pair, u.sub(&w)),
        (z_pair, u.sub(&v)),
    ];
    for (k, (pair, quad)) in combos.into_iter().enumerate() {
        let (b0, b1) = line_basis(pair.0, pair.1, (k, k))?;
        records.extend(line_pair_records(&f, &quad, &b0, &b1, (k, k))?);
    }
    Ok(FourteenCensus {
        quartic: f,
        records,
    })
}

/// Deduplicate records by canonical projective coordinates (exact records
/// only; numeric records are deduplicated by distance).
pub fn distinct_points(records: &[SingularPointRecord], tol: f64) -> usize {
    let mut exact: Vec<Vec<Scalar>> = vec![];
    let mut numeric: Vec<Vec<f64>> = vec![];
    let mut complex: Vec<Vec<(f64, f64)>> = vec![];
    for r in records {
        match &r.point {
            PointCoords::Exact(p) => {
                let n = normalize_projective(p);
                if !exact.contains(&n) {
                    exact.push(n);
                }
            }
            PointCoords::Numeric(p) => {
                let n = normalize_numeric(p);
                if !numeric
                    .iter()
                    .any(|q| q.iter().zip(&n).all(|(a, b)| (a - b).abs() < tol))
                {
                    numeric.push(n);
                }
            }
            PointCoords::Complex(p) => {
                if !complex.iter().any(|q| {
                    q.iter()
                        .zip(p)
                        .all(|(a, b)| (a.0 - b.0).abs() < tol && (a.1 - b.1).abs() < tol)
                }) {
                    complex.push(p.clone());
                }
            }
        }
    }
    exact.len() + numeric.len() + complex.len()
}

/// Scale so the largest-magnitude coordinate is +-1 with the first
/// significant coordinate positive.
pub fn normalize_numeric(p: &[f64]) -> Vec<f64> {
    let m = p.iter().cloned().fold(0.0f64, |a, b| a.max(b.abs()));
    if m == 0.0 {
        return p.to_vec();
    }
    let mut v: Vec<f64> = p.iter().map(|x| x / m).collect();
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-9) {
        if *first < 0.0 {
            v = v.iter().map(|x| -x).collect();
        }
    }
    v
}

/// One singular point of a family fibre: base point, fibre coordinates and
/// the exact rank of the two-equation Jacobian (singular means rank <= 1).
#[derive(Debug, Clone)]
pub struct FiberSingularPoint {
    pub x: PointCoords,
    pub y: Vec<Scalar>,
    pub jacobian_rank: usize,
    pub kind: FiberPointKind,
    pub conjugate_pair: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberPointKind {
    PairIntersection,
    Tangency,
}

/// A non-isolated singular component of a fibre over alpha1 alpha2 = 0,
/// with sample points on which the rank condition was verified exactly.
#[derive(Debug, Clone)]
pub struct NonisolatedComponent {
    pub description: String,
    pub samples: Vec<(Vec<Scalar>, Vec<Scalar>)>,
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct FamilyLocusReport {
    pub nonisolated: Vec<NonisolatedComponent>,
    pub isolated: Vec<FiberSingularPoint>,
    /// Local normal form over alpha1 = 0, alpha2 != 0 (chart x3 = 1 with
    /// the quadric as first coordinate), for documentation.
    pub normal_form: Option<MultiPoly>,
}

/// Jacobian of the two family equations with respect to
/// (y1, y2, y0, x0..x3), evaluated exactly; returns the rank.
pub fn fiber_jacobian_rank(spec: &DeformationSpec, x: &[Scalar], y: &[Scalar]) -> usize {
    let (f1, f2) = spec.equations();
    let order = ["y1", "y2", "y0", "x0", "x1", "x2", "x3"];
    let point: Vec<Scalar> = Y_VARS
        .iter()
        .map(|v| match *v {
            "x0" => x[0].clone(),
            "x1" => x[1].clone(),
            "x2" => x[2].clone(),
            "x3" => x[3].clone(),
            "y0" => y[0].clone(),
            "y1" => y[1].clone(),
            _ => y[2].clone(),
        })
        .collect();
    let m: Vec<Vec<Scalar>> = [&f1, &f2]
        .iter()
        .map(|f| {
            order
                .iter()
                .map(|v| f.differentiate(v).unwrap().evaluate(&point).unwrap())
                .collect()
        })
        .collect();
    linalg::rank(&m)
}

/// Pole of a plane with respect to the standard quadric x0 x3 - x1 x2;
/// the plane is tangent exactly when its pole lies on it.
fn quadric_pole(coeffs: &[Scalar]) -> Vec<Scalar> {
    vec![
        coeffs[3].clone(),
        -coeffs[2].clone(),
        -coeffs[1].clone(),
        coeffs[0].clone(),
    ]
}

/// Singular locus of a family fibre with structured Phi = (prod k_factors) * L.
///
/// Part (i): non-isolated component intersections in y0 = 0 when an alpha
/// vanishes. Part (ii): isolated points with y1 = y2 = 0 over Q = Phi = 0
/// where the differentials are proportional (pair intersections and
/// tangency points of the factor planes). Part (iii): the local normal
/// form over alpha1 = 0, alpha2 != 0.
pub fn family_singular_locus(
    spec: &DeformationSpec,
    k_factors: &[MultiPoly],
) -> Result<FamilyLocusReport, SingularError> {
    let prod = k_factors
        .iter()
        .fold(MultiPoly::constant(&X_VARS, Scalar::one()), |a, b| a.mul(b));
    if prod != spec.k {
        return Err(SingularError::FactorMismatch);
    }
    let ctx = QuadricContext::new();
    let aa = spec.alpha_product();
    let phi = spec.k.mul(&spec.l);

    // part (i)
    let mut nonisolated = vec![];
    let sample_ruling: [((i64, i64), (i64, i64)); 5] =
        [((1, 0), (0, 1)), ((1, 1), (1, 1)), ((1, 2), (1, 3)), ((2, 1), (1, 5)), ((1, 7), (3, 1))];
    for (alpha_is_zero, y_section, desc) in [
        (
            spec.alpha1.is_zero(),
            vec![Scalar::zero(), Scalar::zero(), Scalar::one()],
            "section y0 = y1 = 0 meets the residual component along Q = 0",
        ),
        (
            spec.alpha2.is_zero(),
            vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
            "section y0 = y2 = 0 meets the residual component along Q = 0",
        ),
    ] {
        if !alpha_is_zero {
            continue;
        }
        let mut samples = vec![];
        let mut verified = true;
        for ((s0, s1), (t0, t1)) in sample_ruling {
            let a = (crate::scalar::int(s0), crate::scalar::int(s1));
            let b = (crate::scalar::int(t0), crate::scalar::int(t1));
            let x = ctx.embed(&a, &b).to_vec();
            let rank = fiber_jacobian_rank(spec, &x, &y_section);
            verified &= rank <= 1;
            samples.push((x, y_section.clone()));
        }
        nonisolated.push(NonisolatedComponent {
            description: desc.to_string(),
            samples,
            verified,
        });
    }

    // part (ii): planes = k-factors plus L
    let mut planes: Vec<MultiPoly> = k_factors.to_vec();
    planes.push(spec.l.clone());
    let mut isolated = vec![];
    let n = planes.len();
    for i in 0..n {
        for j in i + 1..n {
            let (b0, b1) = line_basis(&planes[i], &planes[j], (i, j))?;
            match intersect_line_quadric(&ctx.q, &b0, &b1) {
                LineQuadric::Contained => return Err(SingularError::EdgeInQuadric(i, j)),
                LineQuadric::Rational(p1, p2) => {
                    for p in [p1, p2] {
                        let y = vec![Scalar::one(), Scalar::zero(), Scalar::zero()];
                        let rank = fiber_jacobian_rank(spec, &p, &y);
                        isolated.push(FiberSingularPoint {
                            x: PointCoords::Exact(normalize_projective(&p)),
                            y,
                            jacobian_rank: rank,
                            kind: FiberPointKind::PairIntersection,
                            conjugate_pair: false,
                        });
                    }
                }
                LineQuadric::Tangent(p) => {
                    let y = vec![Scalar::one(), Scalar::zero(), Scalar::zero()];
                    let rank = fiber_jacobian_rank(spec, &p, &y);
                    isolated.push(FiberSingularPoint {
                        x: PointCoords::Exact(normalize_projective(&p)),
                        y,
                        jacobian_rank: rank,
                        kind: FiberPointKind::PairIntersection,
                        conjugate_pair: false,
                    });
                }
                LineQuadric::Conjugate { c20, c11, c02 } => {
                    for pt in conjugate_pair_points(&b0, &b1, &c20, &c11, &c02) {
                        isolated.push(FiberSingularPoint {
                            x: pt,
                            y: vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
                            jacobian_rank: 1,
                            kind: FiberPointKind::PairIntersection,
                            conjugate_pair: true,
                        });
                    }
                }
            }
        }
    }
    // tangency points of single planes contribute only while the fibre
    // stays over alpha1 alpha2 = 0
    if aa.is_zero() {
        for plane in &planes {
            let coeffs = linear_coeffs(plane);
            let pole = quadric_pole(&coeffs);
            if pole.iter().all(|c| c.is_zero()) {
                continue;
            }
            if !ctx.q.evaluate(&pole).unwrap().is_zero() {
                continue;
            }
            // d(Phi)(pole) = lambda * dQ(pole); y2 = alpha2 * lambda over
            // alpha1 = 0 (zero over Lambda)
            let dq: Vec<Scalar> = ctx.q.gradient().iter().map(|g| g.evaluate(&pole).unwrap()).collect();
            let dphi: Vec<Scalar> = phi.gradient().iter().map(|g| g.evaluate(&pole).unwrap()).collect();
            let lambda = match dq.iter().position(|c| !c.is_zero()) {
                Some(ix) => &dphi[ix] / &dq[ix],
                None => Scalar::zero(),
            };
            let y = vec![
                Scalar::one(),
                spec.alpha1.clone() * &lambda,
                spec.alpha2.clone() * &lambda,
            ];
            let rank = fiber_jacobian_rank(spec, &pole, &y);
            isolated.push(FiberSingularPoint {
                x: PointCoords::Exact(normalize_projective(&pole)),
                y,
                jacobian_rank: rank,
                kind: FiberPointKind::Tangency,
                conjugate_pair: false,
            });
        }
    }

    // part (iii)
    let normal_form = if spec.alpha1.is_zero() && !spec.alpha2.is_zero() {
        Some(normal_form_alpha1_zero(&phi, &spec.alpha2))
    } else if spec.alpha2.is_zero() && !spec.alpha1.is_zero() {
        Some(normal_form_alpha1_zero(&phi, &spec.alpha1))
    } else {
        None
    };

    Ok(FamilyLocusReport {
        nonisolated,
        isolated,
        normal_form,
    })
}

/// Local normal form y1 (y2 - alpha psi(alpha y1, u1, u2)) - phi0(u1, u2)
/// in the chart x3 = 1 with coordinates (u0, u1, u2) = (Q, x1, x2), i.e.
/// x0 = u0 + u1 u2. `phi` is the quartic Phi and `alpha` the nonvanishing
/// deformation parameter.
pub fn normal_form_alpha1_zero(phi: &MultiPoly, alpha: &Scalar) -> MultiPoly {
    let uv = ["u0", "u1", "u2", "y1", "y2"];
    let u0 = MultiPoly::var(&uv, "u0");
    let u1 = MultiPoly::var(&uv, "u1");
    let u2 = MultiPoly::var(&uv, "u2");
    let y1 = MultiPoly::var(&uv, "y1");
    let y2 = MultiPoly::var(&uv, "y2");
    let mut chart = BTreeMap::new();
    chart.insert("x0".to_string(), (&u0) + &(&u1 * &u2));
    chart.insert("x1".to_string(), u1.clone());
    chart.insert("x2".to_string(), u2.clone());
    chart.insert("x3".to_string(), MultiPoly::constant(&uv, Scalar::one()));
    let phi_tilde = phi.substitute(&chart);
    // phi_tilde = phi0(u1, u2) + u0 * psi(u0, u1, u2)
    let mut kill_u0 = BTreeMap::new();
    kill_u0.insert("u0".to_string(), MultiPoly::zero(&uv));
    let phi0 = phi_tilde.substitute(&kill_u0);
    let psi_times_u0 = phi_tilde.sub(&phi0);
    // substitute u0 -> alpha * y1 in u0 * psi, then divide by u0 = alpha y1:
    // easier to substitute directly and use y1 * psi(alpha y1, ...) =
    // (1/alpha) * (u0 psi)|_{u0 = alpha y1}
    let mut sub_u0 = BTreeMap::new();
    sub_u0.insert("u0".to_string(), y1.scale(alpha));
    let substituted = psi_times_u0.substitute(&sub_u0);
    // y1 y2 - Phi~ restricted to u0 = alpha y1:
    // y1 y2 - phi0 - (u0 psi)|_{u0 = alpha y1}
    // = y1 (y2 - alpha psi(alpha y1, u1, u2)) - phi0.
    (&y1 * &y2).sub(&substituted).sub(&phi0)
}

/// A singular point of a discriminant curve on the quadric, in ruling
/// coordinates.
#[derive(Debug, Clone)]
pub struct CurveNode {
    /// (s0, s1, t0, t1), exact or numeric.
    pub point: PointCoords,
    pub kind: CurveNodeKind,
    pub conjugate_pair: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveNodeKind {
    PairIntersection,
    SelfNode,
    Numeric,
}

#[derive(Debug, Clone)]
pub struct CurveNodeReport {
    pub points: Vec<CurveNode>,
    /// Total delta: two intersection events per factor pair plus one per
    /// degenerate factor (split input); distinct point count for the
    /// numeric fallback.
    pub delta: usize,
    pub distinct: usize,
    pub exact: bool,
}

pub enum DiscriminantInput {
    /// Product of (1,1)-forms in the ruling variables, given by factors.
    Split(Vec<MultiPoly>),
    /// Any bihomogeneous (n, n) form; falls back to the numeric search.
    General(MultiPoly),
}

/// (1,1)-form coefficient matrix [[c00, c01], [c10, c11]] with c_ij the
/// coefficient of s_i t_j.
fn ruling_matrix(f: &MultiPoly) -> [[Scalar; 2]; 2] {
    let idx: Vec<usize> = ["s0", "s1", "t0", "t1"]
        .iter()
        .map(|n| f.vars().iter().position(|v| v == n).expect("ruling variable"))
        .collect();
    let mut m = [
        [Scalar::zero(), Scalar::zero()],
        [Scalar::zero(), Scalar::zero()],
    ];
    for (e, c) in f.terms() {
        let si = if e[idx[0]] == 1 { 0 } else { 1 };
        let tj = if e[idx[2]] == 1 { 0 } else { 1 };
        m[si][tj] = c.clone();
    }
    m
}

pub fn discriminant_curve_nodes(
    input: &DiscriminantInput,
    seed: u64,
) -> Result<CurveNodeReport, SingularError> {
    match input {
        DiscriminantInput::Split(factors) => split_curve_nodes(factors),
        DiscriminantInput::General(phi) => general_curve_nodes(phi, seed),
    }
}

fn split_curve_nodes(factors: &[MultiPoly]) -> Result<CurveNodeReport, SingularError> {
    let mats: Vec<[[Scalar; 2]; 2]> = factors.iter().map(ruling_matrix).collect();
    let mut points: Vec<CurveNode> = vec![];
    let mut delta = 0usize;
    let two = Scalar::from_integer(2.into());
    let four = Scalar::from_integer(4.into());
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            // determinant of [(c00 s0 + c10 s1, c01 s0 + c11 s1) ;
            //                 (d00 s0 + d10 s1, d01 s0 + d11 s1)]
            let (a, d) = (&mats[i], &mats[j]);
            let c2 = &(&a[0][0] * &d[0][1]) - &(&a[0][1] * &d[0][0]);
            let c1 = &(&(&a[0][0] * &d[1][1]) - &(&a[0][1] * &d[1][0]))
                + &(&(&a[1][0] * &d[0][1]) - &(&a[1][1] * &d[0][0]));
            let c0 = &(&a[1][0] * &d[1][1]) - &(&a[1][1] * &d[1][0]);
            // quadratic c2 s0^2 + c1 s0 s1 + c0 s1^2 (s = (s0 : s1))
            if c0.is_zero() && c1.is_zero() && c2.is_zero() {
                return Err(SingularError::SharedComponent(i, j));
            }
            delta += 2;
            let t_of_s = |s: &(Scalar, Scalar)| -> (Scalar, Scalar) {
                let r0 = (
                    &(&a[0][0] * &s.0) + &(&a[1][0] * &s.1),
                    &(&a[0][1] * &s.0) + &(&a[1][1] * &s.1),
                );
                if !r0.0.is_zero() || !r0.1.is_zero() {
                    (-r0.1.clone(), r0.0.clone())
                } else {
                    let r1 = (
                        &(&d[0][0] * &s.0) + &(&d[1][0] * &s.1),
                        &(&d[0][1] * &s.0) + &(&d[1][1] * &s.1),
                    );
                    (-r1.1.clone(), r1.0.clone())
                }
            };
            let mut push_exact = |s: (Scalar, Scalar)| {
                let t = t_of_s(&s);
                points.push(CurveNode {
                    point: PointCoords::Exact(vec![s.0, s.1, t.0, t.1]),
                    kind: CurveNodeKind::PairIntersection,
                    conjugate_pair: false,
                });
            };
            if c2.is_zero() {
                push_exact((Scalar::one(), Scalar::zero()));
                if !c1.is_zero() {
                    push_exact((-(&c0 / &c1), Scalar::one()));
                }
            } else {
                let disc = &(&c1 * &c1) - &(&(&c2 * &c0) * &four);
                match crate::scalar::sqrt_exact(&disc) {
                    Some(sq) => {
                        let den = &c2 * &two;
                        push_exact(((&sq - &c1) / &den, Scalar::one()));
                        if !sq.is_zero() {
                            push_exact(((-&sq - &c1) / &den, Scalar::one()));
                        }
                    }
                    None => {
                        let (af, bf, cf) = (to_f64(&c2), to_f64(&c1), to_f64(&c0));
                        let dd = bf * bf - 4.0 * af * cf;
                        let mk = |s0: f64, s1: f64, im: f64| {
                            let sv = (s0, s1);
                            // numeric t from the first factor row
                            let r0 = (
                                to_f64(&a[0][0]) * sv.0 + to_f64(&a[1][0]) * sv.1,
                                to_f64(&a[0][1]) * sv.0 + to_f64(&a[1][1]) * sv.1,
                            );
                            let t = (-r0.1, r0.0);
                            if im == 0.0 {
                                PointCoords::Numeric(vec![sv.0, sv.1, t.0, t.1])
                            } else {
                                PointCoords::Complex(vec![
                                    (sv.0, im),
                                    (sv.1, 0.0),
                                    (t.0, 0.0),
                                    (t.1, 0.0),
                                ])
                            }
                        };
                        if dd >= 0.0 {
                            for root in [(-bf + dd.sqrt()) / (2.0 * af), (-bf - dd.sqrt()) / (2.0 * af)] {
                                points.push(CurveNode {
                                    point: mk(root, 1.0, 0.0),
                                    kind: CurveNodeKind::PairIntersection,
                                    conjugate_pair: true,
                                });
                            }
                        } else {
                            for sgn in [1.0, -1.0] {
                                points.push(CurveNode {
                                    point: mk(-bf / (2.0 * af), 1.0, sgn * (-dd).sqrt() / (2.0 * af)),
                                    kind: CurveNodeKind::PairIntersection,
                                    conjugate_pair: true,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    // self-nodes of degenerate factors
    for m in &mats {
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        if !det.is_zero() {
            continue;
        }
        // rows r0 = (c00, c01), r1 = (c10, c11) are proportional; the form
        // factors as (k0 s0 + k1 s1)(g0 t0 + g1 t1)
        let (g0, g1) = if !m[0][0].is_zero() || !m[0][1].is_zero() {
            (m[0][0].clone(), m[0][1].clone())
        } else {
            (m[1][0].clone(), m[1][1].clone())
        };
        // k_i from r_i = k_i * (g0, g1)
        let k_of = |row: &[Scalar; 2]| -> Scalar {
            if !g0.is_zero() {
                &row[0] / &g0
            } else {
                &row[1] / &g1
            }
        };
        let k0 = k_of(&m[0]);
        let k1 = k_of(&m[1]);
        delta += 1;
        points.push(CurveNode {
            point: PointCoords::Exact(vec![k1.clone(), -k0.clone(), g1.clone(), -g0.clone()]),
            kind: CurveNodeKind::SelfNode,
            conjugate_pair: false,
        });
    }
    let distinct = distinct_ruling_points(&points);
    Ok(CurveNodeReport {
        points,
        delta,
        distinct,
        exact: true,
    })
}

fn distinct_ruling_points(points: &[CurveNode]) -> usize {
    let mut exact: Vec<(Vec<Scalar>, Vec<Scalar>)> = vec![];
    let mut other = 0usize;
    for p in points {
        match &p.point {
            PointCoords::Exact(v) => {
                let s = normalize_projective(&v[0..2]);
                let t = normalize_projective(&v[2..4]);
                if !exact.contains(&(s.clone(), t.clone())) {
                    exact.push((s, t));
                }
            }
            _ => other += 1,
        }
    }
    // conjugate pairs are distinct by construction
    exact.len() + other
}

fn general_curve_nodes(phi: &MultiPoly, seed: u64) -> Result<CurveNodeReport, SingularError> {
    use rand::{Rng, SeedableRng};
    // square-free check: restrict to random lines of the first ruling and
    // gcd with the derivative
    let st = ["s0", "s1", "t0", "t1"];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut squarefull = 0;
    for _ in 0..3 {
        let r = crate::scalar::int(rng.gen_range(2..50));
        let mut map = BTreeMap::new();
        map.insert("s0".to_string(), MultiPoly::constant(&st, Scalar::one()));
        map.insert("s1".to_string(), MultiPoly::constant(&st, r));
        let restricted = phi.substitute(&map);
        let bf = crate::binform::BinaryForm::from_multipoly(&restricted, "t0", "t1");
        if let Ok(bf) = bf {
            if bf.degree() >= 1 {
                let u = bf.to_unipoly();
                if u.gcd(&u.derivative()).degree() > 0 {
                    squarefull += 1;
                }
            }
        }
    }
    if squarefull == 3 {
        return Err(SingularError::NotSquareFree);
    }
    // numeric search: Newton on the two affine partials in each of the
    // four (s-chart, t-chart) combinations
    let partials: Vec<MultiPoly> = st.iter().map(|v| phi.differentiate(v).unwrap()).collect();
    let mut found: Vec<Vec<f64>> = vec![];
    for schart in 0..2 {
        for tchart in 0..2 {
            for start in 0..400 {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(
                    seed ^ ((schart as u64) << 32) ^ ((tchart as u64) << 33) ^ (start as u64),
                );
                let mut sigma = rng.gen_range(-3.0..3.0);
                let mut tau = rng.gen_range(-3.0..3.0);
                let assemble = |sigma: f64, tau: f64| -> [f64; 4] {
                    let s = if schart == 0 { [1.0, sigma] } else { [sigma, 1.0] };
                    let t = if tchart == 0 { [1.0, tau] } else { [tau, 1.0] };
                    [s[0], s[1], t[0], t[1]]
                };
                // use the affine-relevant partials: d/d(free s), d/d(free t)
                let fs = if schart == 0 { 1 } else { 0 };
                let ft = if tchart == 0 { 3 } else { 2 };
                let mut ok = false;
                for _ in 0..40 {
                    let p = assemble(sigma, tau);
                    let g0 = eval_f64(&partials[fs], &p);
                    let g1 = eval_f64(&partials[ft], &p);
                    if g0.abs() + g1.abs() < 1e-12 {
                        ok = true;
                        break;
                    }
                    // Jacobian of (g0, g1) wrt (sigma, tau) by finite
                    // differences of the exact partial evaluations
                    let h = 1e-7;
                    let pa = assemble(sigma + h, tau);
                    let pb = assemble(sigma, tau + h);
                    let j00 = (eval_f64(&partials[fs], &pa) - g0) / h;
                    let j01 = (eval_f64(&partials[fs], &pb) - g0) / h;
                    let j10 = (eval_f64(&partials[ft], &pa) - g1) / h;
                    let j11 = (eval_f64(&partials[ft], &pb) - g1) / h;
                    let det = j00 * j11 - j01 * j10;
                    if det.abs() < 1e-14 {
                        break;
                    }
                    sigma -= (g0 * j11 - g1 * j01) / det;
                    tau -= (-g0 * j10 + g1 * j00) / det;
                    if !sigma.is_finite() || !tau.is_finite() || sigma.abs() + tau.abs() > 1e8 {
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                let p = assemble(sigma, tau);
                // all four homogeneous partials and the value must vanish
                let res = partials
                    .iter()
                    .map(|g| eval_f64(g, &p).abs())
                    .fold(eval_f64(phi, &p).abs(), f64::max);
                let scale = p.iter().fold(1.0f64, |a, b| a.max(b.abs()));
                if res > 1e-7 * scale.powi(phi.total_degree() as i32) {
                    continue;
                }
                let sn = normalize_numeric(&p[0..2]);
                let tn = normalize_numeric(&p[2..4]);
                let cand = vec![sn[0], sn[1], tn[0], tn[1]];
                if !found
                    .iter()
                    .any(|q| q.iter().zip(&cand).all(|(a, b)| (a - b).abs() < 1e-6))
                {
                    found.push(cand);
                }
            }
        }
    }
    found.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let points: Vec<CurveNode> = found
        .into_iter()
        .map(|p| CurveNode {
            point: PointCoords::Numeric(p),
            kind: CurveNodeKind::Numeric,
            conjugate_pair: false,
        })
        .collect();
    let distinct = points.len();
    Ok(CurveNodeReport {
        delta: distinct,
        distinct,
        points,
        exact: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{branch_quartic, Sign, ST_VARS};
    use crate::scalar::{frac, int};

    fn xp(s: &str) -> MultiPoly {
        MultiPoly::parse(&X_VARS, s).unwrap()
    }

    fn q() -> MultiPoly {
        xp("x0*x3 - x1*x2")
    }

    #[test]
    fn q_squared_is_degenerate_everywhere_on_q() {
        let f = &q() * &q();
        let ctx = QuadricContext::new();
        let p = ctx.embed(&(int(1), int(2)), &(int(3), int(1)));
        let rec = verify_singular(&f, &p);
        assert_eq!(rec.classification, NodeClass::HigherOrDegenerate);
        assert!(rec.hessian_rank <= 2);
        assert_eq!(rec.gradient_residual, 0.0);
    }

    #[test]
    fn generic_point_is_nonsingular() {
        let f = branch_quartic(
            &xp("x0^3*x3"),
            &frac(1, 3),
            &q(),
            Sign::Minus,
        );
        let rec = verify_singular(&f, &[int(1), int(2), int(5), int(11)]);
        assert_eq!(rec.classification, NodeClass::Nonsingular);
    }

    #[test]
    fn tetrahedral_census_twelve_rational_nodes() {
        let planes = [
            xp("x0 + 2*x1 + x2 + 2*x3"),
            xp("-2*x0 + x1 + x2"),
            xp("-x0 - 2*x2"),
            xp("-2*x0 + x2 + 2*x3"),
        ];
        let census = structural_nodes_tetrahedral(&q(), &planes, &int(1)).unwrap();
        assert_eq!(census.records.len(), 12);
        for r in &census.records {
            assert_eq!(r.gradient_residual, 0.0);
            assert_eq!(r.classification, NodeClass::A1Node, "{:?}", r.point);
            assert!(!r.conjugate_pair);
        }
        assert_eq!(distinct_points(&census.records, 1e-8), 12);
    }

    #[test]
    fn tetrahedral_census_rejects_edge_in_quadric() {
        let planes = [xp("x0"), xp("x1"), xp("x2"), xp("x3")];
        assert!(matches!(
            structural_nodes_tetrahedral(&q(), &planes, &int(1)),
            Err(SingularError::EdgeInQuadric(_, _))
        ));
    }

    #[test]
    fn tangent_edge_degrades_classification() {
        // the edge {x1 - x2 = 0, x3 = 0} touches the quadric at (1,0,0,0)
        let planes = [xp("x1 - x2"), xp("x3"), xp("x0 + x1 + 3*x2"), xp("x0 - 5*x1 + x3")];
        let census = structural_nodes_tetrahedral(&q(), &planes, &int(1)).unwrap();
        let touched: Vec<_> = census
            .records
            .iter()
            .filter(|r| r.point == PointCoords::Exact(vec![int(1), int(0), int(0), int(0)]))
            .collect();
        assert!(!touched.is_empty());
        for r in touched {
            assert_eq!(r.classification, NodeClass::HigherOrDegenerate);
        }
    }

    #[test]
    fn conjugate_pair_certificate_counts() {
        // instance with an irrational pair on the K-line
        let planes = [
            xp("x0 + x1 + 2*x2 - x3"),
            xp("x0 - x1 + x2 + 3*x3"),
            xp("x0 - x3"),
            xp("x1 + x2 + x3"),
        ];
        let census = structural_nodes_tetrahedral(&q(), &planes, &frac(1, 25)).unwrap();
        assert_eq!(census.records.len(), 12);
        let conj = census.records.iter().filter(|r| r.conjugate_pair).count();
        assert!(conj > 0 && conj % 2 == 0);
        for r in &census.records {
            assert_eq!(r.classification, NodeClass::A1Node);
        }
        assert_eq!(distinct_points(&census.records, 1e-8), 12);
    }

    #[test]
    fn hessian_kernel_contains_the_point_at_a1_nodes() {
        let planes = [
            xp("x0 + 2*x1 + x2 + 2*x3"),
            xp("-2*x0 + x1 + x2"),
            xp("-x0 - 2*x2"),
            xp("-2*x0 + x2 + 2*x3"),
        ];
        let census = structural_nodes_tetrahedral(&q(), &planes, &int(1)).unwrap();
        let hess = hessian(&census.quartic);
        for r in &census.records {
            let PointCoords::Exact(p) = &r.point else {
                continue;
            };
            for row in &hess {
                let dot: Scalar = row
                    .iter()
                    .zip(p)
                    .map(|(h, c)| h.evaluate(p).unwrap() * c)
                    .sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn split_discriminant_generic_six_nodes() {
        let f = |s: &str| MultiPoly::parse(&ST_VARS, s).unwrap();
        let factors = vec![
            f("s0*t0 - s1*t1"),
            f("2*s0*t0 + s0*t1 - 3*s1*t0"),
            f("s0*t1 + s1*t0 + s1*t1"),
        ];
        let report = discriminant_curve_nodes(&DiscriminantInput::Split(factors), 1).unwrap();
        assert_eq!(report.delta, 6);
        assert_eq!(report.distinct, 6);
        assert!(report.exact);
    }

    #[test]
    fn torus_discriminant_concentrated_nodes() {
        let f = |s: &str| MultiPoly::parse(&ST_VARS, s).unwrap();
        let factors = vec![
            f("s0*t0"),
            f("s0*t0 - s1*t1"),
            f("2*s0*t0 - 3*s1*t1"),
            f("5*s0*t0 - s1*t1"),
        ];
        let report = discriminant_curve_nodes(&DiscriminantInput::Split(factors), 1).unwrap();
        // delta = 2 * C(4,2) events + 1 self-node = 13; the distinct support
        // is the two corner points plus the crossing of the degenerate
        // factor
        assert_eq!(report.delta, 13);
        assert_eq!(report.distinct, 3);
        let expected = [
            vec![int(1), int(0), int(0), int(1)],
            vec![int(0), int(1), int(1), int(0)],
            vec![int(0), int(1), int(0), int(1)],
        ];
        for e in expected {
            let es = normalize_projective(&e[0..2]);
            let et = normalize_projective(&e[2..4]);
            assert!(report.points.iter().any(|p| match &p.point {
                PointCoords::Exact(v) =>
                    normalize_projective(&v[0..2]) == es && normalize_projective(&v[2..4]) == et,
                _ => false,
            }));
        }
    }

    #[test]
    fn smooth_discriminant_yields_no_nodes() {
        let f = MultiPoly::parse(&ST_VARS, "s0^2*t0^2 + s1^2*t1^2 + s0*s1*t0*t1 + s0^2*t1^2 + s1^2*t0^2")
            .unwrap();
        let report = discriminant_curve_nodes(&DiscriminantInput::General(f), 7).unwrap();
        assert_eq!(report.points.len(), 0);
        assert!(!report.exact);
    }

    #[test]
    fn family_locus_structured_parts() {
        // K = product of three planes, L a tangent plane; alpha1 = 0,
        // alpha2 != 0
        let k1 = xp("x0 + 2*x1 + x2 + 2*x3");
        let k2 = xp("-2*x0 + x1 + x2");
        let k3 = xp("-x0 - 2*x2");
        let k = k1.mul(&k2).mul(&k3);
        let l = crate::families::tangent_plane(&(int(1), int(2)), &(int(1), int(3))).unwrap();
        let spec = crate::families::deformation_family(&k, &l, int(0), int(1)).unwrap();
        let report =
            family_singular_locus(&spec, &[k1.clone(), k2.clone(), k3.clone()]).unwrap();
        // part (i): alpha1 = 0 gives one non-isolated component, verified
        assert_eq!(report.nonisolated.len(), 1);
        assert!(report.nonisolated[0].verified);
        // part (ii): all isolated points satisfy the rank condition
        for p in &report.isolated {
            if !p.conjugate_pair {
                assert!(p.jacobian_rank <= 1, "{:?}", p);
            }
        }
        // the tangency point of L appears
        assert!(report
            .isolated
            .iter()
            .any(|p| p.kind == FiberPointKind::Tangency));
        // part (iii) exists
        assert!(report.normal_form.is_some());
        // over Lambda the same x-locations appear
        let spec0 = crate::families::deformation_family(&k, &l, int(0), int(0)).unwrap();
        let report0 = family_singular_locus(&spec0, &[k1, k2, k3]).unwrap();
        let xs = |rep: &FamilyLocusReport| -> Vec<Vec<Scalar>> {
            let mut v: Vec<Vec<Scalar>> = rep
                .isolated
                .iter()
                .filter_map(|p| match &p.x {
                    PointCoords::Exact(x) => Some(normalize_projective(x)),
                    _ => None,
                })
                .collect();
            v.sort();
            v.dedup();
            v
        };
        assert_eq!(xs(&report), xs(&report0));
    }

    #[test]
    fn generic_alpha_has_no_nonisolated_part() {
        let k1 = xp("x0 + 2*x1 + x2 + 2*x3");
        let k2 = xp("-2*x0 + x1 + x2");
        let k3 = xp("-x0 - 2*x2");
        let k = k1.mul(&k2).mul(&k3);
        let l = crate::families::tangent_plane(&(int(1), int(2)), &(int(1), int(3))).unwrap();
        let spec = crate::families::deformation_family(&k, &l, int(1), int(1)).unwrap();
        let report = family_singular_locus(&spec, &[k1, k2, k3]).unwrap();
        assert!(report.nonisolated.is_empty());
        assert!(report.normal_form.is_none());
        // pair-intersection points persist for generic alpha
        assert!(report
            .isolated
            .iter()
            .any(|p| p.kind == FiberPointKind::PairIntersection && p.jacobian_rank <= 1));
    }

    #[test]
    fn normal_form_matches_direct_substitution() {
        let phi = xp("x0^4 - 2*x0*x1^2*x3 + x1*x2^2*x3 + x2^4");
        let alpha = frac(3, 7);
        let nf = normal_form_alpha1_zero(&phi, &alpha);
        // direct check: y1 y2 - Phi(u0 + u1 u2, u1, u2, 1) at u0 = alpha y1
        let uv = ["u0", "u1", "u2", "y1", "y2"];
        let mut chart = BTreeMap::new();
        chart.insert("x0".to_string(), {
            let u0 = MultiPoly::var(&uv, "u0");
            let u1 = MultiPoly::var(&uv, "u1");
            let u2 = MultiPoly::var(&uv, "u2");
            (&u0) + &(&u1 * &u2)
        });
        chart.insert("x1".to_string(), MultiPoly::var(&uv, "u1"));
        chart.insert("x2".to_string(), MultiPoly::var(&uv, "u2"));
        chart.insert("x3".to_string(), MultiPoly::constant(&uv, Scalar::one()));
        let phi_tilde = phi.substitute(&chart);
        let y1 = MultiPoly::var(&uv, "y1");
        let y2 = MultiPoly::var(&uv, "y2");
        let direct = (&y1 * &y2).sub(&phi_tilde);
        let mut sub_u0 = BTreeMap::new();
        sub_u0.insert("u0".to_string(), y1.scale(&alpha));
        assert_eq!(nf, direct.substitute(&sub_u0));
    }
}
