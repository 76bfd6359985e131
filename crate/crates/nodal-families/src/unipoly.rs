//! Dense univariate polynomials over exact rationals: Euclidean division,
//! gcd, Sturm sequences, real-root isolation and Sylvester resultants.
//!
//! This is the workhorse behind discriminants, the locus-curve cusp and
//! double-point solvers and the plane-restriction computations.

use crate::scalar::{to_f64, Scalar};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending order, no trailing zeros. The zero polynomial
/// is the empty list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(vec![])
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut v = vec![Scalar::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading(&self) -> Scalar {
        self.0.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.0.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.0.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![Scalar::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        UniPoly::new(v)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let d = divisor.0.len();
        if r.len() < d {
            return (UniPoly::zero(), UniPoly::new(r));
        }
        let mut q = vec![Scalar::zero(); r.len() - d + 1];
        let lead = divisor.0.last().unwrap().clone();
        for k in (0..q.len()).rev() {
            let c = &r[k + d - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            q[k] = c.clone();
            for (j, b) in divisor.0.iter().enumerate() {
                let t = b * &c;
                r[k + j] -= t;
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact univariate division");
        q
    }

    /// Monic gcd (1 for coprime inputs, 0 only when both inputs are 0).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&(Scalar::one() / lead))
    }

    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree() == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.clone()
        } else {
            self.exact_div(&g)
        }
    }

    /// Resultant via the full Sylvester matrix with the nominal degrees of
    /// both inputs, so vanishing leading coefficients (projective roots at
    /// infinity) are handled by the caller's choice of nominal degree.
    pub fn resultant_with_degrees(p: &[Scalar], q: &[Scalar]) -> Scalar {
        // p, q are coefficient lists in DESCENDING order with fixed nominal
        // degree = len-1.
        let m = p.len() - 1;
        let n = q.len() - 1;
        if m == 0 && n == 0 {
            return Scalar::one();
        }
        let size = m + n;
        let mut mat = vec![vec![Scalar::zero(); size]; size];
        for row in 0..n {
            for (k, c) in p.iter().enumerate() {
                mat[row][row + k] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in q.iter().enumerate() {
                mat[n + row][row + k] = c.clone();
            }
        }
        det_rational(mat)
    }

    /// Sturm sequence.
    fn sturm_chain(&self) -> Vec<UniPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&-Scalar::one()));
        }
        chain
    }

    fn sign_changes(chain: &[UniPoly], x: &Scalar) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in chain {
            let v = p.eval(x);
            let s = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Number of distinct real roots in the half-open interval (lo, hi].
    pub fn count_roots_between(&self, chain: &[UniPoly], lo: &Scalar, hi: &Scalar) -> usize {
        Self::sign_changes(chain, lo).saturating_sub(Self::sign_changes(chain, hi))
    }

    /// Cauchy bound: all real roots lie in (-B, B).
    pub fn root_bound(&self) -> Scalar {
        let lead = self.leading();
        if lead.is_zero() {
            return Scalar::one();
        }
        let mut m = Scalar::zero();
        for c in &self.0[..self.0.len() - 1] {
            let r = (c / &lead).abs();
            if r > m {
                m = r;
            }
        }
        m + Scalar::one()
    }

    /// All distinct real roots, refined by bisection until the enclosing
    /// interval is narrower than `width`. Returns exact rational enclosures
    /// (lo, hi) with exactly one root each; a root hit exactly has lo == hi.
    pub fn isolate_real_roots(&self, width: &Scalar) -> Vec<(Scalar, Scalar)> {
        if self.degree() == 0 {
            return vec![];
        }
        let f = self.squarefree_part();
        let chain = f.sturm_chain();
        let b = f.root_bound();
        let mut stack = vec![(-b.clone(), b.clone())];
        let mut isolated: Vec<(Scalar, Scalar)> = vec![];
        while let Some((lo, hi)) = stack.pop() {
            let count = f.count_roots_between(&chain, &lo, &hi);
            if count == 0 {
                continue;
            }
            let mid = (&lo + &hi) / Scalar::from_integer(2.into());
            if count == 1 {
                // refine by bisection
                let (mut lo, mut hi) = (lo, hi);
                loop {
                    if &hi - &lo < *width {
                        isolated.push((lo, hi));
                        break;
                    }
                    let mid = (&lo + &hi) / Scalar::from_integer(2.into());
                    if f.eval(&mid).is_zero() {
                        isolated.push((mid.clone(), mid));
                        break;
                    }
                    if f.count_roots_between(&chain, &lo, &mid) == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                continue;
            }
            // a root exactly at the midpoint belongs to the left half-open
            // interval and is isolated there
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        isolated.sort_by(|a, b| a.0.cmp(&b.0));
        isolated
    }

    /// Canonical text in the given variable name.
    pub fn to_string_in(&self, var: &str) -> String {
        let vs = [var];
        let p = crate::poly::MultiPoly::from_terms(
            &vs,
            self.0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.clone(), vec![k as u32]))
                .collect(),
        );
        p.to_string()
    }

    /// Real roots as f64 midpoints, refined to the given rational width.
    pub fn real_roots_f64(&self, width: &Scalar) -> Vec<f64> {
        self.isolate_real_roots(width)
            .into_iter()
            .map(|(lo, hi)| to_f64(&((&lo + &hi) / Scalar::from_integer(2.into()))))
            .collect()
    }
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn det_rational(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return Scalar::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let t = &m[col][c] * &f;
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Lagrange interpolation: recover the polynomial of degree < points.len()
/// through the given (x, y) pairs.
pub fn interpolate(points: &[(Scalar, Scalar)]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::constant(Scalar::one());
        let mut denom = Scalar::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UniPoly::new(vec![-xj.clone(), Scalar::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / &denom)));
    }
    acc
}
