//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms are keyed by exponent vectors aligned with an ordered variable
//! registry. Zero coefficients are never stored. Binary operations merge
//! registries by name: the left operand's order wins and unseen variables
//! are appended in the right operand's order.
//!
//! The canonical text form sorts terms graded-lexicographically by the
//! declared variable order ("3/2*x0^2*x3 - x1*x2"); parsing that form
//! round-trips bit-exactly.

use crate::scalar::Scalar;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("point has length {got}, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division is not exact")]
    InexactDivision,
}

#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Scalar>,
    grading: Option<Vec<Vec<i64>>>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
            grading: None,
        }
    }

    pub fn constant(vars: &[&str], c: Scalar) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = Self::zero(vars);
        let i = p
            .vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("variable `{name}` not in registry"));
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.terms.insert(e, Scalar::one());
        p
    }

    pub fn from_terms(vars: &[&str], terms: Vec<(Scalar, Vec<u32>)>) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent length mismatch");
            p.add_term(c, e);
        }
        p
    }

    /// Linear form from a coefficient vector aligned with `vars`.
    pub fn linear_form(vars: &[&str], coeffs: &[Scalar]) -> Self {
        assert_eq!(vars.len(), coeffs.len());
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; vars.len()];
                e[i] = 1;
                p.add_term(c.clone(), e);
            }
        }
        p
    }

    fn add_term(&mut self, c: Scalar, e: Vec<u32>) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Constant term (the coefficient of the all-zero exponent vector).
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&vec![0; self.vars.len()])
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coefficient(&self, exps: &[u32]) -> Scalar {
        self.terms.get(exps).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Declare weight vectors used by `is_homogeneous`/`multidegree`.
    pub fn with_grading(mut self, grading: Vec<Vec<i64>>) -> Self {
        for w in &grading {
            assert_eq!(w.len(), self.vars.len(), "weight vector length mismatch");
        }
        self.grading = Some(grading);
        self
    }

    pub fn grading(&self) -> Option<&[Vec<i64>]> {
        self.grading.as_deref()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> Result<u32, PolyError> {
        let i = self.index_of(name)?;
        Ok(self.terms.keys().map(|e| e[i]).max().unwrap_or(0))
    }

    fn index_of(&self, name: &str) -> Result<usize, PolyError> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Multidegree of a term under the declared grading (total degree when
    /// no grading is declared).
    fn term_degree(&self, e: &[u32]) -> Vec<i64> {
        match &self.grading {
            Some(ws) => ws
                .iter()
                .map(|w| e.iter().zip(w).map(|(&x, &wi)| x as i64 * wi).sum())
                .collect(),
            None => vec![e.iter().map(|&x| x as i64).sum()],
        }
    }

    /// True when every term has the same multidegree. The zero polynomial
    /// is homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.multidegree().is_some() || self.is_zero()
    }

    pub fn multidegree(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = self.term_degree(it.next()?);
        for e in it {
            if self.term_degree(e) != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            grading: self.grading.clone(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
                grading: self.grading.clone(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
            grading: self.grading.clone(),
        }
    }

    /// Merge registries by name; returns the joint registry and column maps.
    fn merged_vars(&self, other: &MultiPoly) -> (Vec<String>, Vec<usize>, Vec<usize>) {
        if self.vars == other.vars {
            let id: Vec<usize> = (0..self.vars.len()).collect();
            return (self.vars.clone(), id.clone(), id);
        }
        let mut vars = self.vars.clone();
        let map_a: Vec<usize> = (0..self.vars.len()).collect();
        let mut map_b = Vec::with_capacity(other.vars.len());
        for v in &other.vars {
            match vars.iter().position(|w| w == v) {
                Some(i) => map_b.push(i),
                None => {
                    vars.push(v.clone());
                    map_b.push(vars.len() - 1);
                }
            }
        }
        (vars, map_a, map_b)
    }

    fn remap(e: &[u32], map: &[usize], n: usize) -> Vec<u32> {
        let mut out = vec![0u32; n];
        for (i, &x) in e.iter().enumerate() {
            out[map[i]] += x;
        }
        out
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (vars, ma, mb) = self.merged_vars(other);
        let n = vars.len();
        let mut out = MultiPoly {
            vars,
            terms: BTreeMap::new(),
            grading: None,
        };
        for (e, c) in &self.terms {
            out.add_term(c.clone(), Self::remap(e, &ma, n));
        }
        for (e, c) in &other.terms {
            out.add_term(c.clone(), Self::remap(e, &mb, n));
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let (vars, ma, mb) = self.merged_vars(other);
        let n = vars.len();
        let mut out = MultiPoly {
            vars,
            terms: BTreeMap::new(),
            grading: None,
        };
        for (ea, ca) in &self.terms {
            let ra = Self::remap(ea, &ma, n);
            for (eb, cb) in &other.terms {
                let rb = Self::remap(eb, &mb, n);
                let e: Vec<u32> = ra.iter().zip(&rb).map(|(a, b)| a + b).collect();
                out.add_term(ca * cb, e);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(
            &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
            Scalar::one(),
        );
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact formal partial derivative.
    pub fn differentiate(&self, name: &str) -> Result<MultiPoly, PolyError> {
        let i = self.index_of(name)?;
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
            grading: None,
        };
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(c * Scalar::from_integer(e[i].into()), e2);
            }
        }
        Ok(out)
    }

    /// Gradient with respect to the full registry.
    pub fn gradient(&self) -> Vec<MultiPoly> {
        self.vars
            .iter()
            .map(|v| self.differentiate(v).expect("registry variable"))
            .collect()
    }

    /// Exact composition. Variables not present in `assignments` map to
    /// themselves; images may live in arbitrary registries.
    pub fn substitute(&self, assignments: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let self_vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| match assignments.get(v) {
                Some(p) => p.clone(),
                None => MultiPoly::var(&self_vars, v),
            })
            .collect();
        let mut out = MultiPoly::zero(&self_vars);
        // power cache per variable
        let mut pows: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![p.clone()]) .collect();
        let one = MultiPoly::constant(&self_vars, Scalar::one());
        for (e, c) in &self.terms {
            let mut term = one.scale(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while pows[i].len() < k as usize {
                    let next = pows[i].last().unwrap().mul(&images[i]);
                    pows[i].push(next);
                }
                term = term.mul(&pows[i][k as usize - 1]);
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact evaluation at a rational point aligned with the registry.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, PolyError> {
        if point.len() != self.vars.len() {
            return Err(PolyError::PointLength {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Largest monomial divisor and remaining cofactor: p = monomial * q.
    pub fn monomial_content(&self) -> (Vec<u32>, MultiPoly) {
        if self.is_zero() {
            return (vec![0; self.vars.len()], self.clone());
        }
        let mut m = self.terms.keys().next().unwrap().clone();
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(ei);
            }
        }
        let mut q = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
            grading: None,
        };
        for (e, c) in &self.terms {
            let r: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a - b).collect();
            q.terms.insert(r, c.clone());
        }
        (m, q)
    }

    /// Rational content: gcd of coefficients, positive.
    pub fn content(&self) -> Scalar {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            Scalar::zero()
        } else {
            Scalar::new(num, den)
        }
    }

    /// Graded-lex (by declared order) list of terms, leading first.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, &Scalar)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        ts
    }

    /// Leading coefficient in the canonical term order.
    pub fn leading_coefficient(&self) -> Scalar {
        self.sorted_terms()
            .first()
            .map(|(_, c)| (*c).clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn parse(vars: &[&str], input: &str) -> Result<MultiPoly, PolyError> {
        parse::poly(vars, input)
    }
}

impl PartialEq for MultiPoly {
    /// Mathematical equality on the merged registry; grading is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}
impl Eq for MultiPoly {}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}
impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}
impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}
impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.sorted_terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            let mut wrote = false;
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                wrote = true;
            }
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars[i])?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

mod parse {
    use super::{MultiPoly, PolyError};
    use crate::scalar::{parse_scalar, Scalar};
    use num_traits::One;

    pub fn poly(vars: &[&str], input: &str) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero(vars);
        let s: Vec<char> = input.chars().collect();
        let mut i = 0usize;
        let n = s.len();
        let err = |msg: &str| PolyError::Parse(msg.to_string());
        let skip_ws = |i: &mut usize| {
            while *i < n && s[*i].is_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == n {
            return Err(err("empty input"));
        }
        let mut sign = Scalar::one();
        if s[i] == '-' {
            sign = -sign;
            i += 1;
        } else if s[i] == '+' {
            i += 1;
        }
        loop {
            skip_ws(&mut i);
            // term: factors separated by '*'
            let mut coeff = sign.clone();
            let mut exps = vec![0u32; vars.len()];
            let mut any;
            loop {
                skip_ws(&mut i);
                if i < n && (s[i].is_ascii_digit() || s[i] == '.') {
                    let start = i;
                    while i < n && (s[i].is_ascii_digit() || s[i] == '/') {
                        i += 1;
                    }
                    let lit: String = s[start..i].iter().collect();
                    coeff *= parse_scalar(&lit).map_err(|e| err(&e.to_string()))?;
                    any = true;
                } else if i < n && (s[i].is_alphabetic() || s[i] == '_') {
                    let start = i;
                    while i < n && (s[i].is_alphanumeric() || s[i] == '_') {
                        i += 1;
                    }
                    let name: String = s[start..i].iter().collect();
                    let vi = vars
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                    let mut k = 1u32;
                    skip_ws(&mut i);
                    if i < n && s[i] == '^' {
                        i += 1;
                        skip_ws(&mut i);
                        let start = i;
                        while i < n && s[i].is_ascii_digit() {
                            i += 1;
                        }
                        k = s[start..i]
                            .iter()
                            .collect::<String>()
                            .parse()
                            .map_err(|_| err("bad exponent"))?;
                    }
                    exps[vi] += k;
                    any = true;
                } else {
                    return Err(err("expected coefficient or variable"));
                }
                skip_ws(&mut i);
                if i < n && s[i] == '*' {
                    i += 1;
                    continue;
                }
                break;
            }
            if !any {
                return Err(err("empty term"));
            }
            out.add_term(coeff, exps);
            skip_ws(&mut i);
            if i == n {
                break;
            }
            sign = match s[i] {
                '+' => Scalar::one(),
                '-' => -Scalar::one(),
                _ => return Err(err("expected + or -")),
            };
            i += 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn p(vars: &[&str], s: &str) -> MultiPoly {
        MultiPoly::parse(vars, s).unwrap()
    }

    #[test]
    fn cancellation() {
        let v = ["x", "y"];
        let sum = &p(&v, "x + y") + &p(&v, "-x");
        assert_eq!(sum, p(&v, "y"));
    }

    #[test]
    fn multiplicative_identity() {
        let v = ["x0", "x1", "x2", "x3"];
        let q = p(&v, "x0*x3 - x1*x2");
        let one = MultiPoly::constant(&v, int(1));
        assert_eq!(q.mul(&one), q);
    }

    #[test]
    fn fourteen_nodal_rational_form_expansion() {
        // (x1x2 + y1y2 - z1z2)^2 - 4 x1x2 y1y2 expands to the six-term
        // symmetric form.
        let v = ["u", "v", "w"]; // u = x1x2, v = y1y2, w = z1z2
        let lhs = {
            let t = p(&v, "u + v - w");
            &t.mul(&t) - &p(&v, "4*u*v")
        };
        let rhs = p(&v, "u^2 + v^2 + w^2 - 2*v*w - 2*u*w - 2*u*v");
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivative_and_unknown_variable() {
        let v = ["x0", "x1", "x2", "x3"];
        let q = p(&v, "x0*x3 - x1*x2");
        assert_eq!(q.differentiate("x0").unwrap(), p(&v, "x3"));
        assert!(matches!(
            q.differentiate("nope"),
            Err(PolyError::UnknownVariable(_))
        ));
    }

    #[test]
    fn euler_identity_degree_4() {
        let v = ["x0", "x1", "x2", "x3"];
        let f = p(&v, "3*x0^4 - 7/2*x0*x1^2*x3 + x1*x2^2*x3 - x2^4 + 5*x0*x1*x2*x3");
        let mut acc = MultiPoly::zero(&v);
        for name in v {
            let xi = MultiPoly::var(&v, name);
            acc = acc.add(&xi.mul(&f.differentiate(name).unwrap()));
        }
        assert_eq!(acc, f.scale(&int(4)));
    }

    #[test]
    fn segre_substitution_kills_quadric() {
        let xv = ["x0", "x1", "x2", "x3"];
        let st = ["s0", "s1", "t0", "t1"];
        let q = p(&xv, "x0*x3 - x1*x2");
        let mut m = BTreeMap::new();
        m.insert("x0".into(), p(&st, "s0*t0"));
        m.insert("x1".into(), p(&st, "s0*t1"));
        m.insert("x2".into(), p(&st, "s1*t0"));
        m.insert("x3".into(), p(&st, "s1*t1"));
        assert!(q.substitute(&m).is_zero());
    }

    #[test]
    fn identity_substitution_is_identity() {
        let v = ["x", "y"];
        let f = p(&v, "x^3 - 2/5*x*y + 7");
        let mut m = BTreeMap::new();
        m.insert("x".into(), MultiPoly::var(&v, "x"));
        assert_eq!(f.substitute(&m), f);
    }

    #[test]
    fn evaluation_and_length_guard() {
        let v = ["x0", "x1", "x2", "x3"];
        let q = p(&v, "x0*x3 - x1*x2");
        assert_eq!(
            q.evaluate(&[int(0), int(1), int(0), int(0)]).unwrap(),
            int(0)
        );
        assert_eq!(
            q.evaluate(&[int(1), int(1), int(1), int(1)]).unwrap(),
            int(0)
        );
        assert!(q.evaluate(&[int(1)]).is_err());
    }

    #[test]
    fn tangent_plane_contains_its_point() {
        // L3 = a1b1 x0 - a1b0 x1 - a0b1 x2 + a0b0 x3 vanishes at
        // (a0b0, a0b1, a1b0, a1b1) for symbolic a, b: direct expansion.
        let xv = ["x0", "x1", "x2", "x3"];
        let ab = ["a0", "a1", "b0", "b1"];
        let l3 = {
            let mono = |s: &str| p(&ab, s);
            let mut acc = MultiPoly::var(&xv, "x0").mul(&mono("a1*b1"));
            acc = acc.sub(&MultiPoly::var(&xv, "x1").mul(&mono("a1*b0")));
            acc = acc.sub(&MultiPoly::var(&xv, "x2").mul(&mono("a0*b1")));
            acc.add(&MultiPoly::var(&xv, "x3").mul(&mono("a0*b0")))
        };
        let mut m = BTreeMap::new();
        m.insert("x0".into(), p(&ab, "a0*b0"));
        m.insert("x1".into(), p(&ab, "a0*b1"));
        m.insert("x2".into(), p(&ab, "a1*b0"));
        m.insert("x3".into(), p(&ab, "a1*b1"));
        assert!(l3.substitute(&m).is_zero());
    }

    #[test]
    fn grading_detects_bidegree() {
        let st = ["s0", "s1", "t0", "t1"];
        let phi = p(&st, "s0*t0 + 2*s1*t1").with_grading(vec![
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
        ]);
        assert!(phi.is_homogeneous());
        assert_eq!(phi.multidegree(), Some(vec![1, 1]));
        let bad = p(&st, "s0*t0 + s0*s1").with_grading(vec![
            vec![1, 1, 0, 0],
            vec![0, 0, 1, 1],
        ]);
        assert!(!bad.is_homogeneous());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let v = ["x0", "x1", "x2", "x3"];
        let f = p(&v, "3/2*x0^2*x3 - x1*x2");
        assert_eq!(f.to_string(), "3/2*x0^2*x3 - x1*x2");
        assert_eq!(MultiPoly::parse(&v, &f.to_string()).unwrap(), f);
        let g = MultiPoly::constant(&v, frac(-7, 3));
        assert_eq!(g.to_string(), "-7/3");
        assert_eq!(MultiPoly::parse(&v, "-7/3").unwrap(), g);
    }

    #[test]
    fn registry_merge_appends_new_names() {
        let a = p(&["x"], "x");
        let b = p(&["y"], "y");
        let s = &a + &b;
        assert_eq!(s.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(s, p(&["x", "y"], "x + y"));
    }
}
