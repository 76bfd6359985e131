//! Binary forms, Sylvester resultants and the discriminant.
//!
//! A `BinaryForm` of degree d stores d+1 coefficients; `coeffs[k]` is the
//! coefficient of x0^(d-k) x1^k. The nominal degree is part of the data, so
//! forms with vanishing leading coefficient keep their projective root at
//! infinity.

use crate::poly::MultiPoly;
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum BinaryFormError {
    #[error("zero polynomial has no resultant")]
    ZeroInput,
    #[error("discriminant requires degree >= 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("polynomial is not a binary form in the two requested variables")]
    NotBinary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    /// Build from coefficients; the list length fixes the degree.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree + 1 coefficients");
        BinaryForm { coeffs }
    }

    /// Extract a binary form in (v0, v1) from a homogeneous polynomial that
    /// involves only those two registry variables.
    pub fn from_multipoly(p: &MultiPoly, v0: &str, v1: &str) -> Result<Self, BinaryFormError> {
        let vars = p.vars();
        let i0 = vars.iter().position(|v| v == v0).ok_or(BinaryFormError::NotBinary)?;
        let i1 = vars.iter().position(|v| v == v1).ok_or(BinaryFormError::NotBinary)?;
        let d = p.total_degree() as usize;
        let mut coeffs = vec![Scalar::zero(); d + 1];
        for (e, c) in p.terms() {
            for (j, &k) in e.iter().enumerate() {
                if j != i0 && j != i1 && k > 0 {
                    return Err(BinaryFormError::NotBinary);
                }
            }
            if (e[i0] + e[i1]) as usize != d {
                return Err(BinaryFormError::NotBinary);
            }
            coeffs[e[i1] as usize] = c.clone();
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Value at (x0, x1).
    pub fn eval(&self, x0: &Scalar, x1: &Scalar) -> Scalar {
        let d = self.degree();
        let mut acc = Scalar::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let mut t = c.clone();
            for _ in 0..d - k {
                t *= x0;
            }
            for _ in 0..k {
                t *= x1;
            }
            acc += t;
        }
        acc
    }

    /// Partial derivative with respect to x0.
    pub fn diff_x0(&self) -> BinaryForm {
        let d = self.degree();
        assert!(d >= 1);
        let mut out = vec![Scalar::zero(); d];
        for k in 0..d {
            out[k] = &self.coeffs[k] * Scalar::from_integer(BigInt::from(d - k));
        }
        BinaryForm { coeffs: out }
    }

    /// Partial derivative with respect to x1.
    pub fn diff_x1(&self) -> BinaryForm {
        let d = self.degree();
        assert!(d >= 1);
        let mut out = vec![Scalar::zero(); d];
        for k in 0..d {
            out[k] = &self.coeffs[k + 1] * Scalar::from_integer(BigInt::from(k + 1));
        }
        BinaryForm { coeffs: out }
    }

    /// Dehomogenize at x1 = 1: ascending univariate coefficients in t = x0.
    pub fn to_unipoly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// gcd as binary forms: shared monomial factors in x0/x1 plus the gcd of
    /// the dehomogenized parts, rehomogenized. Degree 0 means coprime.
    pub fn gcd(&self, other: &BinaryForm) -> BinaryForm {
        fn split(f: &BinaryForm) -> (usize, usize, UniPoly) {
            // f = x0^a * x1^b * core(x0, x1) with core(0,1) != 0 != core(1,0)
            let lead_zeros = f.coeffs.iter().take_while(|c| c.is_zero()).count();
            let trail_zeros = f.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
            // coeffs[k] ~ x0^(d-k) x1^k: leading zeros are missing x0-heavy
            // terms, i.e. a factor x1^lead_zeros; trailing zeros give x0^t.
            let core: Vec<Scalar> = f.coeffs[lead_zeros..f.coeffs.len() - trail_zeros].to_vec();
            (trail_zeros, lead_zeros, UniPoly::new(core.into_iter().rev().collect()))
        }
        if self.is_zero() || other.is_zero() {
            return BinaryForm::new(vec![Scalar::zero()]);
        }
        let (a0, b0, u) = split(self);
        let (a1, b1, v) = split(other);
        let g = u.gcd(&v);
        let x0_pow = a0.min(a1);
        let x1_pow = b0.min(b1);
        let gd = g.degree();
        let d = gd + x0_pow + x1_pow;
        let mut coeffs = vec![Scalar::zero(); d + 1];
        for (i, c) in g.coeffs().iter().enumerate() {
            // g coefficient of t^i, t = x0/x1 on the core of degree gd:
            // core coefficient of x0^i x1^(gd-i) -> index k = gd - i
            coeffs[gd - i + x1_pow] = c.clone();
        }
        BinaryForm { coeffs }
    }
}

/// Sylvester resultant of two binary forms (or univariate polynomials given
/// as binary forms), exact. The matrix uses the nominal degrees, so common
/// projective roots at infinity are detected.
pub fn resultant_univariate(p: &BinaryForm, q: &BinaryForm) -> Result<Scalar, BinaryFormError> {
    if p.is_zero() || q.is_zero() {
        return Err(BinaryFormError::ZeroInput);
    }
    if p.degree() == 0 || q.degree() == 0 {
        // resultant of a constant c against degree-n form is c^n
        let (c, n) = if p.degree() == 0 {
            (p.coeffs[0].clone(), q.degree())
        } else {
            (q.coeffs[0].clone(), p.degree())
        };
        let mut acc = Scalar::from_integer(1.into());
        for _ in 0..n {
            acc *= &c;
        }
        return Ok(acc);
    }
    Ok(UniPoly::resultant_with_degrees(p.coeffs(), q.coeffs()))
}

/// Discriminant of a binary form, normalized as the Sylvester resultant of
/// its two partial derivatives: disc(f) := res(f_{x0}, f_{x1}).
///
/// This differs from the classical b^2 - 4ac by a fixed constant per degree
/// (for a x0^2 + b x0 x1 + c x1^2 it gives 4ac - b^2); only vanishing
/// matters here, and disc(f) = 0 exactly when f has a multiple projective
/// root (characteristic zero).
pub fn discriminant_binary(f: &BinaryForm) -> Result<Scalar, BinaryFormError> {
    if f.degree() < 2 {
        return Err(BinaryFormError::DegreeTooSmall(f.degree()));
    }
    let f0 = f.diff_x0();
    let f1 = f.diff_x1();
    if f0.is_zero() || f1.is_zero() {
        // a pure power c x0^d or c x1^d (or the zero form): multiple root
        return Ok(Scalar::zero());
    }
    resultant_univariate(&f0, &f1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn bf(cs: &[i64]) -> BinaryForm {
        BinaryForm::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn resultant_sign_convention() {
        // x - 1 and x - 2 as binary forms x0 - x1 and x0 - 2 x1
        let r = resultant_univariate(&bf(&[1, -1]), &bf(&[1, -2])).unwrap();
        assert_eq!(r, int(-1));
    }

    #[test]
    fn resultant_vanishes_on_shared_root() {
        let p = bf(&[1, -3, 2]); // (x0 - x1)(x0 - 2x1)
        assert_eq!(resultant_univariate(&p, &p).unwrap(), int(0));
        assert!(resultant_univariate(&BinaryForm::new(vec![int(0)]), &p).is_err());
    }

    #[test]
    fn resultant_of_form_and_derivative_detects_multiple_root() {
        // f = (x - 3)^2 (x + 1) homogenized: x0^3 - 5x0^2x1 + 3x0x1^2 + 9x1^3
        let f = bf(&[1, -5, 3, 9]);
        let r = resultant_univariate(&f, &f.diff_x0()).unwrap();
        assert_eq!(r, int(0));
    }

    #[test]
    fn quadratic_discriminant_up_to_constant() {
        // a x0^2 + b x0 x1 + c x1^2 with (a,b,c) = (1,5,6): disc = 4ac - b^2
        let f = bf(&[1, 5, 6]);
        assert_eq!(discriminant_binary(&f).unwrap(), int(24 - 25));
        let square = bf(&[1, -2, 1]); // (x0 - x1)^2
        assert_eq!(discriminant_binary(&square).unwrap(), int(0));
        assert!(discriminant_binary(&bf(&[1, 1])).is_err());
    }

    #[test]
    fn discriminant_zero_iff_gcd_with_derivative_nonconstant() {
        // 200 random products of linear binary forms: oracle cross-check.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..200 {
            let nf = rng.gen_range(2..5usize);
            let factors: Vec<BinaryForm> = (0..nf)
                .map(|_| bf(&[rng.gen_range(-4..5i64), rng.gen_range(-4..5i64)]))
                .filter(|b| !b.is_zero())
                .collect();
            if factors.len() < 2 {
                continue;
            }
            let mut f = factors[0].clone();
            for g in &factors[1..] {
                let d = f.degree() + g.degree();
                let mut coeffs = vec![int(0); d + 1];
                for (i, a) in f.coeffs().iter().enumerate() {
                    for (j, b) in g.coeffs().iter().enumerate() {
                        coeffs[i + j] += a * b;
                    }
                }
                f = BinaryForm::new(coeffs);
            }
            if f.degree() < 2 {
                continue;
            }
            let disc = discriminant_binary(&f).unwrap();
            // independent multiple-root oracle: a finite multiple root shows
            // up in gcd(f(t,1), f'(t)); a multiple root at infinity means
            // the two leading coefficients both vanish
            let u = f.to_unipoly();
            let finite_multiple = u.gcd(&u.derivative()).degree() > 0;
            let infinite_multiple = f.coeffs()[0].is_zero() && f.coeffs()[1].is_zero();
            assert_eq!(
                disc.is_zero(),
                finite_multiple || infinite_multiple,
                "disc/gcd oracle disagreement for {:?}",
                f
            );
        }
    }

    #[test]
    fn gcd_reduction_with_monomial_factors() {
        // x0^2 * (x0 + x1) and x0 * (x0 + x1)^2 share x0*(x0+x1)
        let a = BinaryForm::new(vec![int(1), int(1), int(0)]);
        let a = {
            let mut c = vec![int(0); 4];
            for (i, x) in a.coeffs().iter().enumerate() {
                c[i] = x.clone();
            }
            BinaryForm::new(c)
        }; // x0^3 + x0^2 x1
        let b = BinaryForm::new(vec![int(1), int(2), int(1), int(0)]); // x0(x0+x1)^2
        let g = a.gcd(&b);
        assert_eq!(g.degree(), 2);
        assert_eq!(
            g.coeffs(),
            &[frac(1, 1), frac(1, 1), frac(0, 1)],
            "expected x0^2 + x0 x1"
        );
    }
}
