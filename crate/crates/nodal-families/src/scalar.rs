//! Exact rational scalars.
//!
//! Every coefficient in this crate is an arbitrary-precision rational,
//! stored in lowest terms with positive denominator (maintained by
//! `num_rational`). Floating point only appears in the numeric search
//! oracle, never here.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Scalar = num_rational::BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar n/d. Panics on d = 0.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ScalarParseError(pub String);

/// Parse "p/q" or "p".
pub fn parse_scalar(s: &str) -> Result<Scalar, ScalarParseError> {
    s.trim()
        .parse::<Scalar>()
        .map_err(|_| ScalarParseError(s.to_string()))
}

/// Canonical text form: "p/q", or "p" when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

/// Exact square root, when the argument is a perfect square of a rational.
pub fn sqrt_exact(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    let rn = x.numer().sqrt();
    let rd = x.denom().sqrt();
    if &(&rn * &rn) == x.numer() && &(&rd * &rd) == x.denom() {
        Some(Scalar::new(rn, rd))
    } else {
        None
    }
}

/// Best rational approximation with denominator bound, by continued fractions.
/// Returns None for non-finite input or when no candidate is within `tol`.
pub fn snap_to_rational(x: f64, max_den: u64, tol: f64) -> Option<Scalar> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if !a.is_finite() {
            break;
        }
        let ab = BigInt::from(a as i64);
        let p2 = &ab * &p1 + &p0;
        let q2 = &ab * &q1 + &q0;
        if q2.magnitude().to_u64().map_or(true, |q| q > max_den) {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    if q1.sign() == Sign::NoSign {
        return None;
    }
    let cand = Scalar::new(p1, q1);
    if (to_f64(&cand) - x).abs() <= tol {
        Some(cand)
    } else {
        None
    }
}

/// Serde adaptor: scalars cross the wire as "p/q" strings, bit-exact.
pub mod serde_scalar {
    use super::{parse_scalar, Scalar};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let raw = String::deserialize(d)?;
        parse_scalar(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let x = frac(4, -6);
        assert_eq!(x.to_string(), "-2/3");
        assert_eq!(parse_scalar("-2/3").unwrap(), x);
    }

    #[test]
    fn sqrt_exact_detects_squares() {
        assert_eq!(sqrt_exact(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(sqrt_exact(&frac(2, 1)), None);
        assert_eq!(sqrt_exact(&frac(-1, 1)), None);
        assert_eq!(sqrt_exact(&frac(88425, 2500)), None);
    }

    #[test]
    fn snap_recovers_simple_fractions() {
        let x = 16.0 / 9.0 + 3e-13;
        assert_eq!(snap_to_rational(x, 1000, 1e-9), Some(frac(16, 9)));
        assert_eq!(snap_to_rational(0.3219463873877434, 40, 1e-9), None);
    }
}
