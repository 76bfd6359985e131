//! Univariate rational functions, stored with coprime numerator and
//! denominator and a positive-leading-coefficient denominator.

use crate::scalar::{to_f64, Scalar};
use crate::unipoly::UniPoly;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum RatFunError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("evaluation at a pole")]
    Pole,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, RatFunError> {
        if den.is_zero() {
            return Err(RatFunError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() > 0 {
            (num.exact_div(&g), den.exact_div(&g))
        } else {
            (num, den)
        };
        let lead = den.leading();
        if lead.is_negative() {
            num = num.scale(&-Scalar::one());
            den = den.scale(&-Scalar::one());
        }
        Ok(RationalFunction { num, den })
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn eval(&self, t: &Scalar) -> Result<Scalar, RatFunError> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(RatFunError::Pole);
        }
        Ok(self.num.eval(t) / d)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    /// Derivative (n'd - nd')/d^2, reduced.
    pub fn derivative(&self) -> RationalFunction {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        RationalFunction::new(n, self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// Reciprocal; fails on the zero function.
    pub fn reciprocal(&self) -> Result<RationalFunction, RatFunError> {
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    /// True when numerator and denominator agree with the other side after
    /// cross multiplication.
    pub fn equal_cross_multiplied(&self, other: &RationalFunction) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn to_f64_pair(&self, t: f64) -> (f64, f64) {
        (self.num.eval_f64(t), self.den.eval_f64(t))
    }

    /// First nonzero value direction: used for sign bookkeeping in plots.
    pub fn denominator_sign_f64(&self, t: f64) -> f64 {
        to_f64(&Scalar::one()) * self.den.eval_f64(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn upoly(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn reduction_to_lowest_terms() {
        // (t^2 - 1) / (t - 1) reduces to t + 1
        let f = RationalFunction::new(upoly(&[-1, 0, 1]), upoly(&[-1, 1])).unwrap();
        assert_eq!(f.numerator(), &upoly(&[1, 1]));
        assert_eq!(f.denominator().degree(), 0);
        assert!(RationalFunction::new(upoly(&[1]), UniPoly::zero()).is_err());
    }

    #[test]
    fn evaluation_and_poles() {
        let f = RationalFunction::new(upoly(&[1]), upoly(&[-2, 1])).unwrap();
        assert_eq!(f.eval(&int(3)).unwrap(), int(1));
        assert!(f.eval(&int(2)).is_err());
        assert_eq!(f.eval(&frac(5, 2)).unwrap(), int(2));
    }

    #[test]
    fn derivative_of_quotient() {
        // d/dt (t^2/(t+1)) = (t^2 + 2t)/(t+1)^2
        let f = RationalFunction::new(upoly(&[0, 0, 1]), upoly(&[1, 1])).unwrap();
        let d = f.derivative();
        assert_eq!(d.numerator(), &upoly(&[0, 2, 1]));
        assert_eq!(d.denominator(), &upoly(&[1, 2, 1]));
    }
}
